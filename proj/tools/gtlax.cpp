// placeholder; full CLI comes after the library settles
int main() { return 0; }
