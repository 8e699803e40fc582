#ifndef GTLAX_GTLAX_HPP
#define GTLAX_GTLAX_HPP

#include "curves.hpp"
#include "eig.hpp"
#include "errors.hpp"
#include "flow.hpp"
#include "gtsystem.hpp"
#include "matrix.hpp"
#include "orbit.hpp"
#include "polynomial.hpp"
#include "polytope.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

#endif
