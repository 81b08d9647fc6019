#pragma once

/// @file bring.hpp
/// @brief Everything: arithmetic, polynomials, elimination, the Tschirnhaus
///        pipeline, numeric roots, verification and JSON I/O.

#include "bring/config.hpp"
#include "bring/elimination.hpp"
#include "bring/errors.hpp"
#include "bring/json_io.hpp"
#include "bring/poly.hpp"
#include "bring/quartic.hpp"
#include "bring/quintic.hpp"
#include "bring/roots.hpp"
#include "bring/scalar.hpp"
#include "bring/solvers.hpp"
#include "bring/steps.hpp"
#include "bring/verify.hpp"
