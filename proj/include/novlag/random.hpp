#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "novlag/diffpoly.hpp"

namespace novlag {

using Rng = std::mt19937_64;

struct RandomPolyOptions {
    int max_var = 3;
    int max_degree = 3;   // standard degree of each monomial, >= 1
    int max_order = 2;
    int max_terms = 3;
    int coeff_range = 10; // integer coefficients in [-range, range] \ {0}
};

/// Random element of F{X} without constant term.
DiffPoly random_diffpoly(Rng& rng, const RandomPolyOptions& opts = {});

/// Random combination of monomials of the component (lambda, d). May be zero
/// only if the component is empty.
DiffPoly random_homogeneous(Rng& rng, std::span<const int> lambda, int d, int max_terms = 4,
                            int coeff_range = 10);

}  // namespace novlag
