#pragma once

#include <vector>

#include "parker/ratpoly.hpp"

namespace parker {

/// Monic irreducible factors over Q of a monic, integral, squarefree f,
/// sorted by (degree, coefficients). Factors modulo a small prime, lifts
/// quadratically (Hensel) past the Mignotte-type bound and recombines by trial
/// division. Throws InputError if f is not monic integral squarefree.
std::vector<RatPoly> factor_over_q(const RatPoly& f);

}  // namespace parker
