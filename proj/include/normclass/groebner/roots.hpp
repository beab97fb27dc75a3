#pragma once

#include "normclass/poly/univariate.hpp"

#include <vector>

namespace normclass {

struct RootSearch {
    /// Distinct roots in Q(i), canonically sorted.
    std::vector<GaussianRational> roots;
    /// False when the divisor enumeration had to give up (huge or
    /// unfactorable coefficients); roots may then be missing.
    bool complete = true;
};

/// Roots of p lying in Q(i). After clearing denominators, a root u*a/b has
/// a dividing the trailing and b the leading Gaussian-integer coefficient, so
/// the candidates are enumerated from the Gaussian prime factorizations of
/// those two coefficients.
RootSearch gaussian_rational_roots(const UPoly& p);

} // namespace normclass
