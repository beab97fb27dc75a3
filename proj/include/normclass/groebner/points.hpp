#pragma once

#include "normclass/groebner/chart.hpp"
#include "normclass/poly/univariate.hpp"

#include <vector>

namespace normclass {

struct ZeroDimSolution {
    /// Q(i)-rational points of V(J) with their local lengths, canonically sorted.
    std::vector<MultiplicityResult> points;
    /// Degree of J.
    std::size_t degree = 0;
    /// degree minus the multiplicities of the listed points; 0 means the
    /// enumeration is complete.
    std::size_t residual = 0;
};

/// Q(i)-rational points of a zero-dimensional homogeneous ideal, found chart
/// by chart (x_0 = ... = x_{k-1} = 0, x_k = 1) by solving triangularly with
/// minimal polynomials of the coordinate functions.
std::vector<ProjPoint> rational_points(const IdealHandle& j);

/// Points with multiplicities and the residual degree.
ZeroDimSolution rational_points_zero_dim(const IdealHandle& j, GenericDraw& draw, unsigned retries = 3);

/// Roots in Q(i)^m of a zero-dimensional affine ideal in m variables.
std::vector<std::vector<GaussianRational>> affine_rational_points(const std::vector<MultiPoly>& generators,
                                                                  std::size_t nvars);

/// Minimal polynomial of multiplication by variable `var` on k[u]/J for a
/// zero-dimensional affine basis.
UPoly minimal_polynomial(const GroebnerBasis& gb, std::size_t var);

} // namespace normclass
