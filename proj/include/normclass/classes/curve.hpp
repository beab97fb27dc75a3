#pragma once

#include "normclass/classes/surface.hpp"

#include <optional>

namespace normclass {

struct InfinityInvariants {
    /// Sum over C cap l_inf of (i_P(C, l_inf) - mu_P(C)).
    int omega = 0;
    int mu_i = 0;
    int mu_j = 0;
};

struct CurveReport {
    MultiPoly g;
    int d = 0;
    int d_dual = 0;
    InfinityInvariants infinity;
    long c_formula = 0;
    std::optional<long> c_direct;
    std::pair<std::uint64_t, std::uint64_t> seeds_used{0, 0};
};

/// Throws HypothesisViolation unless g is a homogeneous polynomial in (x,y,z)
/// of degree >= 2 not divisible by z.
void require_curve_input(const MultiPoly& g);

/// Number of tangents through a generic point: length of (G, q . grad G)
/// minus its part at the singular points of C.
int curve_dual_degree(const MultiPoly& g, const PipelineOptions& opts = {});

/// Omega(C, l_inf), mu_I, mu_J from the binary form G(x, y, 0). Points of
/// C cap l_inf that are not Q(i)-rational are handled through the
/// square-free factors of the binary form: along a factor q of multiplicity
/// e, the number of roots where mu >= m is the degree of
/// gcd(q, partial derivatives of order < m), so the sum is exact.
InfinityInvariants curve_infinity_invariants(const MultiPoly& g);

/// c = d + d_dual - Omega - mu_I - mu_J.
long curve_formula_value(int d, int d_dual, const InfinityInvariants& inf);

/// d^2 minus the part of (G, L o N_C) on the base locus (-zG_y, zG_x, xG_y - yG_x),
/// for a generic L under two independent draws.
long curve_normal_class_direct(const MultiPoly& g, const PipelineOptions& opts = {});

/// Both routes; throws DomainError if they disagree.
CurveReport curve_normal_class(const MultiPoly& g, const PipelineOptions& opts = {});

} // namespace normclass
