#pragma once

#include "normclass/geometry/normal_lines.hpp"
#include "normclass/groebner/points.hpp"

#include <optional>
#include <string>

namespace normclass {

enum class BaseTag { Singular, ContactAtInfinity, UmbilicalContact };

std::string to_string(BaseTag tag);

struct TaggedPoint {
    ProjPoint point;
    BaseTag tag;
};

struct BaseLocusReport {
    /// Ideal of the six (possibly reduced) alpha components.
    IdealHandle base_ideal;
    /// Dimension of B = V(alpha) before any reduction.
    int dim_b = -1;
    /// Common factor of the alpha components when dim B = 2.
    std::optional<MultiPoly> h;
    /// The alpha components after dividing out h (equal to alpha otherwise).
    PluckerVector alpha;
    /// Q(i)-rational points of B cap S (of the reduced base locus when h is set).
    std::vector<TaggedPoint> points_on_s;
    /// Length of the scheme B cap S not carried by the listed points.
    std::size_t residual = 0;
};

struct ReducedAlpha {
    MultiPoly h;
    PluckerVector alpha_tilde;
};

/// Splits alpha = H * alpha~ with H the gcd of the six components.
/// Throws HypothesisViolation unless dim B = 2.
ReducedAlpha reduced_alpha(const MultiPoly& f);

/// Classifies a point of B_S: singular (full gradient vanishes), contact at
/// infinity (F_x = F_y = F_z = 0, F_t != 0) or umbilical contact (m = n_S(m)).
std::optional<BaseTag> classify_base_point(const MultiPoly& f, const ProjPoint& m);

/// Base ideal, its dimension, the reduction when dim B = 2, and the tagged
/// rational points of B_S. Throws HypothesisViolation when B_S is not finite.
BaseLocusReport base_locus(const MultiPoly& f, GenericDraw& draw, unsigned retries = 3);

} // namespace normclass
