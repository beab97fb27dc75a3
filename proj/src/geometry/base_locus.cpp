#include "normclass/geometry/base_locus.hpp"

#include "normclass/errors.hpp"

namespace normclass {

std::string to_string(BaseTag tag) {
    switch (tag) {
    case BaseTag::Singular:
        return "singular";
    case BaseTag::ContactAtInfinity:
        return "contact-at-infinity";
    case BaseTag::UmbilicalContact:
        return "umbilical-contact";
    }
    return "unknown";
}

namespace {

IdealHandle ideal_of(const PluckerVector& w) { return IdealHandle(4, std::vector<MultiPoly>(w.begin(), w.end())); }

ReducedAlpha split_common_factor(const PluckerVector& alpha) {
    MultiPoly h(4);
    for (const auto& w : alpha) {
        if (w.is_zero()) continue;
        h = h.is_zero() ? w.monic() : gcd(h, w);
    }
    if (h.is_zero() || h.is_constant())
        throw DomainError("dim B = 2 but the alpha components have no common factor");
    ReducedAlpha r{h, {}};
    for (std::size_t k = 0; k < 6; ++k) {
        auto q = MultiPoly::divide_exact(alpha[k], h);
        if (!q) throw DomainError("common factor does not divide an alpha component");
        r.alpha_tilde[k] = *q;
    }
    return r;
}

} // namespace

ReducedAlpha reduced_alpha(const MultiPoly& f) {
    PluckerVector alpha = build_alpha(f);
    if (ideal_dimension(ideal_of(alpha)) != 2)
        throw HypothesisViolation("reduced polars need a two-dimensional base locus");
    return split_common_factor(alpha);
}

std::optional<BaseTag> classify_base_point(const MultiPoly& f, const ProjPoint& m) {
    GaussianRational grad[4];
    for (std::size_t v = 0; v < 4; ++v) grad[v] = f.derivative(v).evaluate(m.span());
    bool spatial_zero = grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero();
    if (spatial_zero && grad[3].is_zero()) return BaseTag::Singular;
    if (spatial_zero) return BaseTag::ContactAtInfinity;
    // m = n_S(m): m lies at infinity and is proportional to (F_x, F_y, F_z).
    if (!m[3].is_zero()) return std::nullopt;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            if (m[a] * grad[b] != m[b] * grad[a]) return std::nullopt;
    return BaseTag::UmbilicalContact;
}

BaseLocusReport base_locus(const MultiPoly& f, GenericDraw& draw, unsigned retries) {
    BaseLocusReport r;
    PluckerVector alpha = build_alpha(f);
    r.dim_b = ideal_dimension(ideal_of(alpha));
    r.alpha = alpha;
    if (r.dim_b >= 2) {
        ReducedAlpha red = split_common_factor(alpha);
        r.h = red.h;
        r.alpha = red.alpha_tilde;
    }
    r.base_ideal = ideal_of(r.alpha);
    IdealHandle on_s = r.base_ideal.with(f);
    if (ideal_dimension(on_s) > 0) throw HypothesisViolation("the base locus meets the surface in a curve");
    ZeroDimSolution sol = rational_points_zero_dim(on_s, draw, retries);
    r.residual = sol.residual;
    for (const auto& p : sol.points) {
        auto tag = classify_base_point(f, p.point);
        if (!tag) throw DomainError("base point " + p.point.to_string() + " fits no base-locus class");
        r.points_on_s.push_back({p.point, *tag});
    }
    return r;
}

} // namespace normclass
