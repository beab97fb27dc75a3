#include "normclass/geometry/normal_lines.hpp"

#include "normclass/errors.hpp"

namespace normclass {

namespace {

void require_surface(const MultiPoly& f) {
    if (f.nvars() != 4) throw DomainError("surface equations live in (x,y,z,t)");
    if (!f.is_homogeneous()) throw HypothesisViolation("surface equation is not homogeneous");
}

} // namespace

std::optional<ProjPoint> normal_direction(const MultiPoly& f, const ProjPoint& m) {
    require_surface(f);
    std::vector<GaussianRational> n(4, GaussianRational(0));
    for (std::size_t v = 0; v < 3; ++v) n[v] = f.derivative(v).evaluate(m.span());
    if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) return std::nullopt;
    return ProjPoint(std::move(n));
}

PluckerVector build_alpha(const MultiPoly& f) {
    require_surface(f);
    MultiPoly x = MultiPoly::variable(4, 0), y = MultiPoly::variable(4, 1), z = MultiPoly::variable(4, 2),
              t = MultiPoly::variable(4, 3);
    MultiPoly fx = f.derivative(0), fy = f.derivative(1), fz = f.derivative(2);
    return {x * fy - y * fx, x * fz - z * fx, -(t * fx), y * fz - z * fy, -(t * fy), -(t * fz)};
}

MultiPoly plucker_relation(const PluckerVector& w) { return w[0] * w[5] - w[1] * w[4] + w[2] * w[3]; }

NuMatrix nu_from_alpha(const PluckerVector& w) {
    MultiPoly zero(w[0].nvars());
    return {{{zero, w[5], -w[4], w[3]},
             {-w[5], zero, w[2], -w[1]},
             {w[4], -w[2], zero, w[0]},
             {-w[3], w[1], -w[0], zero}}};
}

PolarSystem polar_system(const MultiPoly& f, const PluckerVector& alpha, const Covector& a) {
    PolarSystem s{f, alpha, nu_from_alpha(alpha), a, {}};
    for (const auto& row : s.nu) {
        MultiPoly g(f.nvars());
        for (std::size_t j = 0; j < 4; ++j)
            if (!a[j].is_zero()) g += row[j] * a[j];
        s.polar_generators.push_back(std::move(g));
    }
    return s;
}

PolarSystem polar_system(const MultiPoly& f, const Covector& a) { return polar_system(f, build_alpha(f), a); }

IdealHandle normal_polar(const MultiPoly& f, const Covector& a) {
    bool zero = true;
    for (const auto& c : a) zero = zero && c.is_zero();
    if (zero) throw DomainError("covector must be nonzero");
    return IdealHandle(4, polar_system(f, a).polar_generators);
}

Covector random_covector(GenericDraw& draw) {
    Covector a;
    for (auto& c : a) c = GaussianRational(draw.next_nonzero());
    return a;
}

std::array<MultiPoly, 3> curve_normal_map(const MultiPoly& g) {
    if (g.nvars() != 3) throw DomainError("curve equations live in (x,y,z)");
    if (!g.is_homogeneous()) throw HypothesisViolation("curve equation is not homogeneous");
    MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
    MultiPoly gx = g.derivative(0), gy = g.derivative(1);
    return {-(z * gy), z * gx, x * gy - y * gx};
}

} // namespace normclass
