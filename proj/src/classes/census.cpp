#include "normclass/classes/census.hpp"

#include "normclass/classes/surface.hpp"
#include "normclass/errors.hpp"
#include "normclass/groebner/points.hpp"

#include <algorithm>
#include <map>

namespace normclass {

std::string to_string(PointKind kind) {
    switch (kind) {
    case PointKind::Smooth:
        return "smooth";
    case PointKind::OrdinaryMultiple:
        return "ordinary-multiple";
    case PointKind::OrdinaryCusp:
        return "ordinary-cusp";
    case PointKind::NonOrdinary:
        return "non-ordinary";
    }
    return "unknown";
}

namespace {

// G in the chart of P's pivot coordinate, translated so that P is the origin.
struct LocalExpansion {
    MultiPoly local; // arity 2, variables u_a, u_b
    std::size_t a = 0, b = 0;
};

LocalExpansion expand_at(const MultiPoly& g, const ProjPoint& p) {
    if (g.nvars() != 3 || p.size() != 3) throw DomainError("plane curves live in (x,y,z)");
    std::size_t k = p.pivot();
    LocalExpansion e;
    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < 3; ++v)
        if (v != k) others.push_back(v);
    e.a = others[0];
    e.b = others[1];
    std::vector<MultiPoly> assignment(3);
    assignment[k] = MultiPoly::constant(2, 1);
    assignment[e.a] = MultiPoly::constant(2, p[e.a]) + MultiPoly::variable(2, 0);
    assignment[e.b] = MultiPoly::constant(2, p[e.b]) + MultiPoly::variable(2, 1);
    e.local = g.substitute(assignment);
    return e;
}

// f(s, 1) for a binary form f in (u_a, u_b).
UPoly dehomogenized(const MultiPoly& form) {
    std::vector<GaussianRational> c;
    for (const auto& t : form.terms()) {
        if (c.size() <= t.m.e[0]) c.resize(t.m.e[0] + 1, GaussianRational(0));
        c[t.m.e[0]] += t.c;
    }
    return UPoly(c);
}

bool squarefree_form(const MultiPoly& form, unsigned k) {
    UPoly p = dehomogenized(form);
    int kp = p.degree();
    if (static_cast<int>(k) - kp > 1) return false;
    if (kp <= 1) return true;
    return UPoly::gcd(p, p.derivative()).degree() == 0;
}

GaussianRational eval2(const MultiPoly& f, const GaussianRational& ua, const GaussianRational& ub) {
    std::vector<GaussianRational> pt{ua, ub};
    return f.evaluate(pt);
}

MultiPoly umbilic_conic() { return parse_polynomial("x^2 + y^2 + z^2", 3); }

bool on_umbilic(const ProjPoint& p) { return umbilic_conic().evaluate(p.span()).is_zero(); }

// Whether the tangent line of the umbilic at P (on the umbilic) lies in the
// tangent cone of G at P.
bool umbilic_tangent_in_cone(const MultiPoly& g, const ProjPoint& p) {
    LocalExpansion e = expand_at(g, p);
    int k = e.local.low_degree();
    MultiPoly cone = e.local.homogeneous_part(static_cast<unsigned>(k));
    // Tangent line: P_a u_a + P_b u_b = 0, direction (-P_b, P_a).
    return eval2(cone, -p[e.b], p[e.a]).is_zero();
}

} // namespace

unsigned point_multiplicity(const MultiPoly& g, const ProjPoint& p) {
    if (!g.evaluate(p.span()).is_zero()) return 0;
    std::map<std::array<unsigned, 3>, MultiPoly> level{{{0, 0, 0}, g}};
    for (unsigned m = 1; m <= static_cast<unsigned>(std::max(0, g.total_degree())); ++m) {
        std::map<std::array<unsigned, 3>, MultiPoly> next;
        for (const auto& [key, h] : level) {
            for (std::size_t v = 0; v < g.nvars(); ++v) {
                auto k2 = key;
                ++k2[v];
                if (next.count(k2)) continue;
                MultiPoly d = h.derivative(v);
                if (!d.evaluate(p.span()).is_zero()) return m;
                next.emplace(k2, std::move(d));
            }
        }
        level = std::move(next);
    }
    throw DomainError("the zero polynomial has no point multiplicity");
}

PlanarPointClass classify_planar_point(const MultiPoly& g, const ProjPoint& p) {
    LocalExpansion e = expand_at(g, p);
    if (!e.local.constant_term().is_zero()) throw DomainError("point is not on the curve");
    int low = e.local.low_degree();
    if (low < 0) throw DomainError("the zero polynomial has no singularities");
    unsigned k = static_cast<unsigned>(low);
    if (k == 1) return {PointKind::Smooth, 1};
    MultiPoly cone = e.local.homogeneous_part(k);
    if (squarefree_form(cone, k)) return {PointKind::OrdinaryMultiple, k};
    if (k == 2) {
        // cone = c * l^2; find the direction v with l(v) = 0.
        UPoly q = dehomogenized(cone);
        GaussianRational va = 1, vb = 0;
        if (q.degree() == 2) {
            // c (s - r)^2 with r = -q1 / (2 q2)
            va = -q.coeff(1) / (GaussianRational(2) * q.coeff(2));
            vb = 1;
        }
        MultiPoly cubic = e.local.homogeneous_part(3);
        if (!eval2(cubic, va, vb).is_zero()) return {PointKind::OrdinaryCusp, 2};
    }
    return {PointKind::NonOrdinary, k};
}

Census census_surface_infinity(const MultiPoly& f) {
    require_surface_input(f);
    Census c;
    c.d = f.total_degree();
    GenericDraw draw(0);

    std::vector<MultiPoly> grad;
    for (std::size_t v = 0; v < 4; ++v) grad.push_back(f.derivative(v));
    if (ideal_dimension(IdealHandle(4, grad)) != -1) c.unresolved.push_back("the surface is singular");

    MultiPoly g = f.substitute(3, MultiPoly(4)).with_arity(3);
    if (g.is_zero()) {
        c.unresolved.push_back("the plane at infinity is a component of the surface");
        return c;
    }

    std::vector<MultiPoly> sing_gens{g, g.derivative(0), g.derivative(1), g.derivative(2)};
    IdealHandle sing(3, sing_gens);
    std::vector<ProjPoint> singular;
    if (ideal_dimension(sing) > 0) {
        c.unresolved.push_back("S_inf has a multiple component");
    } else {
        ZeroDimSolution sol = rational_points_zero_dim(sing, draw);
        if (sol.residual > 0) c.unresolved.push_back("S_inf has singular points outside Q(i)");
        for (const auto& mp : sol.points) {
            const ProjPoint& p = mp.point;
            singular.push_back(p);
            CensusPoint cp{p, classify_planar_point(g, p), on_umbilic(p), "singular"};
            switch (cp.cls.kind) {
            case PointKind::OrdinaryMultiple:
                (cp.on_umbilic ? c.m_tilde : c.m_star)[cp.cls.multiplicity] += 1;
                break;
            case PointKind::OrdinaryCusp:
                (cp.on_umbilic ? c.kappa_tilde : c.kappa_star) += 1;
                break;
            default:
                c.unresolved.push_back("non-ordinary singular point " + p.to_string());
                break;
            }
            if (cp.on_umbilic && umbilic_tangent_in_cone(g, p))
                c.unresolved.push_back("the umbilic tangent lies in the tangent cone at " + p.to_string());
            c.points.push_back(std::move(cp));
        }
    }

    // Points where S_inf meets the umbilic with parallel gradients.
    MultiPoly q = umbilic_conic();
    MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
    MultiPoly gx = g.derivative(0), gy = g.derivative(1), gz = g.derivative(2);
    IdealHandle contact(3, {g, q, gx * y - gy * x, gx * z - gz * x, gy * z - gz * y});
    if (ideal_dimension(contact) > 0) {
        c.unresolved.push_back("S_inf has infinitely many contact points with the umbilic");
    } else {
        ZeroDimSolution sol = rational_points_zero_dim(contact, draw);
        if (sol.residual > 0) c.unresolved.push_back("contact points with the umbilic outside Q(i)");
        IdealHandle meet(3, {g, q});
        for (const auto& mp : sol.points) {
            if (std::find(singular.begin(), singular.end(), mp.point) != singular.end()) continue;
            CensusPoint cp{mp.point, {PointKind::Smooth, 1}, true, "contact"};
            if (local_multiplicity(meet, mp.point).multiplicity == 2)
                ++c.c_inf;
            else
                c.unresolved.push_back("non-ordinary contact with the umbilic at " + mp.point.to_string());
            c.points.push_back(std::move(cp));
        }
    }
    return c;
}

long closed_form_value(const Census& c) {
    if (!c.unresolved.empty()) throw NotCertified("census has unresolved entries: " + c.unresolved.front());
    long d = c.d;
    long v = d * d * d - d * d + d;
    for (const auto& [k, n] : c.m_star) v -= static_cast<long>((k - 1) * (k - 1) * n);
    for (const auto& [k, n] : c.m_tilde) v -= static_cast<long>(k * (k - 1) * n);
    return v - 2L * c.kappa_star - 3L * c.kappa_tilde - c.c_inf;
}

} // namespace normclass
