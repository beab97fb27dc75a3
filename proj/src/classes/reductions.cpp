#include "normclass/classes/reductions.hpp"

#include "normclass/errors.hpp"

namespace normclass {

std::optional<MultiPoly> cylinder_reduce(const MultiPoly& f) {
    if (f.nvars() != 4) throw DomainError("surface equations live in (x,y,z,t)");
    if (f.is_zero() || f.depends_on(2)) return std::nullopt;
    const std::size_t target[4] = {0, 1, 3, 2};
    return f.remap(3, target);
}

std::optional<MultiPoly> revolution_reduce(const MultiPoly& f) {
    if (f.nvars() != 4) throw DomainError("surface equations live in (x,y,z,t)");
    if (f.is_zero()) return std::nullopt;
    // Profile h(x, z, t) = F(x, 0, z, t) must be even in x.
    MultiPoly h = f.substitute(1, MultiPoly(4));
    std::vector<Term> g_terms; // G(u, z, t) with u in slot 0
    for (const auto& t : h.terms()) {
        if (t.m.e[0] % 2 != 0) return std::nullopt;
        Term r = t;
        r.m.e[0] = static_cast<std::uint16_t>(t.m.e[0] / 2);
        g_terms.push_back(std::move(r));
    }
    MultiPoly g = MultiPoly::from_terms(4, std::move(g_terms));
    MultiPoly x = MultiPoly::variable(4, 0), y = MultiPoly::variable(4, 1);
    if (g.substitute(0, x * x + y * y) != f) return std::nullopt;
    const std::size_t target[4] = {0, 3, 1, 2};
    return h.remap(3, target);
}

} // namespace normclass
