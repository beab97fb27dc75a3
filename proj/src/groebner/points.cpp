#include "normclass/groebner/points.hpp"

#include "normclass/errors.hpp"
#include "normclass/groebner/roots.hpp"

#include <algorithm>
#include <unordered_map>

namespace normclass {

UPoly minimal_polynomial(const GroebnerBasis& gb, std::size_t var) {
    std::vector<Monomial> basis = standard_monomials(gb);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    std::size_t d = basis.size();
    if (d == 0) return UPoly::constant(1);

    std::vector<std::vector<GaussianRational>> columns;
    MultiPoly power = MultiPoly::constant(gb.nvars(), 1);
    MultiPoly u = MultiPoly::variable(gb.nvars(), var);
    for (std::size_t k = 0; k <= d; ++k) {
        std::vector<GaussianRational> v(d);
        for (const auto& t : power.terms()) v[index.at(t.m)] = t.c;
        columns.push_back(std::move(v));
        Matrix m(d, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t r = 0; r < d; ++r) m(r, c) = columns[c][r];
        Matrix ker = m.kernel();
        if (ker.cols() > 0) {
            std::vector<GaussianRational> coeffs(columns.size());
            for (std::size_t c = 0; c < columns.size(); ++c) coeffs[c] = ker(c, 0);
            return UPoly(coeffs).monic();
        }
        power = gb.normal_form(power * u);
    }
    throw DomainError("minimal polynomial search overran the algebra dimension");
}

std::vector<std::vector<GaussianRational>> affine_rational_points(const std::vector<MultiPoly>& generators,
                                                                  std::size_t nvars) {
    if (nvars == 0) {
        bool unit = std::any_of(generators.begin(), generators.end(), [](const MultiPoly& g) { return !g.is_zero(); });
        if (unit) return {};
        return {{}};
    }
    std::vector<MultiPoly> gens;
    for (const auto& g : generators)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw NotZeroDimensional("ideal is not zero-dimensional");
    GroebnerBasis gb = groebner_basis(gens, MonomialOrder::grevlex());
    if (gb.is_unit()) return {};

    std::size_t last = nvars - 1;
    RootSearch search = gaussian_rational_roots(minimal_polynomial(gb, last));
    std::vector<std::vector<GaussianRational>> out;
    std::vector<MultiPoly> basis = gb.polynomials();
    for (const auto& r : search.roots) {
        MultiPoly value = MultiPoly::constant(nvars, r);
        std::vector<MultiPoly> reduced;
        for (const auto& p : basis) reduced.push_back(p.substitute(last, value).with_arity(last));
        for (auto& head : affine_rational_points(reduced, last)) {
            head.push_back(r);
            out.push_back(std::move(head));
        }
    }
    return out;
}

std::vector<ProjPoint> rational_points(const IdealHandle& j) {
    std::size_t n = j.nvars();
    std::vector<ProjPoint> out;
    for (std::size_t k = 0; k < n; ++k) {
        // Points whose first nonzero coordinate is x_k, with x_k = 1.
        std::size_t m = n - k - 1;
        std::vector<MultiPoly> assignment(n);
        for (std::size_t v = 0; v < k; ++v) assignment[v] = MultiPoly(m);
        assignment[k] = MultiPoly::constant(m, 1);
        for (std::size_t v = k + 1; v < n; ++v) assignment[v] = MultiPoly::variable(m, v - k - 1);
        std::vector<MultiPoly> affine;
        for (const auto& g : j.generators()) affine.push_back(g.substitute(assignment));
        for (const auto& tail : affine_rational_points(affine, m)) {
            std::vector<GaussianRational> coords(n, GaussianRational(0));
            coords[k] = 1;
            for (std::size_t v = 0; v < m; ++v) coords[k + 1 + v] = tail[v];
            out.emplace_back(std::move(coords));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ZeroDimSolution rational_points_zero_dim(const IdealHandle& j, GenericDraw& draw, unsigned retries) {
    ZeroDimSolution sol;
    int dim = ideal_dimension(j);
    if (dim > 0) throw NotZeroDimensional("ideal is not zero-dimensional");
    if (dim < 0) return sol;
    ChartAlgebra chart = ChartAlgebra::choose(j, draw, retries);
    sol.degree = chart.dimension();
    std::size_t found = 0;
    for (const auto& p : rational_points(j)) {
        std::size_t mult = chart.local_multiplicity(p);
        found += mult;
        sol.points.push_back({p, mult});
    }
    if (found > sol.degree) throw DomainError("point multiplicities exceed the degree");
    sol.residual = sol.degree - found;
    return sol;
}

} // namespace normclass
