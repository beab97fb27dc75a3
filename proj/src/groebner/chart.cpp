#include "normclass/groebner/chart.hpp"

#include "normclass/errors.hpp"

namespace normclass {

namespace {

MultiPoly linear_form(std::size_t n, const std::vector<GaussianRational>& form) {
    MultiPoly l(n);
    for (std::size_t k = 0; k < n; ++k)
        if (!form[k].is_zero()) l += MultiPoly::variable(n, k) * form[k];
    return l;
}

} // namespace

ChartAlgebra ChartAlgebra::on_chart(const IdealHandle& j, std::vector<GaussianRational> form) {
    ChartAlgebra a;
    a.n_ = j.nvars();
    if (form.size() != a.n_) throw DomainError("chart form has the wrong length");
    a.form_ = std::move(form);
    bool found = false;
    for (std::size_t k = a.n_; k-- > 0;) {
        if (!a.form_[k].is_zero()) {
            a.pivot_ = k;
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("chart form is zero");

    std::vector<MultiPoly> affine;
    for (const auto& g : j.generators()) affine.push_back(a.dehomogenize(g));
    if (affine.empty()) throw NotZeroDimensional("ideal is not zero-dimensional");
    a.gb_ = groebner_basis(affine, MonomialOrder::grevlex());
    a.basis_ = standard_monomials(a.gb_);
    for (std::size_t k = 0; k < a.basis_.size(); ++k) a.index_.emplace(a.basis_[k], k);
    for (std::size_t v = 0; v + 1 < a.n_; ++v)
        a.coordinate_matrices_.push_back(a.multiplication_matrix_affine(MultiPoly::variable(a.n_ - 1, v)));
    return a;
}

std::optional<ChartAlgebra> ChartAlgebra::build(const IdealHandle& j, std::vector<GaussianRational> form) {
    if (ideal_dimension(j.with(linear_form(j.nvars(), form))) != -1) return std::nullopt;
    return on_chart(j, std::move(form));
}

ChartAlgebra ChartAlgebra::choose(const IdealHandle& j, GenericDraw& draw, unsigned retries) {
    std::size_t n = j.nvars();
    for (std::size_t k = n; k-- > 0;) {
        std::vector<GaussianRational> form(n, GaussianRational(0));
        form[k] = 1;
        if (auto a = build(j, form)) return std::move(*a);
    }
    for (unsigned attempt = 0; attempt < retries; ++attempt) {
        std::vector<GaussianRational> form(n);
        for (auto& c : form) c = GaussianRational(draw.next_nonzero());
        if (auto a = build(j, form)) return std::move(*a);
    }
    throw GenericityExhausted("no chart form avoided the points of the scheme");
}

MultiPoly ChartAlgebra::dehomogenize(const MultiPoly& f) const {
    std::size_t m = n_ - 1;
    std::vector<MultiPoly> assignment(n_);
    MultiPoly pivot_value = MultiPoly::constant(m, 1);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n_; ++k) {
        if (k == pivot_) continue;
        assignment[k] = MultiPoly::variable(m, idx++);
        if (!form_[k].is_zero()) pivot_value -= assignment[k] * form_[k];
    }
    assignment[pivot_] = pivot_value * form_[pivot_].inverse();
    return f.substitute(assignment);
}

std::vector<GaussianRational> ChartAlgebra::coordinates(const MultiPoly& nf) const {
    std::vector<GaussianRational> v(basis_.size());
    for (const auto& t : nf.terms()) {
        auto it = index_.find(t.m);
        if (it == index_.end()) throw DomainError("normal form left the standard monomials");
        v[it->second] = t.c;
    }
    return v;
}

Matrix ChartAlgebra::multiplication_matrix_affine(const MultiPoly& f) const {
    std::size_t d = basis_.size();
    Matrix m(d, d);
    for (std::size_t col = 0; col < d; ++col) {
        auto v = coordinates(gb_.normal_form(f.mul_term(basis_[col], 1)));
        for (std::size_t row = 0; row < d; ++row) m(row, col) = v[row];
    }
    return m;
}

Matrix ChartAlgebra::multiplication_matrix(const MultiPoly& f) const {
    return multiplication_matrix_affine(dehomogenize(f));
}

std::vector<GaussianRational> ChartAlgebra::chart_coordinates(const ProjPoint& p) const {
    if (p.size() != n_) throw DomainError("point has the wrong arity");
    GaussianRational l = 0;
    for (std::size_t k = 0; k < n_; ++k) l += form_[k] * p[k];
    if (l.is_zero()) throw UnsupportedPoint("point lies outside the chart");
    GaussianRational inv = l.inverse();
    std::vector<GaussianRational> u;
    for (std::size_t k = 0; k < n_; ++k)
        if (k != pivot_) u.push_back(p[k] * inv);
    return u;
}

std::size_t ChartAlgebra::local_multiplicity(const ProjPoint& p) const {
    auto u = chart_coordinates(p);
    if (basis_.empty()) return 0;
    std::vector<Matrix> ops;
    for (std::size_t v = 0; v < u.size(); ++v) ops.push_back(coordinate_matrices_[v].shifted(u[v]));
    if (ops.empty()) return basis_.size();
    return joint_generalized_kernel(ops).cols();
}

std::size_t ChartAlgebra::multiplicity_on(std::span<const MultiPoly> k) const {
    if (basis_.empty() || k.empty()) return 0;
    std::vector<Matrix> ops;
    for (const auto& g : k) ops.push_back(multiplication_matrix(g));
    return joint_generalized_kernel(ops).cols();
}

std::size_t degree_zero_dim(const IdealHandle& j, GenericDraw& draw, unsigned retries) {
    int dim = ideal_dimension(j);
    if (dim > 0) throw NotZeroDimensional("ideal is not zero-dimensional");
    if (dim < 0) return 0;
    return ChartAlgebra::choose(j, draw, retries).dimension();
}

MultiplicityResult local_multiplicity(const IdealHandle& j, const ProjPoint& p) {
    if (p.size() != j.nvars()) throw DomainError("point has the wrong arity");
    std::vector<GaussianRational> form(j.nvars(), GaussianRational(0));
    form[p.pivot()] = 1;
    ChartAlgebra a = ChartAlgebra::on_chart(j, form);
    return {p, a.local_multiplicity(p)};
}

} // namespace normclass
