#include "normclass/geometry/similitude.hpp"

#include "normclass/errors.hpp"

namespace normclass {

Similitude::Similitude(std::vector<std::vector<GaussianRational>> a, std::vector<GaussianRational> b)
    : a_(std::move(a)), b_(std::move(b)) {
    std::size_t n = b_.size();
    if (n != 2 && n != 3) throw DomainError("similitudes act on the plane or on space");
    if (a_.size() != n) throw DomainError("similitude matrix has the wrong size");
    for (const auto& row : a_)
        if (row.size() != n) throw DomainError("similitude matrix has the wrong size");
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            GaussianRational dot = 0;
            for (std::size_t k = 0; k < n; ++k) dot += a_[r][k] * a_[c][k];
            if (r == 0 && c == 0) lambda_ = dot;
            GaussianRational want = r == c ? lambda_ : GaussianRational(0);
            if (dot != want) throw DomainError("A A^T is not a scalar matrix");
        }
    }
    if (lambda_.is_zero()) throw DomainError("A A^T is not a scalar matrix");
}

Similitude Similitude::identity(std::size_t dim) {
    std::vector<std::vector<GaussianRational>> a(dim, std::vector<GaussianRational>(dim, GaussianRational(0)));
    for (std::size_t k = 0; k < dim; ++k) a[k][k] = 1;
    return Similitude(std::move(a), std::vector<GaussianRational>(dim, GaussianRational(0)));
}

Similitude Similitude::random(std::size_t dim, GenericDraw& draw) {
    std::vector<std::vector<GaussianRational>> a;
    if (dim == 3) {
        long q0 = draw.next_nonzero(), q1 = draw.next(), q2 = draw.next(), q3 = draw.next();
        a = {{q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3, 2 * (q1 * q2 - q0 * q3), 2 * (q1 * q3 + q0 * q2)},
             {2 * (q1 * q2 + q0 * q3), q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3, 2 * (q2 * q3 - q0 * q1)},
             {2 * (q1 * q3 - q0 * q2), 2 * (q2 * q3 + q0 * q1), q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3}};
    } else if (dim == 2) {
        long p = draw.next_nonzero(), q = draw.next();
        a = {{p, -q}, {q, p}};
    } else {
        throw DomainError("similitudes act on the plane or on space");
    }
    std::vector<GaussianRational> b;
    for (std::size_t k = 0; k < dim; ++k) b.emplace_back(draw.next());
    return Similitude(std::move(a), std::move(b));
}

std::vector<std::vector<GaussianRational>> Similitude::projective_matrix() const {
    std::size_t n = dim();
    std::vector<std::vector<GaussianRational>> m(n + 1, std::vector<GaussianRational>(n + 1, GaussianRational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = a_[r][c];
        m[r][n] = b_[r];
    }
    m[n][n] = 1;
    return m;
}

std::vector<std::vector<GaussianRational>> Similitude::inverse_matrix() const {
    // [[A, b], [0, 1]]^{-1} = [[A^T / lambda, -A^T b / lambda], [0, 1]]
    std::size_t n = dim();
    GaussianRational inv = lambda_.inverse();
    std::vector<std::vector<GaussianRational>> m(n + 1, std::vector<GaussianRational>(n + 1, GaussianRational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        GaussianRational shift = 0;
        for (std::size_t c = 0; c < n; ++c) {
            m[r][c] = a_[c][r] * inv;
            shift -= m[r][c] * b_[c];
        }
        m[r][n] = shift;
    }
    m[n][n] = 1;
    return m;
}

MultiPoly apply_linear_change(const MultiPoly& f, const std::vector<std::vector<GaussianRational>>& m) {
    std::size_t n = f.nvars();
    if (m.size() != n) throw DomainError("matrix size does not match the polynomial ring");
    std::vector<MultiPoly> assignment;
    for (std::size_t r = 0; r < n; ++r) {
        MultiPoly row(n);
        for (std::size_t c = 0; c < n; ++c)
            if (!m[r][c].is_zero()) row += MultiPoly::variable(n, c) * m[r][c];
        assignment.push_back(std::move(row));
    }
    return f.substitute(assignment);
}

MultiPoly apply_similitude(const MultiPoly& f, const Similitude& s) {
    if (f.nvars() != s.dim() + 1) throw DomainError("similitude dimension does not match the polynomial ring");
    return apply_linear_change(f, s.inverse_matrix());
}

} // namespace normclass
