#pragma once

#include "normclass/groebner/random.hpp"
#include "normclass/poly/multipoly.hpp"

#include <vector>

namespace normclass {

/// Affine orthogonal similitude x -> A x + b of the affine part of P^n
/// (n = 2 or 3), acting projectively through the block matrix [[A, b], [0, 1]].
class Similitude {
public:
    /// Throws DomainError unless A A^T = lambda Id with lambda != 0.
    Similitude(std::vector<std::vector<GaussianRational>> a, std::vector<GaussianRational> b);

    static Similitude identity(std::size_t dim);
    /// Random rational similitude: for dim 3 the integer rotation-times-scale
    /// of a quaternion with entries in [-97, 97]; for dim 2 the matrix
    /// [[p, -q], [q, p]]. Translations are drawn from the same range.
    static Similitude random(std::size_t dim, GenericDraw& draw);

    std::size_t dim() const { return b_.size(); }
    const std::vector<std::vector<GaussianRational>>& linear() const { return a_; }
    const std::vector<GaussianRational>& translation() const { return b_; }
    const GaussianRational& lambda() const { return lambda_; }

    /// The (dim+1) x (dim+1) projective matrix.
    std::vector<std::vector<GaussianRational>> projective_matrix() const;
    /// Its inverse, using A^{-1} = A^T / lambda.
    std::vector<std::vector<GaussianRational>> inverse_matrix() const;

private:
    std::vector<std::vector<GaussianRational>> a_;
    std::vector<GaussianRational> b_;
    GaussianRational lambda_;
};

/// F composed with the inverse map, so V(result) is the image of V(F).
MultiPoly apply_similitude(const MultiPoly& f, const Similitude& s);

/// F composed with an arbitrary invertible matrix m (x -> m x).
MultiPoly apply_linear_change(const MultiPoly& f, const std::vector<std::vector<GaussianRational>>& m);

} // namespace normclass
