#pragma once

#include "normclass/geometry/proj_point.hpp"
#include "normclass/groebner/ideal.hpp"
#include "normclass/groebner/matrix.hpp"
#include "normclass/groebner/random.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace normclass {

struct MultiplicityResult {
    ProjPoint point;
    std::size_t multiplicity = 0;
};

/// Quotient algebra k[u]/J_aff of a zero-dimensional homogeneous ideal J,
/// dehomogenized on the affine chart {l != 0} of a linear form l.
///
/// When J + (l) defines the empty scheme, every point of V(J) lies in the
/// chart and dimension() is the degree of J. The algebra splits as the sum of
/// the local rings at those points, so lengths at a point (or at all points
/// of a subvariety) are dimensions of joint generalized eigenspaces of
/// multiplication matrices.
class ChartAlgebra {
public:
    /// Algebra of the affine part of V(J) on the chart of `form`, whether or
    /// not V(J) meets the hyperplane form = 0.
    static ChartAlgebra on_chart(const IdealHandle& j, std::vector<GaussianRational> form);
    /// Same, but returns nullopt unless J + (form) is empty.
    static std::optional<ChartAlgebra> build(const IdealHandle& j, std::vector<GaussianRational> form);
    /// Tries the coordinate charts x_k = 1 (last variable first), then
    /// random forms. Throws GenericityExhausted after `retries` random forms.
    static ChartAlgebra choose(const IdealHandle& j, GenericDraw& draw, unsigned retries = 3);

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<GaussianRational>& form() const { return form_; }
    std::size_t ambient_arity() const { return n_; }

    /// Dehomogenization f / l^deg(f) in chart coordinates.
    MultiPoly dehomogenize(const MultiPoly& f) const;
    /// Matrix of multiplication by the dehomogenization of homogeneous f.
    Matrix multiplication_matrix(const MultiPoly& f) const;
    /// Chart coordinates of P. Throws UnsupportedPoint when l(P) = 0.
    std::vector<GaussianRational> chart_coordinates(const ProjPoint& p) const;

    /// Length of the local ring of J at P (0 when P is not on V(J)).
    std::size_t local_multiplicity(const ProjPoint& p) const;
    /// Sum of the local lengths over the points of V(J) inside V(K).
    std::size_t multiplicity_on(std::span<const MultiPoly> k) const;

private:
    ChartAlgebra() = default;
    Matrix multiplication_matrix_affine(const MultiPoly& f) const;
    std::vector<GaussianRational> coordinates(const MultiPoly& normal_form) const;

    std::size_t n_ = 0;     // projective arity
    std::size_t pivot_ = 0; // index with nonzero form coefficient eliminated on the chart
    std::vector<GaussianRational> form_;
    GroebnerBasis gb_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
    std::vector<Matrix> coordinate_matrices_;
};

/// Degree of a zero-dimensional homogeneous ideal: the dimension of its
/// quotient algebra on a chart containing all of V(J).
std::size_t degree_zero_dim(const IdealHandle& j, GenericDraw& draw, unsigned retries = 3);

/// Local length of J at P, computed on the coordinate chart of P's first
/// nonzero coordinate.
MultiplicityResult local_multiplicity(const IdealHandle& j, const ProjPoint& p);

} // namespace normclass
