#pragma once

#include "normclass/groebner/buchberger.hpp"

#include <memory>
#include <span>
#include <vector>

namespace normclass {

/// Generating set of an ideal plus a lazily computed grevlex basis.
///
/// Handles are immutable. Copies share the cache, which is filled at most
/// once under a mutex, so handles may be read from several threads.
class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(std::size_t nvars, std::vector<MultiPoly> generators);

    std::size_t nvars() const { return nvars_; }
    const std::vector<MultiPoly>& generators() const { return generators_; }

    /// Reduced grevlex basis (cached).
    const GroebnerBasis& basis() const;
    GroebnerBasis basis(MonomialOrder order) const;

    bool is_unit() const { return basis().is_unit(); }
    bool is_homogeneous() const;
    bool contains(const MultiPoly& p) const { return basis().reduces_to_zero(p); }

    /// Ideal generated by these generators and `extra`.
    IdealHandle with(std::span<const MultiPoly> extra) const;
    IdealHandle with(const MultiPoly& extra) const { return with(std::span<const MultiPoly>(&extra, 1)); }

private:
    struct Cache;
    std::size_t nvars_ = 0;
    std::vector<MultiPoly> generators_;
    std::shared_ptr<Cache> cache_;
};

bool same_ideal(const IdealHandle& a, const IdealHandle& b);

/// Krull dimension of k[x]/J from the leading-term ideal (largest set of
/// variables containing the support of no leading monomial); -1 for the unit ideal.
int affine_dimension(const IdealHandle& j);
/// Dimension of the projective scheme of a homogeneous ideal; -1 when empty.
int ideal_dimension(const IdealHandle& j);

/// Degree of the projective scheme of a homogeneous ideal, read from the
/// Hilbert series of its leading-term ideal. 0 for the empty scheme.
std::size_t hilbert_degree(const IdealHandle& j);

/// Standard monomials of a zero-dimensional affine basis, in ascending
/// grevlex order. Throws NotZeroDimensional otherwise.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

/// J : g^inf by adjoining w and eliminating it from J + (1 - w g).
IdealHandle saturate(const IdealHandle& j, const MultiPoly& g);
/// J : K^inf as the intersection of the saturations by each generator of K.
IdealHandle saturate(const IdealHandle& j, const IdealHandle& k);
/// I cap J by eliminating s from s I + (1 - s) J.
IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);

} // namespace normclass
