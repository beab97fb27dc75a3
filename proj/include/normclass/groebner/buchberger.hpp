#pragma once

#include "normclass/groebner/order.hpp"
#include "normclass/poly/multipoly.hpp"

#include <span>
#include <vector>

namespace normclass {

/// Reduced Groebner basis: monic elements, pairwise fully reduced, sorted by
/// ascending leading monomial. Each element's terms are kept in descending
/// order with respect to the basis' monomial order.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(MonomialOrder order, std::size_t nvars, std::vector<std::vector<Term>> elements);

    const MonomialOrder& order() const { return order_; }
    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return elements_.size(); }
    bool is_unit() const;

    const Monomial& leading_monomial(std::size_t k) const { return elements_[k].front().m; }
    const std::vector<Term>& element_terms(std::size_t k) const { return elements_[k]; }
    MultiPoly element(std::size_t k) const;
    std::vector<MultiPoly> polynomials() const;

    /// Fully reduced normal form of p (returned in canonical grevlex storage).
    MultiPoly normal_form(const MultiPoly& p) const;
    bool reduces_to_zero(const MultiPoly& p) const { return normal_form(p).is_zero(); }

    /// Elements that only involve variables outside `mask`.
    std::vector<MultiPoly> elements_free_of(std::uint32_t mask) const;

private:
    MonomialOrder order_;
    std::size_t nvars_ = 0;
    std::vector<std::vector<Term>> elements_;
};

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and the
/// sugar selection strategy. Returns the reduced basis of the ideal generated
/// by `generators` (all of one arity). The empty/zero input yields the empty basis.
GroebnerBasis groebner_basis(std::span<const MultiPoly> generators, MonomialOrder order);

/// S-polynomial of two polynomials with respect to `order`.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order);

namespace detail {
std::vector<Term> sorted_terms(const MultiPoly& p, const MonomialOrder& order);
std::vector<Term> reduce_fully(std::vector<Term> p, const std::vector<const std::vector<Term>*>& basis,
                               const MonomialOrder& order);
} // namespace detail

} // namespace normclass
