#pragma once

#include "normclass/arith/gaussian.hpp"

#include <string>
#include <vector>

namespace normclass {

/// Dense univariate polynomial over Q(i); coeffs[k] multiplies u^k.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<GaussianRational> coeffs);

    static UPoly constant(const GaussianRational& c) { return UPoly({c}); }
    /// The monic linear polynomial u - r.
    static UPoly linear_root(const GaussianRational& r) { return UPoly({-r, GaussianRational(1)}); }

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const GaussianRational& leading() const { return c_.back(); }
    GaussianRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(0); }

    GaussianRational evaluate(const GaussianRational& u) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; returns {quotient, remainder}.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(UPoly a, UPoly b);

    /// Square-free decomposition (Yun): result[e-1] is the product of the
    /// distinct monic irreducible factors occurring with multiplicity e.
    std::vector<UPoly> squarefree_decomposition() const;
    /// Multiplicity of r as a root.
    unsigned root_multiplicity(const GaussianRational& r) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

} // namespace normclass
