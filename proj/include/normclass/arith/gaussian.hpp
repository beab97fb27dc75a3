#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace normclass {

/// Arbitrary-precision rational in canonical form (GMP keeps gcd = 1, den > 0).
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const Rational& q);

/// Exact element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(int v) : re_(v) {}
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// a * conj(a), always a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order used only for canonical sorting (re first, then im).
    friend bool canonical_less(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

    GaussianRational pow(unsigned e) const;

    /// Text form shared with the CLI grammar: "0", "-3/2", "i", "1-2*i", "3/2+1/2*i".
    std::string to_string() const;

    /// Parses the coefficient grammar: sums and products of integers, p/q and i.
    static GaussianRational parse(std::string_view text);

    std::size_t hash() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& a);

} // namespace normclass
