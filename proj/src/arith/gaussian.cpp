#include "normclass/arith/gaussian.hpp"

#include "normclass/detail/expr_parser.hpp"
#include "normclass/errors.hpp"

#include <functional>
#include <ostream>

namespace normclass {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(unsigned e) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    if (imag[0] == '-') return re_.get_str() + imag;
    return re_.get_str() + "+" + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    detail::ExprParser<GaussianRational> parser(
        text,
        [](std::string_view digits) { return GaussianRational(Rational(BigInt(std::string(digits)))); },
        [](std::string_view id) -> GaussianRational {
            if (id == "i") return GaussianRational::i();
            throw ParseError("unknown symbol '" + std::string(id) + "' in coefficient");
        },
        [](const GaussianRational& a, const GaussianRational& b) {
            if (b.is_zero()) throw ParseError("division by zero in coefficient");
            return a / b;
        },
        [](const GaussianRational& a, unsigned e) { return a.pow(e); });
    return parser.parse();
}

std::size_t GaussianRational::hash() const {
    std::hash<std::string> h;
    return h(re_.get_str()) * 31u + h(im_.get_str());
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << a.to_string(); }

} // namespace normclass
