#include "normclass/poly/univariate.hpp"

#include "normclass/errors.hpp"

#include <algorithm>

namespace normclass {

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational UPoly::evaluate(const GaussianRational& u) const {
    GaussianRational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * u + c_[k];
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussianRational(static_cast<long>(k)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    GaussianRational inv = leading().inverse();
    std::vector<GaussianRational> out = c_;
    for (auto& x : out) x *= inv;
    return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
    return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("univariate division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<GaussianRational> rem = a.c_;
    std::vector<GaussianRational> quo(a.c_.size() - b.c_.size() + 1);
    GaussianRational inv = b.leading().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
        GaussianRational q = rem[k + b.c_.size() - 1] * inv;
        if (!q.is_zero())
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
        quo[k] = std::move(q);
    }
    rem.resize(b.c_.size() - 1);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<UPoly> UPoly::squarefree_decomposition() const {
    std::vector<UPoly> out;
    if (degree() < 1) return out;
    UPoly f = monic();
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UPoly g = gcd(b, d);
        out.push_back(g);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

unsigned UPoly::root_multiplicity(const GaussianRational& r) const {
    if (is_zero()) throw DomainError("root multiplicity of the zero polynomial");
    unsigned m = 0;
    UPoly p = *this;
    UPoly lin = linear_root(r);
    while (p.degree() >= 1) {
        auto [q, rem] = divmod(p, lin);
        if (!rem.is_zero()) break;
        p = std::move(q);
        ++m;
    }
    return m;
}

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[k].to_string() + ")";
        if (k > 0) out += "*u^" + std::to_string(k);
    }
    return out;
}

} // namespace normclass
