#include "normclass/groebner/roots.hpp"

#include "normclass/errors.hpp"

#include <algorithm>
#include <optional>

namespace normclass {

namespace {

struct GaussInt {
    BigInt a, b;
};

GaussInt mul(const GaussInt& x, const GaussInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

BigInt norm(const GaussInt& x) { return x.a * x.a + x.b * x.b; }

// x / y when exact.
std::optional<GaussInt> divide(const GaussInt& x, const GaussInt& y) {
    BigInt n = norm(y);
    BigInt re = x.a * y.a + x.b * y.b;
    BigInt im = x.b * y.a - x.a * y.b;
    if (re % n != 0 || im % n != 0) return std::nullopt;
    return GaussInt{re / n, im / n};
}

constexpr unsigned long kTrialLimit = 1ul << 20;
constexpr std::size_t kMaxDivisors = 4096;
constexpr std::size_t kMaxCandidates = 1u << 20;

// Rational prime factors of n > 0; nullopt if a cofactor resists trial division
// and is not a probable prime.
std::optional<std::vector<BigInt>> rational_primes(BigInt n) {
    std::vector<BigInt> primes;
    for (unsigned long p = 2; p < kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > n) break;
        if (n % p == 0) {
            primes.emplace_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
        primes.push_back(n);
    }
    return primes;
}

// Writes p = 1 mod 4 as a^2 + b^2.
GaussInt split_prime(const BigInt& p) {
    BigInt c = 2, x;
    BigInt e = (p - 1) / 4;
    for (;; ++c) {
        if (mpz_jacobi(c.get_mpz_t(), p.get_mpz_t()) == -1) break;
    }
    mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    BigInt r0 = p, r1 = x;
    while (r1 * r1 > p) {
        BigInt r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    BigInt rest = p - r1 * r1, b;
    mpz_sqrt(b.get_mpz_t(), rest.get_mpz_t());
    if (b * b != rest) throw DomainError("sum of two squares failed");
    return {r1, b};
}

// Divisors of x up to units; nullopt if factoring failed or there are too many.
std::optional<std::vector<GaussInt>> divisors(const GaussInt& x) {
    BigInt n = norm(x);
    auto primes = rational_primes(n);
    if (!primes) return std::nullopt;
    std::vector<std::pair<GaussInt, unsigned>> factors;
    GaussInt rest = x;
    auto strip = [&](const GaussInt& pi) {
        unsigned e = 0;
        while (auto q = divide(rest, pi)) {
            rest = *q;
            ++e;
        }
        if (e) factors.emplace_back(pi, e);
    };
    for (const auto& p : *primes) {
        if (p == 2) {
            strip({1, 1});
        } else if (p % 4 == 3) {
            strip({p, 0});
        } else {
            GaussInt pi = split_prime(p);
            strip(pi);
            strip({pi.a, -pi.b});
        }
    }
    std::vector<GaussInt> out{{1, 0}};
    for (const auto& [pi, e] : factors) {
        std::size_t base = out.size();
        GaussInt power{1, 0};
        for (unsigned k = 1; k <= e; ++k) {
            power = mul(power, pi);
            for (std::size_t j = 0; j < base; ++j) out.push_back(mul(out[j], power));
            if (out.size() > kMaxDivisors) return std::nullopt;
        }
    }
    return out;
}

GaussianRational to_gaussian(const GaussInt& x) { return {Rational(x.a), Rational(x.b)}; }

} // namespace

RootSearch gaussian_rational_roots(const UPoly& p_in) {
    RootSearch result;
    if (p_in.degree() <= 0) return result;
    UPoly p = p_in;
    UPoly g = UPoly::gcd(p, p.derivative());
    if (g.degree() > 0) p = UPoly::divmod(p, g).first;
    p = p.monic();

    if (p.coeff(0).is_zero()) {
        result.roots.push_back(0);
        p = UPoly::divmod(p, UPoly::linear_root(0)).first;
    }
    if (p.degree() == 1) {
        result.roots.push_back(-p.coeff(0) / p.coeff(1));
    } else if (p.degree() > 1) {
        // Clear denominators to get Gaussian-integer coefficients.
        BigInt l = 1;
        for (const auto& c : p.coeffs()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
        }
        auto integral = [&](const GaussianRational& c) {
            Rational re = c.re() * l, im = c.im() * l;
            return GaussInt{re.get_num(), im.get_num()};
        };
        GaussInt trailing = integral(p.coeff(0));
        GaussInt leading = integral(p.leading());
        auto num = divisors(trailing);
        auto den = divisors(leading);
        if (!num || !den || num->size() * den->size() * 4 > kMaxCandidates) {
            result.complete = false;
        } else {
            const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            std::size_t want = static_cast<std::size_t>(p.degree());
            for (const auto& a : *num) {
                for (const auto& b : *den) {
                    GaussianRational base = to_gaussian(a) / to_gaussian(b);
                    for (const auto& u : units) {
                        GaussianRational r = base * to_gaussian(u);
                        if (!p.evaluate(r).is_zero()) continue;
                        if (std::find(result.roots.begin(), result.roots.end(), r) == result.roots.end())
                            result.roots.push_back(r);
                    }
                    if (result.roots.size() >= want + (p_in.coeff(0).is_zero() ? 1 : 0)) break;
                }
            }
        }
    }
    std::sort(result.roots.begin(), result.roots.end(),
              [](const GaussianRational& a, const GaussianRational& b) { return canonical_less(a, b); });
    return result;
}

} // namespace normclass
