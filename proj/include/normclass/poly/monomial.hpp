#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace normclass {

/// Upper bound on ring arity: four projective coordinates plus auxiliary
/// elimination variables.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector; unused trailing slots stay zero.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    unsigned degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }

    bool is_one() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint16_t>(a.e[k] + b.e[k]);
        return r;
    }

    /// a / b, assuming b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t k = 0; k < kMaxVars; ++k) r.e[k] = static_cast<std::uint16_t>(a.e[k] - b.e[k]);
        return r;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t k = 0; k < kMaxVars; ++k)
            if (e[k] > m.e[k]) return false;
        return true;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t k = 0; k < kMaxVars; ++k) r.e[k] = a.e[k] > b.e[k] ? a.e[k] : b.e[k];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t k = 0; k < kMaxVars; ++k)
            if (a.e[k] != 0 && b.e[k] != 0) return false;
        return true;
    }

    static Monomial variable(std::size_t index, unsigned power = 1) {
        Monomial r;
        r.e[index] = static_cast<std::uint16_t>(power);
        return r;
    }
};

/// Graded reverse lexicographic comparison: 1 if a > b, -1 if a < b, 0 if equal.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = kMaxVars; k-- > 0;) {
        if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? 1 : -1;
    }
    return 0;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

} // namespace normclass
