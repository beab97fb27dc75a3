#pragma once

#include "normclass/poly/monomial.hpp"

#include <cstdint>

namespace normclass {

/// Monomial orders used by the engine.
///
/// `Elimination` compares the total degree in the variables of `elim_mask`
/// first and breaks ties by grevlex on the whole monomial; any polynomial
/// whose leading monomial avoids the masked variables lies in the
/// elimination subring.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Elimination };

    Kind kind = Kind::Grevlex;
    std::uint32_t elim_mask = 0;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder eliminate(std::uint32_t mask) { return {Kind::Elimination, mask}; }

    /// 1 if a > b, -1 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case Kind::Lex:
            for (std::size_t k = 0; k < kMaxVars; ++k)
                if (a.e[k] != b.e[k]) return a.e[k] > b.e[k] ? 1 : -1;
            return 0;
        case Kind::Elimination: {
            unsigned da = 0, db = 0;
            for (std::size_t k = 0; k < kMaxVars; ++k) {
                if (elim_mask & (1u << k)) {
                    da += a.e[k];
                    db += b.e[k];
                }
            }
            if (da != db) return da > db ? 1 : -1;
            return grevlex_compare(a, b);
        }
        case Kind::Grevlex:
        default:
            return grevlex_compare(a, b);
        }
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

} // namespace normclass
