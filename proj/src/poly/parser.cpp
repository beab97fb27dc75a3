#include "normclass/detail/expr_parser.hpp"
#include "normclass/errors.hpp"
#include "normclass/poly/multipoly.hpp"

namespace normclass {

MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names) {
    const std::size_t n = names.size();
    detail::ExprParser<MultiPoly> parser(
        text,
        [n](std::string_view digits) {
            return MultiPoly::constant(n, GaussianRational(Rational(BigInt(std::string(digits)))));
        },
        [n, names](std::string_view id) -> MultiPoly {
            if (id == "i") return MultiPoly::constant(n, GaussianRational::i());
            for (std::size_t v = 0; v < n; ++v)
                if (names[v] == id) return MultiPoly::variable(n, v);
            throw ParseError("unknown variable '" + std::string(id) + "'");
        },
        [](const MultiPoly& a, const MultiPoly& b) {
            if (!b.is_constant() || b.is_zero()) throw ParseError("division is only allowed by nonzero constants");
            return a * b.constant_term().inverse();
        },
        [](const MultiPoly& a, unsigned e) { return a.pow(e); });
    return parser.parse();
}

MultiPoly parse_polynomial(std::string_view text, std::size_t nvars) {
    auto names = default_variable_names(nvars);
    return parse_polynomial(text, names);
}

} // namespace normclass
