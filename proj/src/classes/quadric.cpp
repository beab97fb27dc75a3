#include "normclass/classes/quadric.hpp"

#include "normclass/errors.hpp"

namespace normclass {

QuadricForm parse_quadric_form(std::string_view name) {
    if (name == "a") return QuadricForm::A;
    if (name == "b") return QuadricForm::B;
    if (name == "c") return QuadricForm::C;
    if (name == "d") return QuadricForm::D;
    throw ParseError("quadric form must be one of a, b, c, d");
}

char form_letter(QuadricForm form) { return static_cast<char>('a' + static_cast<int>(form)); }

namespace {

void check_parameters(QuadricForm form, const GaussianRational& alpha, const std::optional<GaussianRational>& beta) {
    if (alpha.is_zero()) throw DomainError("alpha must be nonzero");
    bool needs_beta = form == QuadricForm::A || form == QuadricForm::B;
    if (needs_beta && !beta) throw DomainError("forms a and b need beta");
    if (needs_beta && beta->is_zero()) throw DomainError("beta must be nonzero");
    if (!needs_beta && beta) throw DomainError("forms c and d take no beta");
}

} // namespace

MultiPoly quadric_polynomial(QuadricForm form, const GaussianRational& alpha,
                             const std::optional<GaussianRational>& beta) {
    check_parameters(form, alpha, beta);
    MultiPoly x = MultiPoly::variable(4, 0), y = MultiPoly::variable(4, 1), z = MultiPoly::variable(4, 2),
              t = MultiPoly::variable(4, 3);
    MultiPoly base = x * x + alpha * (y * y);
    switch (form) {
    case QuadricForm::A:
        return base + *beta * (z * z) + t * t;
    case QuadricForm::B:
        return base + *beta * (z * z);
    case QuadricForm::C:
        return base - GaussianRational(2) * (t * z);
    case QuadricForm::D:
        return base + t * t;
    }
    throw DomainError("unknown quadric form");
}

long quadric_table(QuadricForm form, const GaussianRational& alpha, const std::optional<GaussianRational>& beta) {
    check_parameters(form, alpha, beta);
    switch (form) {
    case QuadricForm::A:
    case QuadricForm::B: {
        // Number of coincidences among the axis weights 1, alpha, beta.
        const GaussianRational one(1);
        int equal_pairs = (alpha == one) + (*beta == one) + (alpha == *beta);
        long distinct = form == QuadricForm::A ? 6 : 4;
        if (equal_pairs == 0) return distinct;
        if (equal_pairs == 1) return distinct - 2;
        return distinct - 4;
    }
    case QuadricForm::C:
        return alpha == GaussianRational(1) ? 3 : 5;
    case QuadricForm::D:
        return alpha == GaussianRational(1) ? 2 : 4;
    }
    throw DomainError("unknown quadric form");
}

} // namespace normclass
