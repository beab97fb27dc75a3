#pragma once

#include "normclass/arith/gaussian.hpp"
#include "normclass/poly/multipoly.hpp"

#include <optional>
#include <string_view>

namespace normclass {

/// Normal forms of quadrics up to similitude:
///   a: x^2 + alpha y^2 + beta z^2 + t^2     b: x^2 + alpha y^2 + beta z^2
///   c: x^2 + alpha y^2 - 2 t z              d: x^2 + alpha y^2 + t^2
enum class QuadricForm { A, B, C, D };

QuadricForm parse_quadric_form(std::string_view name);
char form_letter(QuadricForm form);

/// The quadric of the given form. Throws DomainError for zero parameters or
/// a missing beta in forms a and b.
MultiPoly quadric_polynomial(QuadricForm form, const GaussianRational& alpha,
                             const std::optional<GaussianRational>& beta = std::nullopt);

/// Tabulated normal class of the normal form.
long quadric_table(QuadricForm form, const GaussianRational& alpha,
                   const std::optional<GaussianRational>& beta = std::nullopt);

} // namespace normclass
