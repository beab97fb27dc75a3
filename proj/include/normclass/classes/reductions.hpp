#pragma once

#include "normclass/poly/multipoly.hpp"

#include <optional>

namespace normclass {

/// A cylinder V(F) with F free of z: returns G(x, y, t) as a curve in (x, y, z).
std::optional<MultiPoly> cylinder_reduce(const MultiPoly& f);

/// A surface of revolution about V(x, y), F = G(x^2 + y^2, z, t): returns the
/// profile curve G(x^2, y, z). Detection rewrites F(x, 0, z, t) in x^2 and
/// checks the expansion of G(x^2 + y^2, z, t) against F.
std::optional<MultiPoly> revolution_reduce(const MultiPoly& f);

} // namespace normclass
