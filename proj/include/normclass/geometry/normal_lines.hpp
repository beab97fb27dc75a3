#pragma once

#include "normclass/geometry/proj_point.hpp"
#include "normclass/groebner/ideal.hpp"
#include "normclass/groebner/random.hpp"

#include <array>
#include <optional>

namespace normclass {

using Covector = std::array<GaussianRational, 4>;
using PluckerVector = std::array<MultiPoly, 6>;
using NuMatrix = std::array<std::array<MultiPoly, 4>, 4>;

/// n_S(m) = [F_x(m) : F_y(m) : F_z(m) : 0]; nullopt where all three vanish.
std::optional<ProjPoint> normal_direction(const MultiPoly& f, const ProjPoint& m);

/// Plücker coordinates of the line through m and n_S(m):
/// (xF_y - yF_x, xF_z - zF_x, -tF_x, yF_z - zF_y, -tF_y, -tF_z).
PluckerVector build_alpha(const MultiPoly& f);

/// w1 w6 - w2 w5 + w3 w4 evaluated on six polynomials.
MultiPoly plucker_relation(const PluckerVector& w);

/// The antisymmetric matrix whose rows nu_i, paired with A, give the
/// equations of the lines through delta(A):
///   nu_1 = (0, w6, -w5, w4),  nu_2 = (-w6, 0, w3, -w2),
///   nu_3 = (w5, -w3, 0, w1),  nu_4 = (-w4, w2, -w1, 0).
NuMatrix nu_from_alpha(const PluckerVector& w);

struct PolarSystem {
    MultiPoly f;
    PluckerVector alpha;
    NuMatrix nu;
    Covector a;
    /// A o nu_i for i = 1..4.
    std::vector<MultiPoly> polar_generators;
};

PolarSystem polar_system(const MultiPoly& f, const PluckerVector& alpha, const Covector& a);
PolarSystem polar_system(const MultiPoly& f, const Covector& a);

/// Ideal of the normal polar P_{A,S}, generated by the four A o nu_i.
IdealHandle normal_polar(const MultiPoly& f, const Covector& a);

/// Random covector with entries in [-97, 97], all nonzero.
Covector random_covector(GenericDraw& draw);

/// N_C = (-zG_y, zG_x, xG_y - yG_x) for a plane curve G(x,y,z).
std::array<MultiPoly, 3> curve_normal_map(const MultiPoly& g);

} // namespace normclass
