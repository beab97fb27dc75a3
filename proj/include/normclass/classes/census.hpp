#pragma once

#include "normclass/geometry/proj_point.hpp"
#include "normclass/poly/multipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace normclass {

enum class PointKind { Smooth, OrdinaryMultiple, OrdinaryCusp, NonOrdinary };

std::string to_string(PointKind kind);

struct PlanarPointClass {
    PointKind kind = PointKind::Smooth;
    /// Multiplicity of the curve at the point (1 for smooth points).
    unsigned multiplicity = 1;
};

/// Multiplicity k of the plane curve at P: lowest order of a nonvanishing
/// partial derivative (0 when P is not on the curve).
unsigned point_multiplicity(const MultiPoly& g, const ProjPoint& p);

/// Classifies a Q(i)-rational point of V(G) from the Taylor expansion at P
/// in the coordinate chart of P: ordinary k-fold point if the degree-k form
/// is square-free, ordinary cusp if k = 2, the quadratic form is l^2 and l
/// does not divide the cubic form.
PlanarPointClass classify_planar_point(const MultiPoly& g, const ProjPoint& p);

struct CensusPoint {
    ProjPoint point;
    PlanarPointClass cls;
    bool on_umbilic = false;
    /// "singular" or "contact".
    std::string role;
};

/// Counts entering the closed formula for smooth surfaces.
struct Census {
    int d = 0;
    std::map<unsigned, unsigned> m_star;  // ordinary k-fold points off the umbilic
    std::map<unsigned, unsigned> m_tilde; // ordinary k-fold points on the umbilic
    int kappa_star = 0;
    int kappa_tilde = 0;
    int c_inf = 0;
    std::vector<CensusPoint> points;
    /// Reasons the census cannot certify a closed-form evaluation.
    std::vector<std::string> unresolved;
};

/// Census of S_inf = V(F(x,y,z,0)) against the umbilic x^2 + y^2 + z^2 = 0.
/// Checks smoothness of S and the hypotheses of the closed formula; every
/// failed check or non-rational leftover is recorded in `unresolved`.
Census census_surface_infinity(const MultiPoly& f);

/// d^3 - d^2 + d - sum_k ((k-1)^2 m*(k) + k(k-1) m~(k)) - 2 kappa* - 3 kappa~ - c_inf.
/// Throws NotCertified when the census has unresolved entries.
long closed_form_value(const Census& census);

} // namespace normclass
