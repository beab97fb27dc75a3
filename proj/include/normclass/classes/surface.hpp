#pragma once

#include "normclass/geometry/base_locus.hpp"
#include "normclass/schubert/chow.hpp"

#include <cstdint>
#include <utility>

namespace normclass {

struct PipelineOptions {
    std::uint64_t seed = 0;
    unsigned retries = 3;
};

struct BasePointEntry {
    ProjPoint point;
    BaseTag tag;
    std::size_t multiplicity = 0;
};

struct NormalClassReport {
    MultiPoly f;
    int degree = 0;
    bool reduced = false;
    int d_h = 0;
    /// Degree of the (reduced, if applicable) generic normal polar.
    std::size_t polar_degree = 0;
    /// d (d~^2 - d~ + 1): length of S cap P_{A,S}.
    std::size_t bezout = 0;
    std::vector<BasePointEntry> base_points;
    /// Base-point length not carried by the listed Q(i)-rational points.
    std::size_t residual = 0;
    long normal_class = 0;
    ChowClass schubert;
    std::pair<std::uint64_t, std::uint64_t> seeds_used{0, 0};
};

/// Normal class of an irreducible surface V(F) of P^3 (degree >= 2).
///
/// For a generic covector A the scheme S cap P_{A,S} is finite of length
/// d (d~^2 - d~ + 1); the normal class is that length minus the part
/// supported on the base locus. When dim B = 2 the polar is built from the
/// reduced map alpha / H. The computation runs under two independent draws
/// and both must agree.
NormalClassReport surface_normal_class(const MultiPoly& f, const PipelineOptions& opts = {});

/// Same, but insists on the reduced construction (dim B = 2).
NormalClassReport surface_normal_class_reduced(const MultiPoly& f, const PipelineOptions& opts = {});

/// Independent route: the degree of (F, polar) : (base ideal)^inf, with the
/// saturation computed by elimination. Much slower; used as a cross-check.
std::size_t surface_normal_class_by_saturation(const MultiPoly& f, std::uint64_t seed);

/// a sigma_2 + b sigma_11 with a = c_nu, b = d (d~ - 1).
ChowClass surface_schubert_class(const NormalClassReport& report);

/// Normal polar ideal (from alpha, or alpha / H when dim B = 2) for a draw.
IdealHandle generic_normal_polar(const MultiPoly& f, GenericDraw& draw);

/// Throws HypothesisViolation unless f is a homogeneous polynomial in
/// (x,y,z,t) of degree >= 2.
void require_surface_input(const MultiPoly& f);

} // namespace normclass
