#include "normclass/classes/surface.hpp"

#include "normclass/errors.hpp"

namespace normclass {

void require_surface_input(const MultiPoly& f) {
    if (f.nvars() != 4) throw HypothesisViolation("surface equations live in (x,y,z,t)");
    if (!f.is_homogeneous()) throw HypothesisViolation("surface equation is not homogeneous");
    if (f.total_degree() < 2) throw HypothesisViolation("surface must have degree at least 2");
}

namespace {

struct RunResult {
    long normal_class;
    std::size_t length;
    std::size_t on_base;
    std::vector<std::size_t> point_multiplicities;
};

RunResult single_run(const MultiPoly& f, const BaseLocusReport& bl, std::size_t bezout, std::uint64_t seed,
                     unsigned retries) {
    GenericDraw draw(seed);
    Covector a = random_covector(draw);
    std::vector<MultiPoly> gens = polar_system(f, bl.alpha, a).polar_generators;
    gens.push_back(f);
    IdealHandle j(4, gens);
    if (ideal_dimension(j) != 0) throw GenericityExhausted("surface and polar do not meet in finitely many points");
    ChartAlgebra chart = ChartAlgebra::choose(j, draw, retries);

    RunResult r;
    r.length = chart.dimension();
    if (r.length != bezout)
        throw HypothesisViolation("S cap P_{A,S} has length " + std::to_string(r.length) + ", expected " +
                                  std::to_string(bezout));
    r.on_base = chart.multiplicity_on(std::span<const MultiPoly>(bl.alpha.data(), bl.alpha.size()));
    r.normal_class = static_cast<long>(r.length) - static_cast<long>(r.on_base);
    for (const auto& p : bl.points_on_s) r.point_multiplicities.push_back(chart.local_multiplicity(p.point));
    return r;
}

NormalClassReport run_pipeline(const MultiPoly& f, const PipelineOptions& opts, bool require_reduced) {
    require_surface_input(f);
    NormalClassReport report;
    report.f = f;
    report.degree = f.total_degree();

    GenericDraw locus_draw(seed_pair(opts.seed, 0).first);
    BaseLocusReport bl = base_locus(f, locus_draw, opts.retries);
    if (require_reduced && !bl.h) throw HypothesisViolation("the base locus is not two-dimensional");
    report.reduced = bl.h.has_value();
    report.d_h = bl.h ? bl.h->total_degree() : 0;
    long dt = report.degree - report.d_h;
    report.bezout = static_cast<std::size_t>(report.degree * (dt * dt - dt + 1));

    for (unsigned attempt = 0; attempt < std::max(1u, opts.retries); ++attempt) {
        auto seeds = seed_pair(opts.seed, attempt);
        RunResult first, second;
        try {
            first = single_run(f, bl, report.bezout, seeds.first, opts.retries);
            second = single_run(f, bl, report.bezout, seeds.second, opts.retries);
        } catch (const GenericityExhausted&) {
            continue;
        }
        if (first.normal_class != second.normal_class || first.point_multiplicities != second.point_multiplicities)
            continue;

        report.seeds_used = seeds;
        report.normal_class = first.normal_class;
        std::size_t listed = 0;
        for (std::size_t k = 0; k < bl.points_on_s.size(); ++k) {
            report.base_points.push_back({bl.points_on_s[k].point, bl.points_on_s[k].tag, first.point_multiplicities[k]});
            listed += first.point_multiplicities[k];
        }
        if (listed > first.on_base) throw DomainError("base-point multiplicities exceed the base-locus length");
        report.residual = first.on_base - listed;

        GenericDraw polar_draw(seeds.first);
        Covector a = random_covector(polar_draw);
        report.polar_degree = hilbert_degree(IdealHandle(4, polar_system(f, bl.alpha, a).polar_generators));
        report.schubert = surface_schubert_class(report);
        return report;
    }
    throw GenericityExhausted("independent generic draws disagreed on every retry");
}

} // namespace

NormalClassReport surface_normal_class(const MultiPoly& f, const PipelineOptions& opts) {
    return run_pipeline(f, opts, false);
}

NormalClassReport surface_normal_class_reduced(const MultiPoly& f, const PipelineOptions& opts) {
    return run_pipeline(f, opts, true);
}

IdealHandle generic_normal_polar(const MultiPoly& f, GenericDraw& draw) {
    require_surface_input(f);
    PluckerVector alpha = build_alpha(f);
    if (ideal_dimension(IdealHandle(4, std::vector<MultiPoly>(alpha.begin(), alpha.end()))) >= 2)
        alpha = reduced_alpha(f).alpha_tilde;
    return IdealHandle(4, polar_system(f, alpha, random_covector(draw)).polar_generators);
}

std::size_t surface_normal_class_by_saturation(const MultiPoly& f, std::uint64_t seed) {
    require_surface_input(f);
    GenericDraw draw(seed);
    PluckerVector alpha = build_alpha(f);
    IdealHandle base(4, std::vector<MultiPoly>(alpha.begin(), alpha.end()));
    if (ideal_dimension(base) >= 2) {
        alpha = reduced_alpha(f).alpha_tilde;
        base = IdealHandle(4, std::vector<MultiPoly>(alpha.begin(), alpha.end()));
    }
    std::vector<MultiPoly> gens = polar_system(f, alpha, random_covector(draw)).polar_generators;
    gens.push_back(f);
    IdealHandle sat = saturate(IdealHandle(4, gens), base);
    return degree_zero_dim(sat, draw);
}

ChowClass surface_schubert_class(const NormalClassReport& report) {
    long dt = report.degree - report.d_h;
    return ChowClass::schubert(report.normal_class, report.degree * (dt - 1));
}

} // namespace normclass
