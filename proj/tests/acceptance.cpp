// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "normclass/classes/census.hpp"
#include "normclass/classes/curve.hpp"
#include "normclass/classes/quadric.hpp"
#include "normclass/classes/reductions.hpp"
#include "normclass/classes/surface.hpp"
#include "normclass/cli/run.hpp"
#include "normclass/geometry/similitude.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace normclass;

namespace {

MultiPoly P3(const char* s) { return parse_polynomial(s, 3); }
MultiPoly P4(const char* s) { return parse_polynomial(s, 4); }
GaussianRational Q(long v) { return GaussianRational(v); }

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream s;
        s << what << ": got " << got << ", expected " << want;
        throw Failure{s.str()};
    }
}

MultiPoly random_dense_surface(int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Term> terms;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            for (int c = 0; a + b + c <= degree; ++c) {
                Monomial m;
                m.e[0] = static_cast<std::uint16_t>(a);
                m.e[1] = static_cast<std::uint16_t>(b);
                m.e[2] = static_cast<std::uint16_t>(c);
                m.e[3] = static_cast<std::uint16_t>(degree - a - b - c);
                int v = coeff(rng);
                terms.push_back({m, GaussianRational(v == 0 ? 1 : v)});
            }
    return MultiPoly::from_terms(4, terms);
}

std::vector<MultiPoly> random_surfaces() {
    std::mt19937 rng(31337);
    std::vector<MultiPoly> out;
    for (int k = 0; k < 5; ++k) out.push_back(random_dense_surface(2, rng));
    for (int k = 0; k < 3; ++k) out.push_back(random_dense_surface(3, rng));
    return out;
}

std::size_t multiplicity_at(const NormalClassReport& r, const ProjPoint& p) {
    for (const auto& b : r.base_points)
        if (b.point == p) return b.multiplicity;
    return 0;
}

std::string cli_output(const std::string& command, const std::string& input, std::uint64_t seed) {
    RunConfig c;
    c.command = command;
    c.args = {input};
    c.seed = seed;
    std::ostringstream out, err;
    int code = run(c, out, err);
    if (code != 0) throw Failure{command + " exited with " + std::to_string(code) + ": " + err.str()};
    return out.str();
}

void quadric_table_check() {
    const GaussianRational one(1), two(2), four(4);
    struct Row {
        QuadricForm form;
        GaussianRational alpha;
        std::optional<GaussianRational> beta;
    };
    std::vector<Row> rows = {{QuadricForm::A, two, four},  {QuadricForm::A, four, four}, {QuadricForm::A, one, one},
                             {QuadricForm::B, two, four},  {QuadricForm::B, four, four}, {QuadricForm::B, one, one},
                             {QuadricForm::C, two, {}},    {QuadricForm::C, one, {}},    {QuadricForm::D, two, {}},
                             {QuadricForm::D, one, {}}};
    const long expected[] = {6, 4, 2, 4, 2, 0, 5, 3, 4, 2};
    for (std::size_t k = 0; k < rows.size(); ++k) {
        MultiPoly q = quadric_polynomial(rows[k].form, rows[k].alpha, rows[k].beta);
        auto r = surface_normal_class(q);
        expect_eq(r.normal_class, expected[k], "form " + std::string(1, form_letter(rows[k].form)) + " " + q.to_string());
        expect_eq(quadric_table(rows[k].form, rows[k].alpha, rows[k].beta), expected[k], "table entry");
    }
    // The sphere row runs the reduced pipeline.
    expect(surface_normal_class(quadric_polynomial(QuadricForm::A, one, one)).reduced, "sphere not reduced");
}

void ellipsoid_saddle_check() {
    expect_eq(surface_normal_class(P4("x^2 + 2*y^2 + 4*z^2 - t^2")).normal_class, 6L, "ellipsoid");
    expect_eq(surface_normal_class(P4("x^2 + 4*y^2 + 4*z^2 - t^2")).normal_class, 4L, "spheroid");
    expect_eq(surface_normal_class(P4("x*y - z*t")).normal_class, 5L, "saddle");
}

void e6_check() {
    auto r = surface_normal_class(P4("x^2*z + z^2*t + y^3"));
    expect_eq(r.normal_class, 11L, "E6 class");
    expect_eq(multiplicity_at(r, ProjPoint{Q(0), Q(0), Q(0), Q(1)}), std::size_t{8}, "multiplicity at p");
    expect_eq(multiplicity_at(r, ProjPoint{Q(0), Q(0), Q(1), Q(0)}), std::size_t{2}, "multiplicity at q");
    expect_eq(r.bezout, std::size_t{21}, "Bezout number");
}

void cusp_cubic_check() {
    MultiPoly f = P4("x*z*t - t*x^2 - z*t^2 - x*z^2 + y^3");
    auto saturation = surface_normal_class_by_saturation(f, 0);
    Census census = census_surface_infinity(f);
    expect(census.unresolved.empty(), "census not complete");
    expect_eq(census.kappa_star, 1, "kappa*");
    expect_eq(saturation, std::size_t{19}, "saturation route");
    expect_eq(closed_form_value(census), 19L, "closed formula");
    expect_eq(surface_normal_class(f).normal_class, 19L, "quotient-algebra route");
}

void generic_degree_check() {
    for (const auto& f : random_surfaces()) {
        long d = f.total_degree();
        auto r = surface_normal_class(f);
        expect_eq(r.normal_class, d * d * d - d * d + d, "generic class of " + f.to_string());
        ChowClass s = surface_schubert_class(r);
        expect_eq(s[ChowClass::S11], d * (d - 1), "Schubert b");
    }
}

void polar_degree_check() {
    GenericDraw draw(4242);
    for (const auto& f : random_surfaces()) {
        std::size_t d = static_cast<std::size_t>(f.total_degree());
        IdealHandle polar = generic_normal_polar(f, draw);
        expect_eq(ideal_dimension(polar), 1, "polar dimension");
        expect_eq(hilbert_degree(polar), d * d - d + 1, "polar degree of " + f.to_string());
    }
    IdealHandle sphere = generic_normal_polar(P4("x^2 + y^2 + z^2 - t^2"), draw);
    expect_eq(ideal_dimension(sphere), 1, "sphere polar dimension");
    expect_eq(hilbert_degree(sphere), std::size_t{1}, "sphere polar degree");
}

void curves_check() {
    for (auto [text, want] : {std::pair{"x^2 + y^2 - z^2", 2L}, std::pair{"x^2 + 2*y^2 - z^2", 4L}}) {
        MultiPoly g = P3(text);
        int d_dual = curve_dual_degree(g);
        auto inf = curve_infinity_invariants(g);
        long formula = curve_formula_value(g.total_degree(), d_dual, inf);
        long direct = curve_normal_class_direct(g);
        expect_eq(formula, want, std::string("formula route for ") + text);
        expect_eq(direct, want, std::string("direct route for ") + text);
    }
}

void chow_check() {
    using C = ChowClass;
    auto s = [](C::Basis b) { return C::basis(b); };
    expect(s(C::S1) * s(C::S1) == s(C::S2) + s(C::S11), "s1^2");
    expect(s(C::S1) * s(C::S2) == s(C::S21), "s1 s2");
    expect(s(C::S1) * s(C::S11) == s(C::S21), "s1 s11");
    expect(s(C::S1) * s(C::S21) == s(C::S22), "s1 s21");
    expect(s(C::S2) * s(C::S2) == s(C::S22), "s2^2");
    expect(s(C::S11) * s(C::S11) == s(C::S22), "s11^2");
    expect((s(C::S2) * s(C::S11)).is_zero(), "s2 s11");
    // Degree bookkeeping: products above dimension 4 vanish.
    const C::Basis all[] = {C::S00, C::S1, C::S2, C::S11, C::S21, C::S22};
    for (auto a : all)
        for (auto b : all) {
            C p = s(a) * s(b);
            expect(p == s(b) * s(a), "commutativity");
            for (auto c : all)
                if (p[c] != 0) expect(C::degree(c) == C::degree(a) + C::degree(b), "degree of product");
            if (C::degree(a) + C::degree(b) > 4) expect(p.is_zero(), "product above top degree");
        }
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> coeff(-1000, 1000);
    for (int k = 0; k < 100; ++k) {
        long a = coeff(rng), b = coeff(rng);
        C n = C::schubert(a, b);
        expect(n * s(C::S2) == C::basis(C::S22, a), "n . sigma2");
        expect(n * s(C::S11) == C::basis(C::S22, b), "n . sigma11");
    }
}

void plucker_check() {
    std::mt19937 rng(99);
    GenericDraw draw(99);
    for (int k = 0; k < 10; ++k) {
        MultiPoly f = random_dense_surface(2 + k % 3, rng);
        auto alpha = build_alpha(f);
        expect(plucker_relation(alpha).is_zero(), "Pluecker relation");
        Covector a = random_covector(draw);
        auto sys = polar_system(f, alpha, a);
        MultiPoly sum(4);
        for (int i = 0; i < 4; ++i) sum += sys.polar_generators[i] * MultiPoly::constant(4, a[i]);
        expect(sum.is_zero(), "nu dependency");
    }
}

void similitude_check() {
    GenericDraw draw(2718);
    for (const char* s : {"x^2*z + z^2*t + y^3", "x^2 + 2*y^2 + 4*z^2 - t^2"}) {
        MultiPoly f = P4(s);
        MultiPoly g = apply_similitude(f, Similitude::random(3, draw));
        expect(!(g == f), "similitude acted trivially");
        expect_eq(surface_normal_class(g).normal_class, surface_normal_class(f).normal_class,
                  std::string("class of moved ") + s);
    }
}

void reduction_check() {
    MultiPoly cyl = P4("x^2 + 3*y^2 + t^2");
    auto base = cylinder_reduce(cyl);
    expect(base.has_value(), "cylinder not detected");
    long c_surface = surface_normal_class(cyl).normal_class;
    long c_curve = curve_normal_class(*base).c_formula;
    expect_eq(c_surface, c_curve, "cylinder vs base curve");
    expect_eq(c_surface, 4L, "cylinder class");

    MultiPoly sphere = P4("x^2 + y^2 + z^2 - t^2");
    auto profile = revolution_reduce(sphere);
    expect(profile.has_value(), "revolution not detected");
    expect_eq(surface_normal_class(sphere).normal_class, 2L, "sphere");
    expect_eq(curve_normal_class(*profile).c_formula, 2L, "profile circle");
}

void determinism_check() {
    for (const char* s : {"x^2 + 2*y^2 + 4*z^2 - t^2", "x^2 + 4*y^2 + 4*z^2 - t^2", "x*y - z*t",
                          "x^2*z + z^2*t + y^3", "x*z*t - t*x^2 - z*t^2 - x*z^2 + y^3",
                          "x^2 + y^2 + z^2 - t^2"}) {
        auto a = surface_normal_class(P4(s), PipelineOptions{0, 3});
        auto b = surface_normal_class(P4(s), PipelineOptions{1, 3});
        expect(a.seeds_used != b.seeds_used, "seeds not distinct");
        expect_eq(a.normal_class, b.normal_class, std::string("seed dependence for ") + s);
        expect_eq(a.base_points.size(), b.base_points.size(), "base point count");
        for (std::size_t k = 0; k < a.base_points.size(); ++k) {
            expect(a.base_points[k].point == b.base_points[k].point, "base point");
            expect_eq(a.base_points[k].multiplicity, b.base_points[k].multiplicity, "base multiplicity");
        }
        expect(surface_normal_class_by_saturation(P4(s), 0) == surface_normal_class_by_saturation(P4(s), 1),
               "saturation seed dependence");
        expect(cli_output("surface-class", s, 0) == cli_output("surface-class", s, 0), "JSON not byte-identical");
    }
    for (const char* s : {"x^2 + y^2 - z^2", "x^2 + 2*y^2 - z^2", "y^2*z - x^3"}) {
        expect_eq(curve_normal_class(P3(s), PipelineOptions{0, 3}).c_formula,
                  curve_normal_class(P3(s), PipelineOptions{1, 3}).c_formula, std::string("curve ") + s);
        expect(cli_output("curve-class", s, 0) == cli_output("curve-class", s, 0), "JSON not byte-identical");
    }
}

void local_oracle_check() {
    // S_inf = V(y^3 - x z^2) has an ordinary cusp at [1:0:0], off the umbilic.
    auto cusp = surface_normal_class(P4("x*z*t - t*x^2 - z*t^2 - x*z^2 + y^3"));
    expect_eq(multiplicity_at(cusp, ProjPoint{Q(1), Q(0), Q(0), Q(0)}), std::size_t{2}, "cusp multiplicity");
    auto spheroid = surface_normal_class(P4("x^2 + 4*y^2 + 4*z^2 - t^2"));
    expect_eq(spheroid.base_points.size(), std::size_t{2}, "spheroid base points");
    for (const auto& b : spheroid.base_points) {
        expect(b.tag == BaseTag::UmbilicalContact, "spheroid tag");
        expect_eq(b.multiplicity, std::size_t{1}, "umbilical multiplicity");
    }
    expect_eq(static_cast<long>(spheroid.bezout) - 1 - 1, 4L, "spheroid ledger");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"quadric table", quadric_table_check},
        {"ellipsoids and saddle", ellipsoid_saddle_check},
        {"E6 cubic with base multiplicities 8 and 2", e6_check},
        {"cusp cubic 19 by saturation and closed formula", cusp_cubic_check},
        {"generic normal class and Schubert b", generic_degree_check},
        {"normal polar dimension and degree", polar_degree_check},
        {"circle and ellipse by both curve routes", curves_check},
        {"Chow ring table and coefficient extraction", chow_check},
        {"Pluecker relation and nu dependency", plucker_check},
        {"similitude invariance", similitude_check},
        {"cylinder and revolution reductions", reduction_check},
        {"determinism across seeds and byte-identical JSON", determinism_check},
        {"local multiplicities at cusp and umbilical contacts", local_oracle_check},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::string detail;
        try {
            criteria[k].second();
        } catch (const Failure& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (detail.empty() ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
        if (!detail.empty()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
