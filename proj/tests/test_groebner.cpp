#include <doctest.h>

#include "normclass/errors.hpp"
#include "normclass/groebner/chart.hpp"
#include "normclass/groebner/points.hpp"
#include "normclass/groebner/roots.hpp"

#include <random>

using namespace normclass;

namespace {

MultiPoly P3(const char* s) { return parse_polynomial(s, 3); }
MultiPoly P4(const char* s) { return parse_polynomial(s, 4); }

IdealHandle ideal3(std::initializer_list<const char*> gens) {
    std::vector<MultiPoly> g;
    for (auto s : gens) g.push_back(P3(s));
    return IdealHandle(3, g);
}
IdealHandle ideal4(std::initializer_list<const char*> gens) {
    std::vector<MultiPoly> g;
    for (auto s : gens) g.push_back(P4(s));
    return IdealHandle(4, g);
}

void check_groebner_postcondition(const GroebnerBasis& gb, const std::vector<MultiPoly>& gens) {
    for (std::size_t a = 0; a < gb.size(); ++a) {
        CHECK(gb.element_terms(a).front().c.is_one());
        for (std::size_t b = a + 1; b < gb.size(); ++b)
            CHECK(gb.reduces_to_zero(s_polynomial(gb.element(a), gb.element(b), gb.order())));
        // Fully reduced: no term of one element is divisible by another leading monomial.
        for (std::size_t b = 0; b < gb.size(); ++b) {
            if (a == b) continue;
            for (const auto& t : gb.element_terms(a)) CHECK_FALSE(gb.leading_monomial(b).divides(t.m));
        }
    }
    for (const auto& g : gens) CHECK(gb.reduces_to_zero(g));
}

// Determinant over Q by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m) {
    std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Coefficients in y (low to high) of f(x0, y, 1).
std::vector<Rational> y_coefficients(const MultiPoly& f, const Rational& x0) {
    std::vector<Rational> c(f.degree_in(1) + 1, Rational(0));
    for (const auto& t : f.terms()) {
        Rational v = t.c.re();
        for (unsigned k = 0; k < t.m.e[0]; ++k) v *= x0;
        c[t.m.e[1]] += v;
    }
    return c;
}

// Res_y(f(x0,y,1), g(x0,y,1)) from the Sylvester matrix.
Rational resultant_at(const MultiPoly& f, const MultiPoly& g, const Rational& x0) {
    auto a = y_coefficients(f, x0), b = y_coefficients(g, x0);
    std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
    return determinant(s);
}

// Degree of the polynomial interpolating samples at 0..N-1: the highest
// order whose finite difference is nonzero.
int degree_from_samples(const std::vector<Rational>& v) {
    for (int deg = static_cast<int>(v.size()) - 1; deg >= 0; --deg) {
        std::vector<Rational> d = v;
        for (int k = 0; k < deg; ++k)
            for (std::size_t j = 0; j + 1 < d.size() - k; ++j) d[j] = d[j + 1] - d[j];
        for (std::size_t j = 0; j < d.size() - deg; ++j)
            if (d[j] != 0) return deg;
    }
    return -1;
}

} // namespace

TEST_CASE("groebner basis of linear ideals and a plane conic") {
    auto gb = groebner_basis(std::vector<MultiPoly>{P3("x"), P3("y")}, MonomialOrder::grevlex());
    REQUIRE(gb.size() == 2);
    CHECK(gb.polynomials() == std::vector<MultiPoly>{P3("y"), P3("x")});

    auto conic = groebner_basis(std::vector<MultiPoly>{P3("x^2 + y^2 - z^2"), P3("z")}, MonomialOrder::grevlex());
    REQUIRE(conic.size() == 2);
    CHECK(conic.element(0) == P3("z"));
    CHECK(conic.element(1) == P3("x^2 + y^2"));
}

TEST_CASE("twisted cubic eliminant in lex order") {
    std::vector<MultiPoly> gens{P3("x^2 - y"), P3("x^3 - z")};
    auto gb = groebner_basis(gens, MonomialOrder::lex());
    check_groebner_postcondition(gb, gens);
    auto elim = gb.elements_free_of(1u);
    REQUIRE(elim.size() == 1);
    CHECK(elim[0] == P3("y^3 - z^2").monic());
    // Vanishes on the parametrization (y, z) = (s^2, s^3).
    for (long s = -3; s <= 3; ++s) {
        std::vector<GaussianRational> p{0, s * s, s * s * s};
        CHECK(elim[0].evaluate(p).is_zero());
    }
}

TEST_CASE("buchberger postcondition on random ideals in every order") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> c(-4, 4);
    auto random_quadric = [&]() {
        MultiPoly f(4);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a; b < 4; ++b)
                f += MultiPoly::variable(4, a) * MultiPoly::variable(4, b) * GaussianRational(c(rng));
        return f;
    };
    for (int k = 0; k < 4; ++k) {
        std::vector<MultiPoly> gens{random_quadric(), random_quadric(), random_quadric()};
        for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::eliminate(1u)}) {
            auto gb = groebner_basis(gens, order);
            check_groebner_postcondition(gb, gens);
        }
        // Bezout: three generic quadrics meet in 8 points.
        IdealHandle j(4, gens);
        CHECK(ideal_dimension(j) == 0);
        CHECK(hilbert_degree(j) == 8);
        GenericDraw draw(k);
        CHECK(degree_zero_dim(j, draw) == 8);
    }
}

TEST_CASE("ideal dimension") {
    CHECK(ideal_dimension(ideal4({"t", "x^2 + y^2 + z^2"})) == 1);
    CHECK(ideal_dimension(ideal4({"x", "y", "z", "t"})) == -1);
    CHECK(ideal_dimension(ideal4({"1"})) == -1);
    CHECK(ideal_dimension(ideal4({"x*y - z*t"})) == 2);
    CHECK(ideal_dimension(ideal4({"x", "y", "z"})) == 0);
}

TEST_CASE("degree of zero-dimensional ideals") {
    GenericDraw draw(0);
    CHECK(degree_zero_dim(ideal3({"x^2", "y"}), draw) == 2);
    CHECK(hilbert_degree(ideal3({"x^2", "y"})) == 2);
    CHECK(degree_zero_dim(ideal3({"x^2 + y^2 - z^2", "x*y"}), draw) == 4);
    CHECK(degree_zero_dim(ideal4({"x", "y", "z", "t"}), draw) == 0);
    CHECK_THROWS_AS(degree_zero_dim(ideal4({"x*y - z*t"}), draw), NotZeroDimensional);
}

TEST_CASE("hilbert degree of positive-dimensional schemes") {
    CHECK(hilbert_degree(ideal4({"x*y - z*t"})) == 2);
    CHECK(hilbert_degree(ideal4({"t", "x^2 + y^2 + z^2"})) == 2);
    // Twisted cubic in P^3.
    CHECK(hilbert_degree(ideal4({"x*z - y^2", "y*t - z^2", "x*t - y*z"})) == 3);
}

TEST_CASE("saturation") {
    auto sat = saturate(ideal3({"x^2*y"}), P3("x"));
    CHECK(same_ideal(sat, ideal3({"y"})));
    auto sat2 = saturate(ideal3({"x*z", "y*z"}), ideal3({"z"}));
    CHECK(same_ideal(sat2, ideal3({"x", "y"})));
    CHECK(same_ideal(saturate(sat2, ideal3({"z"})), sat2));
    // V(J) and V(g) disjoint: saturation changes nothing.
    auto j = ideal3({"x^2 + y^2 - z^2", "x - y"});
    CHECK(same_ideal(saturate(j, P3("z")), j));
}

TEST_CASE("saturation removes an embedded multiple point") {
    // (x^2, x*y) in the chart z = 1: the y-axis with an embedded point at the origin.
    auto j = ideal3({"x^2", "x*y"});
    CHECK(same_ideal(saturate(j, ideal3({"x", "y"})), ideal3({"x"})));
    auto inter = intersect(ideal3({"x"}), ideal3({"y"}));
    CHECK(same_ideal(inter, ideal3({"x*y"})));
}

TEST_CASE("local multiplicity in a chart") {
    auto j = ideal3({"y^2", "x"});
    CHECK(local_multiplicity(j, ProjPoint{0, 0, 1}).multiplicity == 2);
    CHECK(local_multiplicity(j, ProjPoint{1, 0, 1}).multiplicity == 0);
    // Tangent conic and line: length 2 at the contact point.
    auto t = ideal3({"x^2 + y^2 - z^2", "x - z"});
    CHECK(local_multiplicity(t, ProjPoint{1, 0, 1}).multiplicity == 2);
}

TEST_CASE("rational points of zero-dimensional ideals") {
    GenericDraw draw(0);
    auto i = GaussianRational::i();
    auto spheroid = ideal4({"t", "x^2 + y^2 + z^2", "x^2 + 4*y^2 + 4*z^2 - t^2"});
    auto sol = rational_points_zero_dim(spheroid, draw);
    REQUIRE(sol.points.size() == 2);
    CHECK(sol.points[0].point == ProjPoint{0, 1, -i, 0});
    CHECK(sol.points[1].point == ProjPoint{0, 1, i, 0});
    CHECK(sol.points[0].multiplicity + sol.points[1].multiplicity + sol.residual == sol.degree);
    CHECK(sol.residual == 0);

    auto saddle = rational_points_zero_dim(ideal4({"x", "y", "t"}), draw);
    REQUIRE(saddle.points.size() == 1);
    CHECK(saddle.points[0].point == ProjPoint{0, 0, 1, 0});

    auto sqrt2 = rational_points_zero_dim(ideal4({"x^2 - 2*y^2", "z", "t"}), draw);
    CHECK(sqrt2.points.empty());
    CHECK(sqrt2.residual == 2);
    CHECK(sqrt2.degree == 2);
}

TEST_CASE("gaussian rational roots") {
    auto i = GaussianRational::i();
    UPoly p = UPoly::linear_root(GaussianRational(Rational(3, 2), Rational(-1))) * UPoly::linear_root(i) *
              UPoly::linear_root(i) * UPoly::linear_root(Rational(-5, 7)) * UPoly({2, 0, 1});
    auto roots = gaussian_rational_roots(p);
    CHECK(roots.complete);
    REQUIRE(roots.roots.size() == 3);
    for (const auto& r : roots.roots) CHECK(p.evaluate(r).is_zero());
    auto none = gaussian_rational_roots(UPoly({-2, 0, 1}));
    CHECK(none.roots.empty());
    CHECK(none.complete);
}

TEST_CASE("degree oracle: resultant count on random line arrangements") {
    // f and g are products of lines x - a*y - b*z with distinct slopes, so all
    // intersection points are finite, Q-rational, and the y-leading
    // coefficients are constants; deg Res_y(f, g)(x) counts the points with
    // multiplicity.
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> b(-6, 6);
    for (int trial = 0; trial < 6; ++trial) {
        auto line = [&](long a) {
            return MultiPoly::variable(3, 0) - MultiPoly::variable(3, 1) * GaussianRational(a) -
                   MultiPoly::variable(3, 2) * GaussianRational(b(rng));
        };
        MultiPoly l1 = line(1);
        MultiPoly f = l1 * l1 * line(2);     // includes a double line
        MultiPoly g = line(-1) * line(-3);
        if (trial % 2) g = g * line(5);
        GenericDraw draw(trial);
        IdealHandle j(3, {f, g});
        std::size_t deg = degree_zero_dim(j, draw);

        std::vector<Rational> samples;
        for (long x0 = 0; x0 < 12; ++x0) samples.push_back(resultant_at(f, g, Rational(x0)));
        CHECK(static_cast<int>(deg) == degree_from_samples(samples));
        CHECK(deg == hilbert_degree(j));

        auto sol = rational_points_zero_dim(j, draw);
        CHECK(sol.residual == 0);
        std::size_t sum = 0;
        for (const auto& p : sol.points) sum += p.multiplicity;
        CHECK(sum == deg);
    }
}
