#include <doctest.h>

#include "normclass/errors.hpp"
#include "normclass/schubert/chow.hpp"

#include <map>
#include <random>

using namespace normclass;

namespace {

// Oracle: the Chow ring of G(1,3) is the ring of Schur polynomials in two
// variables modulo partitions with a part larger than 2.
using Poly2 = std::map<std::pair<int, int>, long>;

struct Shape {
    ChowClass::Basis b;
    int l1, l2;
};

const Shape kShapes[] = {{ChowClass::S00, 0, 0}, {ChowClass::S1, 1, 0},  {ChowClass::S2, 2, 0},
                         {ChowClass::S11, 1, 1}, {ChowClass::S21, 2, 1}, {ChowClass::S22, 2, 2}};

// s_(a,b)(x1, x2) = (x1 x2)^b h_(a-b)(x1, x2).
Poly2 schur(int a, int b) {
    Poly2 p;
    for (int k = 0; k <= a - b; ++k) p[{b + k, b + (a - b - k)}] += 1;
    return p;
}

Poly2 multiply(const Poly2& u, const Poly2& v) {
    Poly2 out;
    for (const auto& [mu, cu] : u)
        for (const auto& [mv, cv] : v) out[{mu.first + mv.first, mu.second + mv.second}] += cu * cv;
    return out;
}

ChowClass to_chow(Poly2 p) {
    ChowClass out;
    for (;;) {
        // Largest exponent of x1 gives the leading Schur term.
        auto lead = p.end();
        for (auto it = p.begin(); it != p.end(); ++it)
            if (it->second != 0 && (lead == p.end() || it->first > lead->first)) lead = it;
        if (lead == p.end()) return out;
        auto [a, b] = lead->first;
        long c = lead->second;
        for (const auto& [m, coeff] : schur(a, b)) p[m] -= c * coeff;
        if (a > 2) continue;
        for (const auto& s : kShapes)
            if (s.l1 == a && s.l2 == b) out[s.b] += c;
    }
}

Poly2 to_poly(const ChowClass& c) {
    Poly2 out;
    for (const auto& s : kShapes)
        for (const auto& [m, coeff] : schur(s.l1, s.l2)) out[m] += c[s.b] * coeff;
    return out;
}

ChowClass random_class(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-20, 20);
    ChowClass c;
    for (const auto& s : kShapes) c[s.b] = coeff(rng);
    return c;
}

} // namespace

TEST_CASE("Schubert multiplication table") {
    using C = ChowClass;
    auto s = [](C::Basis b) { return C::basis(b); };
    CHECK(s(C::S1) * s(C::S1) == s(C::S2) + s(C::S11));
    CHECK(s(C::S1) * s(C::S2) == s(C::S21));
    CHECK(s(C::S1) * s(C::S11) == s(C::S21));
    CHECK(s(C::S1) * s(C::S21) == s(C::S22));
    CHECK(s(C::S2) * s(C::S2) == s(C::S22));
    CHECK(s(C::S11) * s(C::S11) == s(C::S22));
    CHECK((s(C::S2) * s(C::S11)).is_zero());
    CHECK((s(C::S2) * s(C::S21)).is_zero());
    CHECK((s(C::S22) * s(C::S1)).is_zero());
    for (const auto& a : kShapes)
        for (const auto& b : kShapes) {
            CAPTURE(C::name(a.b));
            CAPTURE(C::name(b.b));
            CHECK(s(a.b) * s(b.b) == to_chow(multiply(schur(a.l1, a.l2), schur(b.l1, b.l2))));
        }
}

TEST_CASE("Chow ring axioms and coefficient extraction") {
    std::mt19937 rng(5);
    for (int round = 0; round < 200; ++round) {
        ChowClass u = random_class(rng), v = random_class(rng), w = random_class(rng);
        CHECK(u * v == v * u);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK(u * v == to_chow(multiply(to_poly(u), to_poly(v))));
        std::uniform_int_distribution<int> ab(-50, 50);
        long a = ab(rng), b = ab(rng);
        ChowClass n = ChowClass::schubert(a, b);
        CHECK(n * ChowClass::basis(ChowClass::S2) == ChowClass::basis(ChowClass::S22, a));
        CHECK(n * ChowClass::basis(ChowClass::S11) == ChowClass::basis(ChowClass::S22, b));
    }
}

TEST_CASE("Chow expressions parse and print") {
    CHECK(ChowClass::parse("s1*s1") == ChowClass::schubert(1, 1));
    CHECK(ChowClass::parse("sigma1^4") == ChowClass::basis(ChowClass::S22, 2));
    CHECK(ChowClass::parse("11*s2 + 6*s11") == ChowClass::schubert(11, 6));
    CHECK(ChowClass::parse("(s2 - s11)*(s2 + s11)").is_zero());
    CHECK(ChowClass::parse("3 - s00") == ChowClass::basis(ChowClass::S00, 2));
    CHECK(ChowClass::schubert(3, -1).to_string() == "3*sigma2 - sigma11");
    CHECK(ChowClass().to_string() == "0");
    CHECK_THROWS_AS(ChowClass::parse("s3"), ParseError);
    CHECK_THROWS_AS(ChowClass::parse("s1/2"), ParseError);
    std::mt19937 rng(8);
    for (int round = 0; round < 50; ++round) {
        ChowClass c = random_class(rng);
        CHECK(ChowClass::parse(c.to_string()) == c);
    }
}
