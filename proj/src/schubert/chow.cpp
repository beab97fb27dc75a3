#include "normclass/schubert/chow.hpp"

#include "normclass/detail/expr_parser.hpp"
#include "normclass/errors.hpp"

#include <charconv>

namespace normclass {

namespace {

using B = ChowClass::Basis;

// Products of basis elements under sigma_1^2 = sigma_2 + sigma_11,
// sigma_1 sigma_2 = sigma_1 sigma_11 = sigma_21, sigma_2^2 = sigma_11^2 = sigma_22,
// sigma_2 sigma_11 = 0, sigma_1 sigma_21 = sigma_22; degree > 4 vanishes.
ChowClass basis_product(B a, B b) {
    if (a > b) std::swap(a, b);
    if (a == B::S00) return ChowClass::basis(b);
    switch (a) {
    case B::S1:
        switch (b) {
        case B::S1: return ChowClass::basis(B::S2) + ChowClass::basis(B::S11);
        case B::S2:
        case B::S11: return ChowClass::basis(B::S21);
        case B::S21: return ChowClass::basis(B::S22);
        default: return {};
        }
    case B::S2:
        return b == B::S2 ? ChowClass::basis(B::S22) : ChowClass{};
    case B::S11:
        return b == B::S11 ? ChowClass::basis(B::S22) : ChowClass{};
    default:
        return {};
    }
}

} // namespace

ChowClass ChowClass::basis(Basis b, std::int64_t coeff) {
    ChowClass c;
    c.c_[b] = coeff;
    return c;
}

unsigned ChowClass::degree(Basis b) {
    static constexpr unsigned deg[kSize] = {0, 1, 2, 2, 3, 4};
    return deg[b];
}

const char* ChowClass::name(Basis b) {
    static constexpr const char* names[kSize] = {"sigma00", "sigma1", "sigma2", "sigma11", "sigma21", "sigma22"};
    return names[b];
}

ChowClass operator+(const ChowClass& u, const ChowClass& v) {
    ChowClass r;
    for (std::size_t k = 0; k < ChowClass::kSize; ++k) r.c_[k] = u.c_[k] + v.c_[k];
    return r;
}

ChowClass operator-(const ChowClass& u, const ChowClass& v) { return u + (-v); }

ChowClass ChowClass::operator-() const {
    ChowClass r;
    for (std::size_t k = 0; k < kSize; ++k) r.c_[k] = -c_[k];
    return r;
}

ChowClass operator*(std::int64_t k, const ChowClass& u) {
    ChowClass r;
    for (std::size_t j = 0; j < ChowClass::kSize; ++j) r.c_[j] = k * u.c_[j];
    return r;
}

ChowClass operator*(const ChowClass& u, const ChowClass& v) { return chow_mul(u, v); }

ChowClass chow_mul(const ChowClass& u, const ChowClass& v) {
    ChowClass r;
    for (std::size_t a = 0; a < ChowClass::kSize; ++a) {
        if (u[B(a)] == 0) continue;
        for (std::size_t b = 0; b < ChowClass::kSize; ++b) {
            if (v[B(b)] == 0) continue;
            r = r + (u[B(a)] * v[B(b)]) * basis_product(B(a), B(b));
        }
    }
    return r;
}

bool ChowClass::is_zero() const {
    for (auto c : c_)
        if (c != 0) return false;
    return true;
}

std::vector<std::pair<std::string, std::int64_t>> ChowClass::nonzero_terms() const {
    std::vector<std::pair<std::string, std::int64_t>> out;
    for (std::size_t k = 0; k < kSize; ++k)
        if (c_[k] != 0) out.emplace_back(name(B(k)), c_[k]);
    return out;
}

std::string ChowClass::to_string() const {
    std::string s;
    for (const auto& [name, c] : nonzero_terms()) {
        std::int64_t mag = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1) s += std::to_string(mag) + "*";
        s += name;
    }
    return s.empty() ? "0" : s;
}

ChowClass ChowClass::parse(std::string_view text) {
    auto number = [](std::string_view digits) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) throw ParseError("bad integer in class expression");
        return basis(S00, v);
    };
    auto leaf = [](std::string_view id) {
        std::string_view key = id;
        if (key.starts_with("sigma"))
            key.remove_prefix(5);
        else if (key.starts_with("s"))
            key.remove_prefix(1);
        else
            throw ParseError("unknown Schubert class '" + std::string(id) + "'");
        static constexpr std::string_view keys[kSize] = {"00", "1", "2", "11", "21", "22"};
        for (std::size_t k = 0; k < kSize; ++k)
            if (key == keys[k]) return basis(B(k));
        if (key == "0") return basis(S00);
        throw ParseError("unknown Schubert class '" + std::string(id) + "'");
    };
    auto divide = [](const ChowClass&, const ChowClass&) -> ChowClass {
        throw ParseError("division is not defined in the Chow ring");
    };
    auto power = [](const ChowClass& base, unsigned e) {
        ChowClass r = basis(S00);
        for (unsigned k = 0; k < e; ++k) r = r * base;
        return r;
    };
    return detail::ExprParser<ChowClass>(text, number, leaf, divide, power).parse();
}

} // namespace normclass
