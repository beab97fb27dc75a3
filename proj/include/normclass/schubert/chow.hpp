#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace normclass {

/// Element of the Chow ring of G(1,3), on the Schubert basis
/// sigma_00, sigma_1, sigma_2, sigma_11, sigma_21, sigma_22.
class ChowClass {
public:
    enum Basis { S00, S1, S2, S11, S21, S22 };
    static constexpr std::size_t kSize = 6;

    ChowClass() = default;
    static ChowClass basis(Basis b, std::int64_t coeff = 1);
    static ChowClass schubert(std::int64_t a, std::int64_t b) { return basis(S2, a) + basis(S11, b); }

    std::int64_t operator[](Basis b) const { return c_[b]; }
    std::int64_t& operator[](Basis b) { return c_[b]; }

    static unsigned degree(Basis b);
    static const char* name(Basis b);

    friend ChowClass operator+(const ChowClass& u, const ChowClass& v);
    friend ChowClass operator-(const ChowClass& u, const ChowClass& v);
    ChowClass operator-() const;
    friend ChowClass operator*(std::int64_t k, const ChowClass& u);
    friend ChowClass operator*(const ChowClass& u, const ChowClass& v);
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    bool is_zero() const;
    /// Nonzero coefficients in basis order, keyed "sigma00" ... "sigma22".
    std::vector<std::pair<std::string, std::int64_t>> nonzero_terms() const;
    /// "sigma2 + sigma11", "0", "3*sigma2 - sigma11".
    std::string to_string() const;

    /// Expression over s00 (or 1), s1, s2, s11, s21, s22 (also sigmaXX) and
    /// integers with + - * ^ and parentheses.
    static ChowClass parse(std::string_view text);

private:
    std::array<std::int64_t, kSize> c_{};
};

ChowClass chow_mul(const ChowClass& u, const ChowClass& v);

} // namespace normclass
