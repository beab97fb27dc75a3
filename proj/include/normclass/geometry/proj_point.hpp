#pragma once

#include "normclass/arith/gaussian.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace normclass {

/// Point of P^2 or P^3 with Q(i) coordinates. The stored representative has
/// its first nonzero coordinate equal to 1, so equality up to a nonzero
/// scalar is plain vector equality.
class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<GaussianRational> coords);
    ProjPoint(std::initializer_list<GaussianRational> coords)
        : ProjPoint(std::vector<GaussianRational>(coords)) {}

    std::size_t size() const { return coords_.size(); }
    const GaussianRational& operator[](std::size_t k) const { return coords_[k]; }
    const std::vector<GaussianRational>& coords() const { return coords_; }
    std::span<const GaussianRational> span() const { return coords_; }

    /// Index of the first nonzero coordinate (which equals 1).
    std::size_t pivot() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    /// Canonical order for deterministic listings.
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);

    /// "[0:1:i:0]"
    std::string to_string() const;
    std::vector<std::string> coordinate_strings() const;

private:
    std::vector<GaussianRational> coords_;
};

} // namespace normclass
