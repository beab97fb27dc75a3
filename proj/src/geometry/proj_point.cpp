#include "normclass/geometry/proj_point.hpp"

#include "normclass/errors.hpp"

namespace normclass {

ProjPoint::ProjPoint(std::vector<GaussianRational> coords) : coords_(std::move(coords)) {
    std::size_t k = 0;
    while (k < coords_.size() && coords_[k].is_zero()) ++k;
    if (k == coords_.size()) throw DomainError("projective point needs a nonzero coordinate");
    if (!coords_[k].is_one()) {
        GaussianRational inv = coords_[k].inverse();
        for (auto& c : coords_) c *= inv;
    }
}

std::size_t ProjPoint::pivot() const {
    std::size_t k = 0;
    while (k < coords_.size() && coords_[k].is_zero()) ++k;
    return k;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
    // Points with a later pivot sort first ([0:0:0:1] before [1:0:0:0]).
    if (a.pivot() != b.pivot()) return a.pivot() > b.pivot();
    for (std::size_t k = 0; k < a.coords_.size(); ++k) {
        if (a.coords_[k] == b.coords_[k]) continue;
        return canonical_less(a.coords_[k], b.coords_[k]);
    }
    return false;
}

std::string ProjPoint::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (k) s += ":";
        s += coords_[k].to_string();
    }
    return s + "]";
}

std::vector<std::string> ProjPoint::coordinate_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coords_) out.push_back(c.to_string());
    return out;
}

} // namespace normclass
