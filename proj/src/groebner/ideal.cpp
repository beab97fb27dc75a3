#include "normclass/groebner/ideal.hpp"

#include "normclass/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>
#include <unordered_set>

namespace normclass {

struct IdealHandle::Cache {
    std::mutex mutex;
    std::optional<GroebnerBasis> grevlex;
};

IdealHandle::IdealHandle(std::size_t nvars, std::vector<MultiPoly> generators)
    : nvars_(nvars), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.nvars() != nvars) throw DomainError("ideal generator has the wrong arity");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

const GroebnerBasis& IdealHandle::basis() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->grevlex) {
        if (generators_.empty())
            cache_->grevlex = GroebnerBasis(MonomialOrder::grevlex(), nvars_, {});
        else
            cache_->grevlex = groebner_basis(generators_, MonomialOrder::grevlex());
    }
    return *cache_->grevlex;
}

GroebnerBasis IdealHandle::basis(MonomialOrder order) const {
    if (order == MonomialOrder::grevlex()) return basis();
    if (generators_.empty()) return GroebnerBasis(order, nvars_, {});
    return groebner_basis(generators_, order);
}

bool IdealHandle::is_homogeneous() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const MultiPoly& g) { return g.is_homogeneous(); });
}

IdealHandle IdealHandle::with(std::span<const MultiPoly> extra) const {
    std::vector<MultiPoly> gens = generators_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealHandle(nvars_, std::move(gens));
}

bool same_ideal(const IdealHandle& a, const IdealHandle& b) {
    if (a.nvars() != b.nvars()) return false;
    return a.basis().polynomials() == b.basis().polynomials();
}

namespace {

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
    std::vector<Monomial> out;
    for (std::size_t k = 0; k < gb.size(); ++k) out.push_back(gb.leading_monomial(k));
    return out;
}

std::uint32_t support(const Monomial& m) {
    std::uint32_t s = 0;
    for (std::size_t v = 0; v < kMaxVars; ++v)
        if (m.e[v]) s |= 1u << v;
    return s;
}

// --- Hilbert series numerators of monomial ideals -------------------------

using TPoly = std::vector<BigInt>; // coefficient of t^k at index k

void add_shifted(TPoly& acc, const TPoly& p, unsigned shift, int sign) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, BigInt(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (sign > 0)
            acc[k + shift] += p[k];
        else
            acc[k + shift] -= p[k];
    }
}

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
        if (!redundant) kept.push_back(m);
    }
    gens = std::move(kept);
}

// Numerator N(t) with HS(k[x]/I) = N(t) / (1-t)^n.
TPoly hilbert_numerator(std::vector<Monomial> gens) {
    minimalize(gens);
    if (gens.empty()) return {BigInt(1)};
    if (gens.front().is_one()) return {};

    bool coprime = true;
    for (std::size_t a = 0; a < gens.size() && coprime; ++a)
        for (std::size_t b = a + 1; b < gens.size() && coprime; ++b)
            coprime = Monomial::coprime(gens[a], gens[b]);
    if (coprime) {
        TPoly acc{BigInt(1)};
        for (const auto& m : gens) {
            TPoly next = acc;
            add_shifted(next, acc, m.degree(), -1);
            acc = std::move(next);
        }
        return acc;
    }

    // Pivot on the variable occurring in the most generators.
    std::size_t best = 0, best_count = 0;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        std::size_t count = 0;
        for (const auto& m : gens) count += m.e[v] ? 1 : 0;
        if (count > best_count) {
            best = v;
            best_count = count;
        }
    }
    unsigned e = ~0u;
    for (const auto& m : gens)
        if (m.e[best]) e = std::min<unsigned>(e, m.e[best]);
    Monomial pivot = Monomial::variable(best, e);

    // HS(I) = HS(I + p) + t^e HS(I : p)
    std::vector<Monomial> plus = gens;
    plus.push_back(pivot);
    std::vector<Monomial> colon;
    for (const auto& m : gens) {
        Monomial q = m;
        q.e[best] = static_cast<std::uint16_t>(m.e[best] > e ? m.e[best] - e : 0);
        colon.push_back(q);
    }
    TPoly result = hilbert_numerator(std::move(plus));
    add_shifted(result, hilbert_numerator(std::move(colon)), e, +1);
    while (!result.empty() && sgn(result.back()) == 0) result.pop_back();
    return result;
}

BigInt value_at_one(const TPoly& p) {
    BigInt s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// Divides by (1 - t); requires p(1) = 0.
TPoly divide_one_minus_t(const TPoly& p) {
    TPoly q(p.size() > 0 ? p.size() - 1 : 0);
    BigInt running = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        running += p[k];
        q[k] = running;
    }
    return q;
}

std::vector<MultiPoly> eliminate_last(const std::vector<MultiPoly>& gens, std::size_t nvars) {
    std::uint32_t mask = 1u << nvars;
    GroebnerBasis gb = groebner_basis(gens, MonomialOrder::eliminate(mask));
    std::vector<MultiPoly> out;
    for (auto& p : gb.elements_free_of(mask)) out.push_back(p.with_arity(nvars));
    return out;
}

} // namespace

int affine_dimension(const IdealHandle& j) {
    const GroebnerBasis& gb = j.basis();
    if (gb.is_unit()) return -1;
    std::vector<std::uint32_t> supports;
    for (const auto& m : leading_monomials(gb)) supports.push_back(support(m));
    std::size_t n = j.nvars();
    int best = 0;
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        int size = std::popcount(set);
        if (size <= best) continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](std::uint32_t s) { return (s & ~set) == 0; });
        if (independent) best = size;
    }
    return best;
}

int ideal_dimension(const IdealHandle& j) {
    int d = affine_dimension(j);
    return d <= 0 ? -1 : d - 1;
}

std::size_t hilbert_degree(const IdealHandle& j) {
    if (!j.is_homogeneous()) throw HypothesisViolation("hilbert_degree needs a homogeneous ideal");
    const GroebnerBasis& gb = j.basis();
    if (gb.is_unit()) return 0;
    TPoly num = hilbert_numerator(leading_monomials(gb));
    std::size_t powers = 0;
    while (!num.empty() && sgn(value_at_one(num)) == 0) {
        num = divide_one_minus_t(num);
        ++powers;
    }
    // Krull dimension is nvars - powers; the irrelevant ideal has dimension 0.
    if (powers == j.nvars()) return 0;
    return value_at_one(num).get_ui();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    std::size_t n = gb.nvars();
    if (gb.is_unit()) return {};
    std::vector<Monomial> lms = leading_monomials(gb);
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = std::any_of(lms.begin(), lms.end(),
                                [&](const Monomial& m) { return support(m) == (1u << v); });
        if (!pure) throw NotZeroDimensional("ideal is not zero-dimensional");
    }
    auto is_standard = [&](const Monomial& m) {
        return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> out;
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> queue{Monomial{}};
    seen.insert(Monomial{});
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        out.push_back(m);
        for (std::size_t v = 0; v < n; ++v) {
            Monomial next = m * Monomial::variable(v);
            if (seen.count(next) || !is_standard(next)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
    return out;
}

IdealHandle saturate(const IdealHandle& j, const MultiPoly& g) {
    std::size_t n = j.nvars();
    if (n + 1 > kMaxVars) throw DomainError("too many variables for saturation");
    std::vector<MultiPoly> gens;
    for (const auto& p : j.generators()) gens.push_back(p.with_arity(n + 1));
    MultiPoly w = MultiPoly::variable(n + 1, n);
    gens.push_back(MultiPoly::constant(n + 1, 1) - w * g.with_arity(n + 1));
    return IdealHandle(n, eliminate_last(gens, n));
}

IdealHandle saturate(const IdealHandle& j, const IdealHandle& k) {
    std::optional<IdealHandle> acc;
    for (const auto& g : k.generators()) {
        IdealHandle s = saturate(j, g);
        acc = acc ? intersect(*acc, s) : s;
    }
    if (!acc) return IdealHandle(j.nvars(), {MultiPoly::constant(j.nvars(), 1)});
    return IdealHandle(j.nvars(), acc->basis().polynomials());
}

IdealHandle intersect(const IdealHandle& a, const IdealHandle& b) {
    std::size_t n = a.nvars();
    if (n + 1 > kMaxVars) throw DomainError("too many variables for intersection");
    MultiPoly s = MultiPoly::variable(n + 1, n);
    MultiPoly one_minus_s = MultiPoly::constant(n + 1, 1) - s;
    std::vector<MultiPoly> gens;
    for (const auto& p : a.generators()) gens.push_back(s * p.with_arity(n + 1));
    for (const auto& p : b.generators()) gens.push_back(one_minus_s * p.with_arity(n + 1));
    if (gens.empty()) return IdealHandle(n, {});
    return IdealHandle(n, eliminate_last(gens, n));
}

} // namespace normclass
