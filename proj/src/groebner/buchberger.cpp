#include "normclass/groebner/buchberger.hpp"

#include "normclass/errors.hpp"

#include <algorithm>

namespace normclass {

namespace detail {

std::vector<Term> sorted_terms(const MultiPoly& p, const MonomialOrder& order) {
    std::vector<Term> t = p.terms();
    if (order.kind != MonomialOrder::Kind::Grevlex)
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.m, b.m) > 0; });
    return t;
}

namespace {

// tail(p, from) - c * m * tail(g, 1), merged in descending order.
std::vector<Term> subtract_multiple(const std::vector<Term>& p, std::size_t from, const std::vector<Term>& g,
                                    const Monomial& m, const GaussianRational& c, const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from, j = 1;
    while (i < p.size() && j < g.size()) {
        Monomial gm = g[j].m * m;
        int cmp = order.compare(p[i].m, gm);
        if (cmp > 0) {
            out.push_back(p[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, -(c * g[j].c)});
            ++j;
        } else {
            GaussianRational v = p[i].c - c * g[j].c;
            if (!v.is_zero()) out.push_back({gm, std::move(v)});
            ++i;
            ++j;
        }
    }
    for (; i < p.size(); ++i) out.push_back(p[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].m * m, -(c * g[j].c)});
    return out;
}

} // namespace

std::vector<Term> reduce_fully(std::vector<Term> p, const std::vector<const std::vector<Term>*>& basis,
                               const MonomialOrder& order) {
    std::vector<Term> result;
    std::size_t head = 0;
    while (head < p.size()) {
        const Term& lt = p[head];
        const std::vector<Term>* reducer = nullptr;
        for (const auto* g : basis) {
            if (g->front().m.divides(lt.m) && (reducer == nullptr || g->size() < reducer->size())) reducer = g;
        }
        if (reducer == nullptr) {
            result.push_back(std::move(p[head]));
            ++head;
            continue;
        }
        // Basis elements are monic.
        Monomial m = lt.m / reducer->front().m;
        GaussianRational c = lt.c;
        p = subtract_multiple(p, head + 1, *reducer, m, c, order);
        head = 0;
    }
    return result;
}

} // namespace detail

using detail::reduce_fully;
using detail::sorted_terms;

GroebnerBasis::GroebnerBasis(MonomialOrder order, std::size_t nvars, std::vector<std::vector<Term>> elements)
    : order_(order), nvars_(nvars), elements_(std::move(elements)) {}

bool GroebnerBasis::is_unit() const {
    return elements_.size() == 1 && elements_[0].size() == 1 && elements_[0][0].m.is_one();
}

MultiPoly GroebnerBasis::element(std::size_t k) const { return MultiPoly::from_terms(nvars_, elements_[k]); }

std::vector<MultiPoly> GroebnerBasis::polynomials() const {
    std::vector<MultiPoly> out;
    out.reserve(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); ++k) out.push_back(element(k));
    return out;
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const {
    std::vector<const std::vector<Term>*> basis;
    for (const auto& e : elements_) basis.push_back(&e);
    return MultiPoly::from_terms(std::max(nvars_, p.nvars()), reduce_fully(sorted_terms(p, order_), basis, order_));
}

std::vector<MultiPoly> GroebnerBasis::elements_free_of(std::uint32_t mask) const {
    std::vector<MultiPoly> out;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        bool free = true;
        for (const auto& t : elements_[k]) {
            for (std::size_t v = 0; v < kMaxVars && free; ++v)
                if ((mask & (1u << v)) && t.m.e[v] != 0) free = false;
            if (!free) break;
        }
        if (free) out.push_back(element(k));
    }
    return out;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

class Buchberger {
public:
    Buchberger(MonomialOrder order, std::size_t nvars) : order_(order), nvars_(nvars) {}

    void add_input(const MultiPoly& f) {
        auto terms = sorted_terms(f, order_);
        if (terms.empty()) return;
        auto h = reduce_fully(std::move(terms), active_basis(), order_);
        if (h.empty()) return;
        insert(std::move(h), static_cast<unsigned>(std::max(0, f.total_degree())));
    }

    void run() {
        while (!pairs_.empty() && !unit_) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                return order_.compare(a.lcm, b.lcm) < 0;
            });
            Pair p = *best;
            pairs_.erase(best);
            auto s = spoly(p);
            auto h = reduce_fully(std::move(s), active_basis(), order_);
            if (!h.empty()) insert(std::move(h), p.sugar);
        }
    }

    GroebnerBasis result() {
        if (unit_) {
            return GroebnerBasis(order_, nvars_, {{Term{Monomial{}, GaussianRational(1)}}});
        }
        std::vector<std::vector<Term>> reduced;
        for (std::size_t k : active_) {
            std::vector<const std::vector<Term>*> others;
            for (std::size_t o : active_)
                if (o != k) others.push_back(&store_[o]);
            const auto& g = store_[k];
            std::vector<Term> tail(g.begin() + 1, g.end());
            auto red = reduce_fully(std::move(tail), others, order_);
            std::vector<Term> full;
            full.reserve(red.size() + 1);
            full.push_back(g.front());
            for (auto& t : red) full.push_back(std::move(t));
            reduced.push_back(std::move(full));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
            return order_.compare(a.front().m, b.front().m) < 0;
        });
        return GroebnerBasis(order_, nvars_, std::move(reduced));
    }

private:
    std::vector<const std::vector<Term>*> active_basis() const {
        std::vector<const std::vector<Term>*> b;
        b.reserve(active_.size());
        for (std::size_t k : active_) b.push_back(&store_[k]);
        return b;
    }

    const Monomial& lm(std::size_t k) const { return store_[k].front().m; }

    std::vector<Term> spoly(const Pair& p) const {
        const auto& f = store_[p.i];
        const auto& g = store_[p.j];
        Monomial mf = p.lcm / f.front().m;
        Monomial mg = p.lcm / g.front().m;
        std::vector<Term> fs;
        fs.reserve(f.size());
        for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({f[k].m * mf, f[k].c});
        // fs - mg * tail(g); leading terms cancel since both are monic.
        std::vector<Term> lead_dummy;
        lead_dummy.reserve(fs.size() + 1);
        lead_dummy.push_back({p.lcm, GaussianRational(0)});
        for (auto& t : fs) lead_dummy.push_back(std::move(t));
        std::vector<Term> out;
        out.reserve(lead_dummy.size() + g.size());
        std::size_t i = 1, j = 1;
        while (i < lead_dummy.size() && j < g.size()) {
            Monomial gm = g[j].m * mg;
            int c = order_.compare(lead_dummy[i].m, gm);
            if (c > 0) {
                out.push_back(std::move(lead_dummy[i++]));
            } else if (c < 0) {
                out.push_back({gm, -g[j].c});
                ++j;
            } else {
                GaussianRational v = lead_dummy[i].c - g[j].c;
                if (!v.is_zero()) out.push_back({gm, std::move(v)});
                ++i;
                ++j;
            }
        }
        for (; i < lead_dummy.size(); ++i) out.push_back(std::move(lead_dummy[i]));
        for (; j < g.size(); ++j) out.push_back({g[j].m * mg, -g[j].c});
        return out;
    }

    unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
        unsigned a = sugar_[i] + (l.degree() - lm(i).degree());
        unsigned b = sugar_[j] + (l.degree() - lm(j).degree());
        return std::max(a, b);
    }

    void insert(std::vector<Term> h, unsigned sugar) {
        GaussianRational inv = h.front().c.inverse();
        if (!h.front().c.is_one())
            for (auto& t : h) t.c *= inv;
        if (h.front().m.is_one()) {
            unit_ = true;
            return;
        }
        std::size_t hi = store_.size();
        store_.push_back(std::move(h));
        sugar_.push_back(sugar);
        update(hi);
    }

    // Gebauer-Moeller installation of the new element hi.
    void update(std::size_t hi) {
        const Monomial& lh = lm(hi);
        std::vector<Pair> candidates;
        for (std::size_t g : active_) {
            Monomial l = Monomial::lcm(lh, lm(g));
            candidates.push_back({g, hi, l, pair_sugar(g, hi, l)});
        }
        std::vector<Pair> kept;
        std::vector<bool> removed(candidates.size(), false);
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            bool keep = Monomial::coprime(lh, lm(p.i));
            if (!keep) {
                keep = true;
                for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
                    if (b == a || removed[b]) continue;
                    if (candidates[b].lcm.divides(p.lcm)) keep = false;
                }
            }
            if (keep) kept.push_back(p);
            else removed[a] = true;
        }
        std::vector<Pair> fresh;
        for (const auto& p : kept)
            if (!Monomial::coprime(lh, lm(p.i))) fresh.push_back(p);

        std::vector<Pair> old;
        for (const auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) && !(Monomial::lcm(lm(p.i), lh) == p.lcm) &&
                        !(Monomial::lcm(lh, lm(p.j)) == p.lcm);
            if (!drop) old.push_back(p);
        }
        old.insert(old.end(), fresh.begin(), fresh.end());
        pairs_ = std::move(old);

        std::vector<std::size_t> next;
        for (std::size_t g : active_)
            if (!lh.divides(lm(g))) next.push_back(g);
        next.push_back(hi);
        active_ = std::move(next);
    }

    MonomialOrder order_;
    std::size_t nvars_;
    std::vector<std::vector<Term>> store_;
    std::vector<unsigned> sugar_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    bool unit_ = false;
};

} // namespace

GroebnerBasis groebner_basis(std::span<const MultiPoly> generators, MonomialOrder order) {
    std::size_t n = 0;
    for (const auto& g : generators) n = std::max(n, g.nvars());
    std::vector<MultiPoly> gens;
    for (const auto& g : generators)
        if (!g.is_zero()) gens.push_back(g.with_arity(n));
    // Process low-degree inputs first; they tend to reduce the others.
    std::stable_sort(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.size() < b.size();
    });
    Buchberger bb(order, n);
    for (const auto& g : gens) bb.add_input(g);
    bb.run();
    return bb.result();
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
    auto ft = sorted_terms(f, order);
    auto gt = sorted_terms(g, order);
    if (ft.empty() || gt.empty()) return MultiPoly(std::max(f.nvars(), g.nvars()));
    Monomial l = Monomial::lcm(ft.front().m, gt.front().m);
    std::size_t n = std::max(f.nvars(), g.nvars());
    MultiPoly a = f.mul_term(l / ft.front().m, ft.front().c.inverse());
    MultiPoly b = g.mul_term(l / gt.front().m, gt.front().c.inverse());
    return (a - b).with_arity(n);
}

} // namespace normclass
