#include "normclass/poly/multipoly.hpp"

#include "normclass/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace normclass {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex_compare(a.m, b.m) > 0; }

// Merges two grevlex-sorted term lists, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = grevlex_compare(a[i].m, b[j].m);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (subtract) out.back().c = -out.back().c;
        } else {
            GaussianRational s = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
            if (!s.is_zero()) out.push_back({a[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (subtract) out.back().c = -out.back().c;
    }
    return out;
}

} // namespace

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVars) throw DomainError("too many variables");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const GaussianRational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DomainError("variable index out of range");
    return monomial(nvars, Monomial::variable(index), GaussianRational(1));
}

MultiPoly MultiPoly::monomial(std::size_t nvars, const Monomial& m, const GaussianRational& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

GaussianRational MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
    return GaussianRational(0);
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().m.degree());
}

int MultiPoly::low_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.back().m.degree());
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.m.e[var]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    return terms_.empty() || terms_.front().m.degree() == terms_.back().m.degree();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, false);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    terms_ = merge_terms(terms_, o.terms_, true);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    std::size_t n = std::max(a.nvars_, b.nvars_);
    if (a.is_zero() || b.is_zero()) return MultiPoly(n);
    if (a.size() == 1) return b.mul_term(a.terms_[0].m, a.terms_[0].c).with_arity(n);
    if (b.size() == 1) return a.mul_term(b.terms_[0].m, b.terms_[0].c).with_arity(n);
    std::unordered_map<Monomial, GaussianRational, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) acc[s.m * t.m] += s.c * t.c;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    std::sort(terms.begin(), terms.end(), term_greater);
    MultiPoly r(n);
    r.terms_ = std::move(terms);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (!(a.terms_[k].m == b.terms_[k].m) || a.terms_[k].c != b.terms_[k].c) return false;
    return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(nvars_, GaussianRational(1));
    MultiPoly base = *this;
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const GaussianRational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves grevlex order.
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d{t.m, t.c * GaussianRational(static_cast<long>(t.m.e[var]))};
        --d.m.e[var];
        out.push_back(std::move(d));
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::homogeneous_part(unsigned k) const {
    MultiPoly r(nvars_);
    for (const auto& t : terms_)
        if (t.m.degree() == k) r.terms_.push_back(t);
    return r;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> assignment) const {
    if (assignment.size() < nvars_) throw DomainError("substitution needs one value per variable");
    std::size_t n = assignment.empty() ? 0 : assignment[0].nvars();
    for (const auto& a : assignment)
        if (a.nvars() != n) throw DomainError("substitution values must share one arity");
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) {
        unsigned d = degree_in(v);
        powers[v].reserve(d + 1);
        powers[v].push_back(constant(n, GaussianRational(1)));
        for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * assignment[v]);
    }
    MultiPoly result(n);
    for (const auto& t : terms_) {
        MultiPoly term = constant(n, t.c);
        for (std::size_t v = 0; v < nvars_; ++v)
            if (t.m.e[v] != 0) term = term * powers[v][t.m.e[v]];
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
    std::vector<MultiPoly> assignment;
    assignment.reserve(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v)
        assignment.push_back(v == var ? value.with_arity(nvars_) : variable(nvars_, v));
    return substitute(assignment);
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational> point) const {
    if (point.size() < nvars_) throw DomainError("point arity does not match polynomial");
    GaussianRational sum(0);
    for (const auto& t : terms_) {
        GaussianRational v = t.c;
        for (std::size_t k = 0; k < nvars_; ++k)
            if (t.m.e[k] != 0) v *= point[k].pow(t.m.e[k]);
        sum += v;
    }
    return sum;
}

MultiPoly MultiPoly::with_arity(std::size_t nvars) const {
    if (nvars > kMaxVars) throw DomainError("too many variables");
    for (std::size_t v = nvars; v < nvars_; ++v)
        if (depends_on(v)) throw DomainError("cannot drop a variable the polynomial depends on");
    MultiPoly r = *this;
    r.nvars_ = nvars;
    return r;
}

MultiPoly MultiPoly::remap(std::size_t nvars, std::span<const std::size_t> target_index) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term r{Monomial{}, t.c};
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (t.m.e[v] == 0) continue;
            if (v >= target_index.size() || target_index[v] >= nvars)
                throw DomainError("remap drops a variable in use");
            r.m.e[target_index[v]] = static_cast<std::uint16_t>(r.m.e[target_index[v]] + t.m.e[v]);
        }
        out.push_back(std::move(r));
    }
    return from_terms(nvars, std::move(out));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
    for (const auto& t : terms_) {
        Term r = t;
        unsigned j = r.m.e[var];
        r.m.e[var] = 0;
        buckets[j].push_back(std::move(r));
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(nvars_, std::move(b)));
    return out;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return *this * terms_.front().c.inverse();
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::size_t n = std::max(a.nvars_, b.nvars_);
    MultiPoly q(n);
    MultiPoly r = a.with_arity(n);
    const Term& lb = b.terms_.front();
    GaussianRational inv = lb.c.inverse();
    std::vector<Term> qterms;
    while (!r.is_zero()) {
        const Term& lr = r.terms_.front();
        if (!lb.m.divides(lr.m)) return std::nullopt;
        Monomial m = lr.m / lb.m;
        GaussianRational c = lr.c * inv;
        r -= b.mul_term(m, c);
        qterms.push_back({m, std::move(c)});
    }
    return from_terms(n, std::move(qterms));
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string mono;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (t.m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v < names.size() ? names[v] : "v" + std::to_string(v);
            if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
        }
        bool negative = false;
        std::string coef;
        if (t.c.is_real()) {
            Rational r = t.c.re();
            if (sgn(r) < 0) {
                negative = true;
                r = -r;
            }
            if (!(r == 1) || mono.empty()) coef = r.get_str();
        } else if (sgn(t.c.re()) == 0) {
            Rational im = t.c.im();
            if (sgn(im) < 0) {
                negative = true;
                im = -im;
            }
            coef = im == 1 ? "i" : im.get_str() + "*i";
        } else {
            coef = "(" + t.c.to_string() + ")";
        }
        std::string body = coef;
        if (!mono.empty()) body = coef.empty() ? mono : coef + "*" + mono;
        if (first) {
            out += negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

std::string MultiPoly::to_string() const { return to_string(default_variable_names(nvars_)); }

std::vector<std::string> default_variable_names(std::size_t nvars) {
    if (nvars == 3) return {"x", "y", "z"};
    if (nvars == 4) return {"x", "y", "z", "t"};
    std::vector<std::string> names;
    static const char* base[] = {"x", "y", "z", "t"};
    for (std::size_t v = 0; v < nvars; ++v) names.push_back(v < 4 ? base[v] : "w" + std::to_string(v - 4));
    return names;
}

bool euler_check(const MultiPoly& f) {
    if (!f.is_homogeneous()) throw HypothesisViolation("euler_check requires a homogeneous polynomial");
    if (f.is_zero()) return true;
    std::size_t n = f.nvars();
    MultiPoly sum(n);
    for (std::size_t v = 0; v < n; ++v) sum += MultiPoly::variable(n, v) * f.derivative(v);
    return sum == f * GaussianRational(static_cast<long>(f.total_degree()));
}

namespace {

int main_variable(const MultiPoly& a, const MultiPoly& b) {
    for (std::size_t v = std::max(a.nvars(), b.nvars()); v-- > 0;)
        if ((v < a.nvars() && a.depends_on(v)) || (v < b.nvars() && b.depends_on(v))) return static_cast<int>(v);
    return -1;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    MultiPoly c(p.nvars());
    for (const auto& coef : p.coefficients_in(var)) {
        if (coef.is_zero()) continue;
        c = gcd(c, coef);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Pseudo-remainder of a by b with respect to var.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
    unsigned db = b.degree_in(var);
    auto bc = b.coefficients_in(var);
    const MultiPoly& lb = bc.back();
    std::size_t n = a.nvars();
    while (!a.is_zero() && a.degree_in(var) >= db) {
        unsigned da = a.degree_in(var);
        MultiPoly la = a.coefficients_in(var).back();
        MultiPoly shift = la * MultiPoly::monomial(n, Monomial::variable(var, da - db), GaussianRational(1));
        a = lb * a - shift * b;
    }
    return a;
}

} // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    std::size_t n = std::max(a.nvars(), b.nvars());
    if (a.is_zero()) return b.with_arity(n).monic();
    if (b.is_zero()) return a.with_arity(n).monic();
    int v = main_variable(a, b);
    if (v < 0) return MultiPoly::constant(n, GaussianRational(1));
    std::size_t var = static_cast<std::size_t>(v);
    MultiPoly aa = a.with_arity(n), bb = b.with_arity(n);
    if (!aa.depends_on(var)) return gcd(aa, content_in(bb, var));
    if (!bb.depends_on(var)) return gcd(content_in(aa, var), bb);
    MultiPoly ca = content_in(aa, var), cb = content_in(bb, var);
    MultiPoly pa = *MultiPoly::divide_exact(aa, ca);
    MultiPoly pb = *MultiPoly::divide_exact(bb, cb);
    MultiPoly c = gcd(ca, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    MultiPoly g;
    for (;;) {
        MultiPoly r = pseudo_remainder(pa, pb, var);
        if (r.is_zero()) {
            g = std::move(pb);
            break;
        }
        if (!r.depends_on(var)) {
            // Primitive parts share no factor involving var.
            g = MultiPoly::constant(n, GaussianRational(1));
            break;
        }
        pa = std::move(pb);
        pb = *MultiPoly::divide_exact(r, content_in(r, var));
    }
    g = *MultiPoly::divide_exact(g, content_in(g, var));
    return (c * g).monic();
}

} // namespace normclass
