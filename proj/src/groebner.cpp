#include "cylcalc/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cylcalc {
namespace {

// Inside the engine a polynomial is its term list sorted descending under
// the active order. All helpers below preserve that invariant.
using Terms = std::vector<Term>;

Terms to_ordered(const Polynomial& p, const MonomialOrder& o) {
    Terms t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return o.greater(a.mono, b.mono); });
    return t;
}

Polynomial from_ordered(const Terms& t) {
    return Polynomial::from_terms(t);
}

Terms make_monic(Terms f) {
    if (f.empty() || f.front().coeff.is_one()) return f;
    Rational inv = f.front().coeff.inverse();
    for (auto& t : f) t.coeff = t.coeff * inv;
    return f;
}

// f - c * (m * g), merged in one pass.
Terms sub_scaled(const Terms& f, const Rational& c, const Monomial& m, const Terms& g,
                 const MonomialOrder& o) {
    Terms out;
    out.reserve(f.size() + g.size());
    std::size_t a = 0, b = 0;
    while (a < f.size() || b < g.size()) {
        if (b == g.size()) {
            out.push_back(f[a++]);
            continue;
        }
        Monomial gm = g[b].mono * m;
        if (a == f.size()) {
            out.push_back({gm, -(c * g[b].coeff)});
            ++b;
            continue;
        }
        int cmp = o.compare(f[a].mono, gm);
        if (cmp > 0) {
            out.push_back(f[a++]);
        } else if (cmp < 0) {
            out.push_back({gm, -(c * g[b].coeff)});
            ++b;
        } else {
            Rational v = f[a].coeff - c * g[b].coeff;
            if (!v.is_zero()) out.push_back({f[a].mono, v});
            ++a; ++b;
        }
    }
    return out;
}

// Full remainder: no term of the result is divisible by any leading monomial.
Terms normal_form_terms(Terms f, const std::vector<Terms>& basis, const MonomialOrder& o) {
    Terms out;
    while (!f.empty()) {
        const Term& lt = f.front();
        const Terms* red = nullptr;
        for (const auto& g : basis) {
            if (!g.empty() && g.front().mono.divides(lt.mono)) { red = &g; break; }
        }
        if (red == nullptr) {
            out.push_back(lt);
            f.erase(f.begin());
            continue;
        }
        Monomial q = red->front().mono.divide_into(lt.mono);
        Rational c = lt.coeff / red->front().coeff;
        f = sub_scaled(f, c, q, *red, o);
    }
    return out;
}

Terms s_polynomial(const Terms& f, const Terms& g, const MonomialOrder& o) {
    Monomial l = Monomial::lcm(f.front().mono, g.front().mono);
    Monomial uf = f.front().mono.divide_into(l);
    Monomial ug = g.front().mono.divide_into(l);
    Terms lhs;
    lhs.reserve(f.size());
    Rational fc = f.front().coeff.inverse();
    for (const auto& t : f) lhs.push_back({t.mono * uf, t.coeff * fc});
    return sub_scaled(lhs, g.front().coeff.inverse(), ug, g, o);
}

struct SPair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    Exponent degree;
};

struct SPairCmp {
    const MonomialOrder* order;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

class PairQueue {
public:
    explicit PairQueue(const MonomialOrder& o) : set_(SPairCmp{&o}) {}

    void push(std::size_t i, std::size_t j, const std::vector<Terms>& basis) {
        if (i > j) std::swap(i, j);
        Monomial l = Monomial::lcm(basis[i].front().mono, basis[j].front().mono);
        set_.insert({i, j, l, l.total_degree()});
        keys_.insert({i, j});
    }
    bool empty() const { return set_.empty(); }
    SPair pop_min() {
        SPair p = *set_.begin();
        set_.erase(set_.begin());
        keys_.erase({p.i, p.j});
        return p;
    }
    Exponent min_degree() const { return set_.begin()->degree; }
    bool contains(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return keys_.count({i, j}) != 0;
    }

private:
    std::set<SPair, SPairCmp> set_;
    std::set<std::pair<std::size_t, std::size_t>> keys_;
};

// Buchberger's first criterion: coprime leading monomials.
bool product_criterion(const std::vector<Terms>& basis, const SPair& p) {
    return Monomial::coprime(basis[p.i].front().mono, basis[p.j].front().mono);
}

// Buchberger's second criterion, consulted only against pairs that are no
// longer pending, so the justification order is well founded.
bool chain_criterion(const std::vector<Terms>& basis, const PairQueue& pending, const SPair& p) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == p.i || k == p.j) continue;
        if (!basis[k].front().mono.divides(p.lcm)) continue;
        if (!pending.contains(p.i, k) && !pending.contains(p.j, k)) return true;
    }
    return false;
}

void append_generator(std::vector<Terms>& basis, PairQueue& pending, Terms g) {
    basis.push_back(make_monic(std::move(g)));
    std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.push(k, n, basis);
}

std::vector<Terms> buchberger_serial(std::vector<Terms> basis, const MonomialOrder& o) {
    PairQueue pending(o);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.push(i, j, basis);
    while (!pending.empty()) {
        SPair p = pending.pop_min();
        if (product_criterion(basis, p)) continue;
        if (chain_criterion(basis, pending, p)) continue;
        Terms r = normal_form_terms(s_polynomial(basis[p.i], basis[p.j], o), basis, o);
        if (!r.empty()) append_generator(basis, pending, std::move(r));
    }
    return basis;
}

// Batched variant: every pending pair of the current minimal lcm degree is
// reduced against a frozen snapshot of the basis in parallel, then the
// survivors are folded in sequentially in a fixed order. The fold re-reduces
// against the live basis, so the outcome matches a sequential schedule.
std::vector<Terms> buchberger_parallel(std::vector<Terms> basis, const MonomialOrder& o) {
    PairQueue pending(o);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pending.push(i, j, basis);
    while (!pending.empty()) {
        Exponent d = pending.min_degree();
        std::vector<SPair> batch;
        while (!pending.empty() && pending.min_degree() == d) {
            SPair p = pending.pop_min();
            if (product_criterion(basis, p)) continue;
            if (chain_criterion(basis, pending, p)) continue;
            batch.push_back(std::move(p));
        }
        if (batch.empty()) continue;

        std::vector<Terms> reduced(batch.size());
        const std::vector<Terms>& frozen = basis;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long idx = 0; idx < static_cast<long>(batch.size()); ++idx) {
            const SPair& p = batch[static_cast<std::size_t>(idx)];
            reduced[static_cast<std::size_t>(idx)] =
                normal_form_terms(s_polynomial(frozen[p.i], frozen[p.j], o), frozen, o);
        }
        for (auto& r : reduced) {
            if (r.empty()) continue;
            Terms r2 = normal_form_terms(std::move(r), basis, o);
            if (!r2.empty()) append_generator(basis, pending, std::move(r2));
        }
    }
    return basis;
}

// Minimal then tail-reduced: leading monomials are pairwise indivisible and
// no term of any element is reducible by another. The result is the unique
// reduced basis of the ideal, independent of the path that produced it.
std::vector<Terms> interreduce(std::vector<Terms> basis, const MonomialOrder& o) {
    std::vector<Terms> monic;
    for (auto& g : basis)
        if (!g.empty()) monic.push_back(make_monic(std::move(g)));
    std::sort(monic.begin(), monic.end(), [&](const Terms& a, const Terms& b) {
        int c = o.compare(a.front().mono, b.front().mono);
        return c < 0;
    });

    std::vector<Terms> minimal;
    for (auto& g : monic) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (h.front().mono.divides(g.front().mono)) { redundant = true; break; }
        if (!redundant) minimal.push_back(std::move(g));
    }

    // Leading monomials are now fixed, so one tail-reduction pass settles it.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Terms> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        minimal[i] = make_monic(normal_form_terms(std::move(minimal[i]), others, o));
    }
    return minimal;
}

bool use_parallel(GbEngine engine) {
    switch (engine) {
        case GbEngine::Serial: return false;
        case GbEngine::Parallel: return true;
        case GbEngine::Auto:
#ifdef _OPENMP
            return omp_get_max_threads() > 1;
#else
            return false;
#endif
    }
    return false;
}

// Reduced bases depend only on the ideal and the order, which makes them
// safe to memoize globally. Decision procedures revisit the same small
// ideals constantly, so this pays for itself quickly.
class BasisCache {
public:
    bool lookup(const std::string& key, std::vector<Polynomial>& out) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, const std::vector<Polynomial>& value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, value);
    }

private:
    mutable std::mutex mu_;
    std::map<std::string, std::vector<Polynomial>> map_;
};

BasisCache& basis_cache() {
    static BasisCache cache;
    return cache;
}

std::string cache_key(const IdealPresentation& ideal, const MonomialOrder& order) {
    std::vector<std::string> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
    std::sort(gens.begin(), gens.end());
    std::string key = order.to_string() + "|" + ideal.level().to_string();
    for (const auto& g : gens) key += "|" + g;
    return key;
}

}  // namespace

GroebnerBasis groebner_basis(const IdealPresentation& ideal, const MonomialOrder& order,
                             GbEngine engine) {
    GroebnerBasis out;
    out.level = ideal.level();
    out.order = order;
    if (ideal.generators().empty()) return out;

    // Only Auto consults the memo; forcing an engine is a request to really
    // run it, which the serial/parallel comparison tests depend on.
    std::string key = cache_key(ideal, order);
    if (engine == GbEngine::Auto && basis_cache().lookup(key, out.elements)) return out;

    std::vector<Terms> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(make_monic(to_ordered(g, order)));

    std::vector<Terms> basis = use_parallel(engine) ? buchberger_parallel(std::move(gens), order)
                                                    : buchberger_serial(std::move(gens), order);
    basis = interreduce(std::move(basis), order);

    out.elements.reserve(basis.size());
    for (const auto& g : basis) out.elements.push_back(from_ordered(g));
    basis_cache().store(key, out.elements);
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    std::vector<Terms> b;
    b.reserve(basis.elements.size());
    for (const auto& g : basis.elements) b.push_back(to_ordered(g, basis.order));
    return from_ordered(normal_form_terms(to_ordered(f, basis.order), b, basis.order));
}

bool ideal_member(const Polynomial& f, const IdealPresentation& ideal) {
    if (f.is_zero()) return true;
    return normal_form(f, groebner_basis(ideal)).is_zero();
}

bool is_consistent(const IdealPresentation& ideal) {
    return !groebner_basis(ideal).is_unit();
}

bool radical_member(const Polynomial& f, const IdealPresentation& ideal) {
    VarSet ambient = ideal.level().unioned(f.support());
    VarIndex y = ambient.fresh_after();
    VarSet extended = ambient;
    extended.insert(y);
    Polynomial trick = Polynomial::constant(Rational(1)) - Polynomial::variable(y) * f;
    std::vector<Polynomial> gens = ideal.generators();
    gens.push_back(trick);
    return !is_consistent(IdealPresentation(extended, std::move(gens)));
}

bool radical_equal(const IdealPresentation& a, const IdealPresentation& b) {
    VarSet m = a.level().unioned(b.level());
    IdealPresentation am = a.at_level(m);
    IdealPresentation bm = b.at_level(m);
    for (const auto& g : a.generators())
        if (!radical_member(g, bm)) return false;
    for (const auto& g : b.generators())
        if (!radical_member(g, am)) return false;
    return true;
}

IdealPresentation eliminate(const IdealPresentation& ideal, const VarSet& keep) {
    if (!keep.subset_of(ideal.level()))
        throw std::invalid_argument("eliminate: keep set " + keep.to_string() +
                                    " not inside level " + ideal.level().to_string());
    VarSet dropped = ideal.level().minus(keep);
    MonomialOrder order =
        dropped.empty() ? MonomialOrder::grevlex() : MonomialOrder::block_elim(dropped);
    GroebnerBasis gb = groebner_basis(ideal, order);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements)
        if (g.support().subset_of(keep)) kept.push_back(g);
    return IdealPresentation(keep, std::move(kept));
}

IdealPresentation saturate(const IdealPresentation& ideal, const Polynomial& f) {
    if (!f.support().subset_of(ideal.level()))
        throw std::invalid_argument("saturate: " + f.to_string() + " lies outside level " +
                                    ideal.level().to_string());
    VarIndex y = ideal.level().fresh_after();
    VarSet extended = ideal.level();
    extended.insert(y);
    Polynomial trick = Polynomial::constant(Rational(1)) - Polynomial::variable(y) * f;
    std::vector<Polynomial> gens = ideal.generators();
    gens.push_back(trick);
    return eliminate(IdealPresentation(extended, std::move(gens)), ideal.level());
}

}  // namespace cylcalc
