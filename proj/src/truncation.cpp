#include "cylcalc/truncation.hpp"

#include <stdexcept>

namespace cylcalc {

FieldEnumeration::FieldEnumeration(Fn fn, std::string name)
    : fn_(std::move(fn)), name_(std::move(name)), state_(std::make_shared<State>()) {}

FieldEnumeration FieldEnumeration::standard() {
    // q_1 = 1, q_{k+1} = 1 / (2*floor(q_k) - q_k + 1) enumerates the positive
    // rationals without repetition; interleave signs and start at zero.
    auto q_cache = std::make_shared<std::vector<Rational>>();
    auto q_at = [q_cache](std::uint64_t k) {  // 1-based
        while (q_cache->size() < k) {
            if (q_cache->empty()) {
                q_cache->push_back(Rational(1));
            } else {
                const Rational& prev = q_cache->back();
                Rational next =
                    (Rational(2) * prev.floor() - prev + Rational(1)).inverse();
                q_cache->push_back(next);
            }
        }
        return (*q_cache)[k - 1];
    };
    return FieldEnumeration(
        [q_at](std::uint64_t i) -> Rational {
            if (i == 1) return Rational(0);
            if (i % 2 == 0) return q_at(i / 2);
            return -q_at((i - 1) / 2);
        },
        "default");
}

Rational FieldEnumeration::at(std::uint64_t i) const {
    if (i == 0) throw std::invalid_argument("enumeration indices are 1-based");
    auto& cache = state_->cache;
    while (cache.size() < i) {
        std::uint64_t next = cache.size() + 1;
        Rational v = fn_(next);
        auto [it, fresh] = state_->seen.emplace(v.to_string(), next);
        if (!fresh)
            throw std::logic_error("enumeration repeats " + v.to_string() + " at indices " +
                                   std::to_string(it->second) + " and " + std::to_string(next));
        cache.push_back(std::move(v));
    }
    return cache[i - 1];
}

IdealPresentation CounterexampleTruncation::ideal(int i) const {
    if (i < 1 || i > n) throw std::invalid_argument("depth out of range");
    std::vector<Polynomial> slice(gens.begin(), gens.begin() + i);
    return IdealPresentation(VarSet::range(0, static_cast<VarIndex>(i)), std::move(slice));
}

CounterexampleTruncation build_truncation(int n, const FieldEnumeration& e) {
    if (n < 1) throw std::invalid_argument("truncation depth must be positive");
    CounterexampleTruncation tr;
    tr.n = n;
    tr.enumeration = e;
    for (int k = 1; k <= n; ++k) {
        Polynomial t0 = Polynomial::variable(0);
        Polynomial tk = Polynomial::variable(static_cast<VarIndex>(k));
        Polynomial g = (t0 - Polynomial::constant(e.at(static_cast<std::uint64_t>(k)))) * tk -
                       Polynomial::constant(Rational(1));
        tr.gens.push_back(g);
    }
    return tr;
}

std::map<VarIndex, Rational> witness_point(const CounterexampleTruncation& tr, int m) {
    if (m < 1 || m > tr.n) throw std::invalid_argument("depth out of range");
    std::map<VarIndex, Rational> x;
    Rational x0 = tr.enumeration.at(static_cast<std::uint64_t>(m) + 1);
    x[0] = x0;
    for (int k = 1; k <= m; ++k) {
        Rational ak = tr.enumeration.at(static_cast<std::uint64_t>(k));
        x[static_cast<VarIndex>(k)] = (x0 - ak).inverse();
    }
    return x;
}

bool NoFiniteSubcoverReport::all_verified() const {
    for (bool ok : chain_ok)
        if (!ok) return false;
    if (!deepest_consistent) return false;
    for (const auto& v : witness_values)
        if (!v.is_zero()) return false;
    return true;
}

std::string NoFiniteSubcoverReport::render() const {
    std::string s = "== truncation ==\n";
    s += "depth: " + std::to_string(truncation.n) + "\n";
    s += "enumeration: " + truncation.enumeration.name();
    for (int k = 1; k <= truncation.n + 1; ++k) {
        s += (k == 1 ? "; values " : ", ") +
             truncation.enumeration.at(static_cast<std::uint64_t>(k)).to_string();
    }
    s += "\n";
    s += "generators:";
    for (std::size_t i = 0; i < truncation.gens.size(); ++i)
        s += (i ? "; " : " ") + truncation.gens[i].to_string();
    s += "\n";

    s += "== ascending chain ==\n";
    for (std::size_t i = 0; i < chain_ok.size(); ++i) {
        s += "depth " + std::to_string(i + 1) + " inside radical of depth " +
             std::to_string(i + 2) + ": " + (chain_ok[i] ? "ok" : "FAILED") + "\n";
    }
    if (chain_ok.empty()) s += "single depth, nothing to chain\n";

    s += "== consistency ==\n";
    s += "deepest closed part: " +
         std::string(deepest_consistent ? "nonempty (reduced basis is not {1})"
                                        : "EMPTY (unexpected)") +
         "\n";

    s += "== witness ==\n";
    s += "point:";
    bool first = true;
    for (const auto& [v, val] : witness) {
        s += (first ? " " : "; ") + ("t" + std::to_string(v)) + " = " + val.to_string();
        first = false;
    }
    s += "\n";
    s += "generator values:";
    for (std::size_t i = 0; i < witness_values.size(); ++i)
        s += (i ? "; " : " ") + witness_values[i].to_string();
    s += "\n";

    s += "== conclusion ==\n";
    if (all_verified()) {
        s += "the opens ascend, so their union is the deepest open, and the witness point "
             "stays outside it: no subfamily of these opens covers the whole space\n";
    } else {
        s += "verification FAILED; see the sections above\n";
    }
    return s;
}

NoFiniteSubcoverReport demonstrate_no_finite_subcover(int n, const FieldEnumeration& e) {
    NoFiniteSubcoverReport report;
    report.truncation = build_truncation(n, e);

    for (int i = 1; i < n; ++i) {
        IdealPresentation smaller = report.truncation.ideal(i);
        IdealPresentation larger = report.truncation.ideal(i + 1);
        bool ok = true;
        for (const auto& g : smaller.generators())
            if (!radical_member(g, larger)) ok = false;
        report.chain_ok.push_back(ok);
    }

    report.deepest_consistent = is_consistent(report.truncation.ideal(n));

    report.witness = witness_point(report.truncation, n);
    for (const auto& g : report.truncation.gens)
        report.witness_values.push_back(g.evaluate(report.witness));
    return report;
}

IdealPresentation chevalley_failure(int n, const FieldEnumeration& e) {
    CounterexampleTruncation tr = build_truncation(n, e);
    return eliminate(tr.ideal(n), VarSet{1});
}

}  // namespace cylcalc
