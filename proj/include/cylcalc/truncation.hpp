#ifndef CYLCALC_TRUNCATION_HPP
#define CYLCALC_TRUNCATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cylcalc/groebner.hpp"
#include "cylcalc/rational.hpp"

namespace cylcalc {

// An injective enumeration a_1, a_2, ... of rationals. The default starts
// a_1 = 0 and then alternates q_k, -q_k where q walks the Calkin-Wilf tree
// through every positive rational exactly once. Injectivity is checked on
// every queried prefix.
class FieldEnumeration {
public:
    using Fn = std::function<Rational(std::uint64_t)>;

    FieldEnumeration(Fn fn, std::string name);
    static FieldEnumeration standard();

    Rational at(std::uint64_t i) const;  // 1-based
    const std::string& name() const { return name_; }

private:
    struct State {
        std::vector<Rational> cache;          // cache[i-1] = a_i
        std::map<std::string, std::uint64_t> seen;  // value -> first index
    };
    Fn fn_;
    std::string name_;
    std::shared_ptr<State> state_;
};

// The depth-n slice of the running counterexample: generators
// g_k = (t0 - a_k) * t_k - 1 for k = 1..n, with the k-th ideal spanned by
// the first k of them on the variables {0..k}.
struct CounterexampleTruncation {
    int n = 0;
    FieldEnumeration enumeration = FieldEnumeration::standard();
    std::vector<Polynomial> gens;  // gens[k-1] = g_k

    // The ideal at depth i, presented at level {0..i}; requires 1 <= i <= n.
    IdealPresentation ideal(int i) const;
};

CounterexampleTruncation build_truncation(int n,
                                          const FieldEnumeration& e = FieldEnumeration::standard());

// A point at which every generator of the depth-m ideal vanishes exactly:
// the zeroth coordinate takes the first enumerated value outside a_1..a_m
// and the k-th coordinate the forced inverse.
std::map<VarIndex, Rational> witness_point(const CounterexampleTruncation& tr, int m);

// The finite shadow of the missing finite subcover: the opens ascend, the
// deepest closed part stays nonempty, and the witness point lies outside
// every open of the truncation.
struct NoFiniteSubcoverReport {
    CounterexampleTruncation truncation;
    std::vector<bool> chain_ok;                // step i: depth-i ideal inside radical of depth-(i+1)
    bool deepest_consistent = false;
    std::map<VarIndex, Rational> witness;
    std::vector<Rational> witness_values;      // generator evaluations, all zero

    bool all_verified() const;
    std::string render() const;
};

NoFiniteSubcoverReport demonstrate_no_finite_subcover(
    int n, const FieldEnumeration& e = FieldEnumeration::standard());

// The contraction of the depth-n ideal to the line of t1. Always the zero
// ideal: the image of the corresponding projection is not constructible,
// and this is its algebraic fingerprint.
IdealPresentation chevalley_failure(int n,
                                    const FieldEnumeration& e = FieldEnumeration::standard());

}  // namespace cylcalc

#endif
