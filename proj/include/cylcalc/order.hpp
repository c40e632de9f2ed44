#ifndef CYLCALC_ORDER_HPP
#define CYLCALC_ORDER_HPP

#include <string>

#include "cylcalc/monomial.hpp"
#include "cylcalc/varset.hpp"

namespace cylcalc {

// Monomial orders. Variables are compared ascending by index (t0 < t1 < ...)
// in every order. The block order makes any monomial involving an eliminated
// variable larger than any monomial free of them, which is what elimination
// needs.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, VarSet{}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, VarSet{}); }
    static MonomialOrder block_elim(VarSet eliminated) {
        return MonomialOrder(Kind::Block, std::move(eliminated));
    }

    Kind kind() const { return kind_; }
    const VarSet& eliminated() const { return elim_; }

    // Total: <0 when a < b, 0 when equal, >0 when a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string to_string() const;

private:
    MonomialOrder(Kind k, VarSet e) : kind_(k), elim_(std::move(e)) {}
    Kind kind_;
    VarSet elim_;
};

}  // namespace cylcalc

#endif
