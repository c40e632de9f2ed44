#ifndef CYLCALC_POLYNOMIAL_HPP
#define CYLCALC_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "cylcalc/monomial.hpp"
#include "cylcalc/order.hpp"
#include "cylcalc/rational.hpp"
#include "cylcalc/varset.hpp"

namespace cylcalc {

struct Term {
    Monomial mono;
    Rational coeff;
    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

// A polynomial over the rationals in the variables t0, t1, ...
// Terms are stored descending under grevlex with no zero coefficients and
// no repeated monomials, so equal polynomials are structurally equal and
// rendering is deterministic.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    static Polynomial variable(VarIndex v);
    static Polynomial term(const Monomial& m, const Rational& c);

    // Builds the canonical form from arbitrary (monomial, coefficient) pairs,
    // merging duplicates and dropping zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff.is_one();
    }

    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Leading data under the canonical (grevlex) order.
    const Term& leading_term() const;
    Exponent total_degree() const;  // 0 for the zero polynomial

    VarSet support() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    // Substitutes point values for every variable in the support.
    // Throws std::invalid_argument when an assignment is missing.
    Rational evaluate(const std::map<VarIndex, Rational>& point) const;

    // Replaces each mapped variable by a polynomial; unmapped variables stay.
    Polynomial substitute(const std::map<VarIndex, Polynomial>& images) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;  // descending grevlex
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace cylcalc

#endif
