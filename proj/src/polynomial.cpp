#include "cylcalc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cylcalc {
namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder order = MonomialOrder::grevlex();
    return order;
}

bool term_descending(const Term& a, const Term& b) {
    return canonical_order().greater(a.mono, b.mono);
}

}  // namespace

Polynomial Polynomial::constant(const Rational& c) {
    return term(Monomial(), c);
}

Polynomial Polynomial::variable(VarIndex v) {
    return term(Monomial::var(v), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), term_descending);
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

Exponent Polynomial::total_degree() const {
    Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

VarSet Polynomial::support() const {
    VarSet s;
    for (const auto& t : terms_) s = s.unioned(t.mono.support());
    return s;
}

Polynomial Polynomial::operator-() const {
    Polynomial p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p;
    p.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end()) {
            p.terms_.push_back(*a++);
        } else if (a == terms_.end()) {
            p.terms_.push_back(*b++);
        } else {
            int c = canonical_order().compare(a->mono, b->mono);
            if (c > 0) {
                p.terms_.push_back(*a++);
            } else if (c < 0) {
                p.terms_.push_back(*b++);
            } else {
                Rational sum = a->coeff + b->coeff;
                if (!sum.is_zero()) p.terms_.push_back({a->mono, sum});
                ++a; ++b;
            }
        }
    }
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(std::move(acc));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial p;
    p.terms_.reserve(terms_.size());
    // Multiplying every term by the same monomial preserves the grevlex order.
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff});
    return p;
}

Rational Polynomial::evaluate(const std::map<VarIndex, Rational>& point) const {
    Rational out(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (const auto& [var, exp] : t.mono.factors()) {
            auto it = point.find(var);
            if (it == point.end())
                throw std::invalid_argument("evaluate: no value for t" + std::to_string(var));
            v *= it->second.pow(exp);
        }
        out += v;
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<VarIndex, Polynomial>& images) const {
    Polynomial out;
    for (const auto& t : terms_) {
        Polynomial factor = Polynomial::constant(t.coeff);
        for (const auto& [var, exp] : t.mono.factors()) {
            auto it = images.find(var);
            Polynomial base = (it != images.end()) ? it->second : Polynomial::variable(var);
            // Square-and-multiply on polynomials keeps the blowup modest.
            Polynomial acc = Polynomial::constant(Rational(1));
            Polynomial sq = base;
            Exponent e = exp;
            while (e) {
                if (e & 1) acc = acc * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            factor = factor * acc;
        }
        out = out + factor;
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c.sign() < 0) { s += "-"; c = -c; }
        } else {
            s += (c.sign() < 0) ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (t.mono.is_unit()) {
            s += c.to_string();
        } else if (c.is_one()) {
            s += t.mono.to_string();
        } else {
            s += c.to_string() + "*" + t.mono.to_string();
        }
    }
    return s;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

}  // namespace cylcalc
