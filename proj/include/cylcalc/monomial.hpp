#ifndef CYLCALC_MONOMIAL_HPP
#define CYLCALC_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cylcalc/varset.hpp"

namespace cylcalc {

using Exponent = std::uint64_t;

// A monomial in the variables t0, t1, ...; stored as (index, exponent)
// pairs with ascending indices and strictly positive exponents, so the
// representation of a monomial is unique.
class Monomial {
public:
    using Factor = std::pair<VarIndex, Exponent>;

    Monomial() = default;  // the unit monomial

    static Monomial var(VarIndex v, Exponent e = 1) {
        Monomial m;
        if (e > 0) m.factors_.push_back({v, e});
        return m;
    }

    bool is_unit() const { return factors_.empty(); }

    Exponent exponent_of(VarIndex v) const {
        for (const auto& [var, exp] : factors_)
            if (var == v) return exp;
        return 0;
    }

    Exponent total_degree() const {
        Exponent d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
                out.factors_.push_back(*a++);
            } else if (a == factors_.end() || b->first < a->first) {
                out.factors_.push_back(*b++);
            } else {
                out.factors_.push_back({a->first, a->second + b->second});
                ++a; ++b;
            }
        }
        return out;
    }

    bool divides(const Monomial& o) const {
        auto b = o.factors_.begin();
        for (const auto& [var, exp] : factors_) {
            while (b != o.factors_.end() && b->first < var) ++b;
            if (b == o.factors_.end() || b->first != var || b->second < exp) return false;
        }
        return true;
    }

    // Quotient o / *this; requires *this to divide o.
    Monomial divide_into(const Monomial& o) const {
        Monomial out;
        auto a = factors_.begin();
        for (const auto& [var, exp] : o.factors_) {
            Exponent sub = 0;
            if (a != factors_.end() && a->first == var) { sub = a->second; ++a; }
            if (exp > sub) out.factors_.push_back({var, exp - sub});
        }
        return out;
    }

    static Monomial lcm(const Monomial& x, const Monomial& y) {
        Monomial out;
        auto a = x.factors_.begin(), b = y.factors_.begin();
        while (a != x.factors_.end() || b != y.factors_.end()) {
            if (b == y.factors_.end() || (a != x.factors_.end() && a->first < b->first)) {
                out.factors_.push_back(*a++);
            } else if (a == x.factors_.end() || b->first < a->first) {
                out.factors_.push_back(*b++);
            } else {
                out.factors_.push_back({a->first, std::max(a->second, b->second)});
                ++a; ++b;
            }
        }
        return out;
    }

    // True when the two monomials share no variable.
    static bool coprime(const Monomial& x, const Monomial& y) {
        auto a = x.factors_.begin(), b = y.factors_.begin();
        while (a != x.factors_.end() && b != y.factors_.end()) {
            if (a->first == b->first) return false;
            if (a->first < b->first) ++a; else ++b;
        }
        return true;
    }

    VarSet support() const {
        std::vector<VarIndex> vs;
        vs.reserve(factors_.size());
        for (const auto& f : factors_) vs.push_back(f.first);
        return VarSet(std::move(vs));
    }

    const std::vector<Factor>& factors() const { return factors_; }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return factors_ != o.factors_; }

    // "t0^2*t3" with ascending indices; "1" for the unit.
    std::string to_string() const {
        if (factors_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "*";
            s += "t" + std::to_string(factors_[i].first);
            if (factors_[i].second != 1) s += "^" + std::to_string(factors_[i].second);
        }
        return s;
    }

private:
    std::vector<Factor> factors_;
};

}  // namespace cylcalc

#endif
