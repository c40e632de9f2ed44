#ifndef CYLCALC_RATIONAL_HPP
#define CYLCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cylcalc {

// Exact rational arithmetic. Values are always canonical: reduced to lowest
// terms with a positive denominator, so equality is structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n" or "n/d" with optional leading '-'.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw std::invalid_argument("malformed rational: " + text);
        if (q.get_den() == 0)
            throw std::domain_error("rational with zero denominator: " + text);
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(std::uint64_t e) const {
        Rational acc(1);
        Rational base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Integer floor, as a rational.
    Rational floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return Rational(mpq_class(f));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string to_string() const { return v_.get_str(); }  // "n" or "n/d"

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

}  // namespace cylcalc

#endif
