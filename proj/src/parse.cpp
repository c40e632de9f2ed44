#include "cylcalc/parse.hpp"

#include <cctype>

namespace cylcalc {
namespace {

constexpr std::uint64_t kMaxVarIndex = 0xFFFFFFFEull;   // one below the uint32 range
constexpr std::uint64_t kMaxExponent = 0xFFFFFFFFull;

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    char peek_at(std::size_t off) const { return i_ + off < s_.size() ? s_[i_ + off] : '\0'; }
    void advance() { ++i_; }
    std::size_t pos() const { return i_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(i_, what); }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) { advance(); return true; }
        return false;
    }

    std::uint64_t parse_nat(std::uint64_t max, const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > max) fail(std::string(what) + " too large");
            advance();
        }
        return v;
    }

    Polynomial parse_poly() {
        skip_ws();
        int sign = 1;
        if (peek() == '-') { sign = -1; advance(); }
        else if (peek() == '+') { advance(); }
        Polynomial p = parse_term().scaled(Rational(sign));
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') { advance(); p = p + parse_term(); }
            else if (c == '-') { advance(); p = p - parse_term(); }
            else break;
        }
        return p;
    }

    Polynomial parse_term() {
        skip_ws();
        Polynomial p;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && std::isdigit(static_cast<unsigned char>(peek_at(1))))) {
            p = Polynomial::constant(parse_coeff());
        } else {
            p = parse_factor();
        }
        while (accept('*')) p = p * parse_factor();
        return p;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (peek() == '(') {
            advance();
            Polynomial p = parse_poly();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            advance();
            return p;
        }
        if (peek() == 't') {
            advance();
            auto idx = static_cast<VarIndex>(parse_nat(kMaxVarIndex, "variable index"));
            Exponent e = 1;
            if (accept('^')) {
                skip_ws();
                e = parse_nat(kMaxExponent, "exponent");
            }
            return Polynomial::term(Monomial::var(idx, e), Rational(1));
        }
        fail("expected factor");
    }

    // '-'? digits ('/' digits)?, with no blanks inside the token.
    Rational parse_coeff() {
        std::string text;
        if (peek() == '-') { text += '-'; advance(); }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
        while (std::isdigit(static_cast<unsigned char>(peek()))) { text += peek(); advance(); }
        if (peek() == '/') {
            std::size_t slash = pos();
            text += '/';
            advance();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(slash + 1, "expected denominator");
            std::string den;
            while (std::isdigit(static_cast<unsigned char>(peek()))) { den += peek(); advance(); }
            bool all_zero = den.find_first_not_of('0') == std::string::npos;
            if (all_zero) throw ParseError(slash + 1, "zero denominator");
            text += den;
        }
        return Rational::parse(text);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    Cursor c(text);
    c.skip_ws();
    if (c.at_end()) c.fail("empty polynomial");
    Polynomial p = c.parse_poly();
    c.skip_ws();
    if (!c.at_end()) c.fail("trailing characters");
    return p;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != ';') continue;
        std::string_view piece = text.substr(start, i - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
        if (!blank) {
            try {
                out.push_back(parse_polynomial(piece));
            } catch (const ParseError& e) {
                throw ParseError(start + e.pos(), "in list entry: " + e.detail());
            }
        } else if (i < text.size()) {
            // An interior blank segment is a mistake; a trailing one is tolerated.
            throw ParseError(start, "blank list entry");
        }
        start = i + 1;
    }
    return out;
}

}  // namespace cylcalc
