#ifndef CYLCALC_PARSE_HPP
#define CYLCALC_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cylcalc/polynomial.hpp"

namespace cylcalc {

// Raised by every text reader in the library; pos is the byte offset the
// problem was noticed at.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(pos) + ": " + what),
          pos_(pos),
          detail_(what) {}
    std::size_t pos() const { return pos_; }
    const std::string& detail() const { return detail_; }  // message without the offset prefix

private:
    std::size_t pos_;
    std::string detail_;
};

// Grammar, with arbitrary blanks between tokens:
//   poly   := sign? term (('+' | '-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := 't' nat ('^' nat)? | '(' poly ')'
//   coeff  := '-'? nat ('/' nat)?
// Variable indices must fit in 32 bits minus one and exponents in 32 bits;
// coefficients are unbounded.
Polynomial parse_polynomial(std::string_view text);

// Semicolon-separated polynomials; blank segments are rejected, the empty
// string yields the empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text);

}  // namespace cylcalc

#endif
