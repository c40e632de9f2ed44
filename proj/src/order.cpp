#include "cylcalc/order.hpp"

namespace cylcalc {
namespace {

// Graded reverse lexicographic comparison, optionally restricted to the
// variables inside (or outside) a block. Degrees compare first; on a tie,
// the monomial with the smaller exponent on the smallest differing variable
// is the larger one.
template <typename Keep>
int grevlex_cmp_filtered(const Monomial& a, const Monomial& b, Keep keep) {
    Exponent da = 0, db = 0;
    for (const auto& [v, e] : a.factors()) if (keep(v)) da += e;
    for (const auto& [v, e] : b.factors()) if (keep(v)) db += e;
    if (da != db) return da < db ? -1 : 1;

    auto ia = a.factors().begin(), ea = a.factors().end();
    auto ib = b.factors().begin(), eb = b.factors().end();
    for (;;) {
        while (ia != ea && !keep(ia->first)) ++ia;
        while (ib != eb && !keep(ib->first)) ++ib;
        if (ia == ea && ib == eb) return 0;
        // A variable present on one side only counts as exponent 0 on the other,
        // and a positive exponent on the smallest differing variable loses.
        if (ia == ea) return 1;
        if (ib == eb) return -1;
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia; ++ib;
    }
}

// Lexicographic with t0 < t1 < ...: compare the largest variable first.
int lex_cmp(const Monomial& a, const Monomial& b) {
    auto ia = a.factors().rbegin(), ea = a.factors().rend();
    auto ib = b.factors().rbegin(), eb = b.factors().rend();
    while (ia != ea || ib != eb) {
        if (ia == ea) return -1;
        if (ib == eb) return 1;
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia; ++ib;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Grevlex:
            return grevlex_cmp_filtered(a, b, [](VarIndex) { return true; });
        case Kind::Lex:
            return lex_cmp(a, b);
        case Kind::Block: {
            int c = grevlex_cmp_filtered(a, b, [&](VarIndex v) { return elim_.contains(v); });
            if (c != 0) return c;
            return grevlex_cmp_filtered(a, b, [&](VarIndex v) { return !elim_.contains(v); });
        }
    }
    return 0;  // unreachable
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block-elim" + elim_.to_string();
    }
    return "";
}

}  // namespace cylcalc
