#ifndef CYLCALC_IDEAL_HPP
#define CYLCALC_IDEAL_HPP

#include <string>
#include <vector>

#include "cylcalc/order.hpp"
#include "cylcalc/polynomial.hpp"
#include "cylcalc/varset.hpp"

namespace cylcalc {

// A finitely generated ideal of the polynomial ring on a named finite set
// of variables. Zero generators are dropped on construction; every kept
// generator must live inside the level.
class IdealPresentation {
public:
    IdealPresentation() = default;
    IdealPresentation(VarSet level, std::vector<Polynomial> gens);

    // Level inferred as the union of generator supports.
    static IdealPresentation span(std::vector<Polynomial> gens);
    static IdealPresentation zero_ideal(VarSet level) { return IdealPresentation(std::move(level), {}); }
    static IdealPresentation unit_ideal(VarSet level);

    const VarSet& level() const { return level_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // The same ideal regarded inside a larger polynomial ring.
    IdealPresentation at_level(const VarSet& bigger) const;

    // Generator lists concatenated; levels must agree.
    IdealPresentation plus(const IdealPresentation& other) const;

    std::string to_string() const;  // "<g1; g2> over {vars}"

private:
    VarSet level_;
    std::vector<Polynomial> gens_;
};

// A Groebner basis as returned by the engine: reduced, monic, sorted
// ascending by leading monomial. Reduced bases are unique for a given
// ideal and order, so two runs agree element by element.
struct GroebnerBasis {
    VarSet level;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial> elements;

    bool is_unit() const {
        return elements.size() == 1 && elements[0].is_one();
    }
    bool is_zero() const { return elements.empty(); }

    VarSet support() const {
        VarSet s;
        for (const auto& g : elements) s = s.unioned(g.support());
        return s;
    }

    IdealPresentation as_presentation() const {
        return IdealPresentation(level, elements);
    }
};

}  // namespace cylcalc

#endif
