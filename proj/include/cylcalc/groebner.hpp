#ifndef CYLCALC_GROEBNER_HPP
#define CYLCALC_GROEBNER_HPP

#include "cylcalc/ideal.hpp"

namespace cylcalc {

// Which Buchberger loop to run. Serial is the reference implementation;
// Parallel reduces each batch of S-polynomials concurrently and then folds
// the survivors in a fixed order, so both produce the same reduced basis.
// Auto picks Parallel when OpenMP has more than one thread to offer.
enum class GbEngine { Serial, Parallel, Auto };

GroebnerBasis groebner_basis(const IdealPresentation& ideal,
                             const MonomialOrder& order = MonomialOrder::grevlex(),
                             GbEngine engine = GbEngine::Auto);

// Remainder of f on division by the basis; every term of the result is
// irreducible, and the result is zero exactly when f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// f in I, decided exactly.
bool ideal_member(const Polynomial& f, const IdealPresentation& ideal);

// Whether the vanishing locus is nonempty over the algebraic closure,
// equivalently whether the reduced basis is not {1}.
bool is_consistent(const IdealPresentation& ideal);

// f in the radical of I, decided by adjoining 1 - y*f for a fresh variable y
// and testing consistency.
bool radical_member(const Polynomial& f, const IdealPresentation& ideal);

// Equality of radicals, decided generator by generator in both directions
// inside the union level.
bool radical_equal(const IdealPresentation& a, const IdealPresentation& b);

// I intersected with the subring on `keep`, computed with a block order that
// eliminates the other variables. Requires keep to be a subset of the level.
IdealPresentation eliminate(const IdealPresentation& ideal, const VarSet& keep);

// The saturation I : f^infinity, presented at the level of I.
IdealPresentation saturate(const IdealPresentation& ideal, const Polynomial& f);

}  // namespace cylcalc

#endif
