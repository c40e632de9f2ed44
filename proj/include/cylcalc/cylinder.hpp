#ifndef CYLCALC_CYLINDER_HPP
#define CYLCALC_CYLINDER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cylcalc/groebner.hpp"
#include "cylcalc/ideal.hpp"

namespace cylcalc {

// One locally closed constructible block: the preimage of V(closed) minus
// V(removed) under the projection to the piece's level. Both ideals are
// presented at that level.
struct LocallyClosedPiece {
    VarSet level;
    IdealPresentation closed;
    IdealPresentation removed;
};

// A finite union of locally closed pieces, possibly at different levels.
// No normalization is imposed beyond dropping pieces that are syntactically
// empty; semantic equality is decided by is_equal.
struct CylinderSet {
    std::vector<LocallyClosedPiece> pieces;

    static CylinderSet empty_set() { return {}; }
    static CylinderSet whole_space();
    static CylinderSet closed_locus(const IdealPresentation& ideal);     // V(I)
    static CylinderSet open_complement(const IdealPresentation& ideal);  // complement of V(I)
};

// Normalized piece constructor: canonicalizes a removed part that contains a
// nonzero constant to <1>, and returns nothing at all when the piece is
// trivially empty (closed part containing a nonzero constant, or nothing
// removed). Generators are deduplicated.
std::optional<LocallyClosedPiece> make_piece(const VarSet& level, const IdealPresentation& closed,
                                             const IdealPresentation& removed);

// Exact emptiness of one piece: every removed generator lies in the radical
// of the closed part.
bool piece_is_empty(const LocallyClosedPiece& piece);

// Re-presents every piece at the (necessarily larger) level K. The denoted
// subset is unchanged.
CylinderSet lift_to_level(const CylinderSet& c, const VarSet& K);

CylinderSet cyl_union(const CylinderSet& a, const CylinderSet& b);
CylinderSet cyl_intersect(const CylinderSet& a, const CylinderSet& b);
CylinderSet cyl_complement(const CylinderSet& a);
CylinderSet cyl_difference(const CylinderSet& a, const CylinderSet& b);

bool is_empty(const CylinderSet& c);
bool is_subset(const CylinderSet& a, const CylinderSet& b);
bool is_equal(const CylinderSet& a, const CylinderSet& b);

// Topological closure: union over the pieces of the saturations of the
// closed part at each removed generator. Always a finite union of closed
// cylinders.
CylinderSet closure(const CylinderSet& c);

// A level K and an ideal C over K with the complement of the input equal to
// the preimage of V(C): the input is recovered as the preimage of the
// complement of V(C).
struct WeakStabilityWitness {
    VarSet level;
    IdealPresentation complement_ideal;
};

struct StabilityRefusal {
    Polynomial failing_generator;
    std::string reason;
};

using StabilityResult = std::variant<WeakStabilityWitness, StabilityRefusal>;

// Requires the input to be open (complement equal to its own closure);
// throws std::invalid_argument otherwise. For open input the witness level
// is the support of the reduced basis of the complement's ideal.
StabilityResult is_weakly_stable(const CylinderSet& c);

// The open cylinder a witness describes.
CylinderSet cylinder_of_witness(const WeakStabilityWitness& w);

}  // namespace cylcalc

#endif
