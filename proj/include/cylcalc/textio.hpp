#ifndef CYLCALC_TEXTIO_HPP
#define CYLCALC_TEXTIO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cylcalc/compactness.hpp"
#include "cylcalc/cylinder.hpp"
#include "cylcalc/limits.hpp"
#include "cylcalc/parse.hpp"

namespace cylcalc {

// Variable sets are written "{0, 1, 5}"; blanks are free, "{}" is empty.
VarSet parse_varset(std::string_view text);

// One ideal presentation: "level {0, 1}: t0; t1" with an explicit level, or
// a bare semicolon-separated generator list whose level is the union of the
// supports. Newlines count as separators; '#' starts a line comment.
IdealPresentation parse_ideal_entry(std::string_view text);

// One entry per line, each in parse_ideal_entry form.
LeveledIdeal parse_leveled_ideal(std::string_view text);

// "level: {0, 1}; closed: [t0*t1]; removed: [t0]". The empty brackets "[]"
// denote the zero ideal.
LocallyClosedPiece parse_piece(std::string_view text);
std::string render_piece(const LocallyClosedPiece& piece);

// Pieces separated by newlines or '|'; the keyword "empty" denotes the
// cylinder with no pieces.
CylinderSet parse_cylinder(std::string_view text);
std::string render_cylinder(const CylinderSet& c);

// Cylinders separated by lines holding only "---".
std::vector<CylinderSet> parse_cylinder_list(std::string_view text);

// One cover member per line, each in parse_ideal_entry form; a bare
// polynomial line is the principal member at the support level.
std::vector<CoverMember> parse_cover(std::string_view text);

// A direct system with its complement entries:
//   level low vars {0}
//   level high vars {0, 1}
//   map low -> high { t0 -> t1^2 }
//   entry at low: t0 - 1
// Unlisted variables map identically; '#' starts a line comment.
struct SystemDocument {
    SubstitutionSystem system;
    std::vector<std::pair<std::string, IdealPresentation>> entries;
};
SystemDocument parse_system_document(std::string_view text);

}  // namespace cylcalc

#endif
