#include "cylcalc/cylinder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cylcalc {
namespace {

std::vector<Polynomial> dedupe(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> out;
    std::set<std::string> seen;
    for (const auto& g : gens)
        if (seen.insert(g.to_string()).second) out.push_back(g);
    return out;
}

bool has_nonzero_constant(const IdealPresentation& ideal) {
    for (const auto& g : ideal.generators())
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

// Generator products; V of the result is the union of the two loci.
IdealPresentation ideal_product(const IdealPresentation& a, const IdealPresentation& b) {
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) gens.push_back(x * y);
    return IdealPresentation(a.level().unioned(b.level()), dedupe(gens));
}

}  // namespace

std::optional<LocallyClosedPiece> make_piece(const VarSet& level,
                                             const IdealPresentation& closed,
                                             const IdealPresentation& removed) {
    IdealPresentation a(level, dedupe(closed.at_level(level).generators()));
    if (has_nonzero_constant(a)) return std::nullopt;  // V(closed) already empty
    IdealPresentation b = removed.at_level(level);
    if (b.is_zero_ideal()) return std::nullopt;  // everything removed
    if (has_nonzero_constant(b)) {
        b = IdealPresentation::unit_ideal(level);  // nothing removed at all
    } else {
        b = IdealPresentation(level, dedupe(b.generators()));
    }
    return LocallyClosedPiece{level, std::move(a), std::move(b)};
}

bool piece_is_empty(const LocallyClosedPiece& piece) {
    for (const auto& b : piece.removed.generators())
        if (!radical_member(b, piece.closed)) return false;
    return true;
}

CylinderSet CylinderSet::whole_space() {
    CylinderSet c;
    VarSet none;
    auto piece = make_piece(none, IdealPresentation::zero_ideal(none),
                            IdealPresentation::unit_ideal(none));
    c.pieces.push_back(*piece);
    return c;
}

CylinderSet CylinderSet::closed_locus(const IdealPresentation& ideal) {
    CylinderSet c;
    auto piece = make_piece(ideal.level(), ideal, IdealPresentation::unit_ideal(ideal.level()));
    if (piece) c.pieces.push_back(*piece);
    return c;
}

CylinderSet CylinderSet::open_complement(const IdealPresentation& ideal) {
    CylinderSet c;
    auto piece = make_piece(ideal.level(), IdealPresentation::zero_ideal(ideal.level()), ideal);
    if (piece) c.pieces.push_back(*piece);
    return c;
}

CylinderSet lift_to_level(const CylinderSet& c, const VarSet& K) {
    CylinderSet out;
    for (const auto& p : c.pieces) {
        if (!p.level.subset_of(K))
            throw std::invalid_argument("cannot lift a piece at level " + p.level.to_string() +
                                        " to the smaller level " + K.to_string());
        auto lifted = make_piece(K, p.closed.at_level(K), p.removed.at_level(K));
        if (lifted) out.pieces.push_back(*lifted);
    }
    return out;
}

CylinderSet cyl_union(const CylinderSet& a, const CylinderSet& b) {
    CylinderSet out = a;
    out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
    return out;
}

CylinderSet cyl_intersect(const CylinderSet& a, const CylinderSet& b) {
    CylinderSet out;
    for (const auto& pa : a.pieces) {
        for (const auto& pb : b.pieces) {
            VarSet level = pa.level.unioned(pb.level);
            IdealPresentation closed =
                pa.closed.at_level(level).plus(pb.closed.at_level(level));
            IdealPresentation removed =
                ideal_product(pa.removed.at_level(level), pb.removed.at_level(level));
            auto piece = make_piece(level, closed, removed);
            // Empty intersections are discarded on the spot; this is what
            // keeps iterated complements from snowballing.
            if (piece && !piece_is_empty(*piece)) out.pieces.push_back(*piece);
        }
    }
    return out;
}

CylinderSet cyl_complement(const CylinderSet& a) {
    CylinderSet acc = CylinderSet::whole_space();
    for (const auto& p : a.pieces) {
        CylinderSet local;
        auto keep_removed = make_piece(p.level, p.removed, IdealPresentation::unit_ideal(p.level));
        if (keep_removed) local.pieces.push_back(*keep_removed);
        auto off_closed = make_piece(p.level, IdealPresentation::zero_ideal(p.level), p.closed);
        if (off_closed) local.pieces.push_back(*off_closed);
        acc = cyl_intersect(acc, local);
    }
    return acc;
}

CylinderSet cyl_difference(const CylinderSet& a, const CylinderSet& b) {
    return cyl_intersect(a, cyl_complement(b));
}

bool is_empty(const CylinderSet& c) {
    for (const auto& p : c.pieces)
        if (!piece_is_empty(p)) return false;
    return true;
}

bool is_subset(const CylinderSet& a, const CylinderSet& b) {
    return is_empty(cyl_difference(a, b));
}

bool is_equal(const CylinderSet& a, const CylinderSet& b) {
    return is_subset(a, b) && is_subset(b, a);
}

CylinderSet closure(const CylinderSet& c) {
    CylinderSet out;
    for (const auto& p : c.pieces) {
        if (piece_is_empty(p)) continue;
        for (const auto& b : p.removed.generators()) {
            IdealPresentation sat = saturate(p.closed, b);
            auto piece = make_piece(p.level, sat, IdealPresentation::unit_ideal(p.level));
            if (piece) out.pieces.push_back(*piece);
        }
    }
    return out;
}

StabilityResult is_weakly_stable(const CylinderSet& c) {
    CylinderSet comp = cyl_complement(c);
    CylinderSet closed = closure(comp);
    if (!is_equal(comp, closed))
        throw std::invalid_argument("cylinder is not open: its complement is not closed");

    // The complement as a single closed locus: the product of the ideals of
    // the closure pieces; no pieces means the complement is empty.
    std::vector<const LocallyClosedPiece*> parts;
    for (const auto& p : closed.pieces)
        if (!piece_is_empty(p)) parts.push_back(&p);

    VarSet ambient;
    for (const auto* p : parts) ambient = ambient.unioned(p->level);
    IdealPresentation complement_ideal = IdealPresentation::unit_ideal(ambient);
    if (!parts.empty()) {
        complement_ideal = parts[0]->closed.at_level(ambient);
        for (std::size_t i = 1; i < parts.size(); ++i)
            complement_ideal = ideal_product(complement_ideal, parts[i]->closed.at_level(ambient));
    }

    GroebnerBasis gb = groebner_basis(complement_ideal);
    IdealPresentation basis_presentation = gb.as_presentation();
    VarSet K = gb.support();
    IdealPresentation detected = eliminate(basis_presentation, K);

    IdealPresentation detected_up = detected.at_level(ambient);
    for (const auto& g : complement_ideal.generators()) {
        if (!radical_member(g, detected_up))
            return StabilityRefusal{g, "complement generator escapes the detected level"};
    }
    for (const auto& g : detected.generators()) {
        if (!radical_member(g, complement_ideal))
            return StabilityRefusal{g, "detected ideal exceeds the complement"};
    }
    return WeakStabilityWitness{K, detected};
}

CylinderSet cylinder_of_witness(const WeakStabilityWitness& w) {
    return CylinderSet::open_complement(w.complement_ideal.at_level(w.level));
}

}  // namespace cylcalc
