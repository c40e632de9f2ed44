#ifndef CYLCALC_LIMITS_HPP
#define CYLCALC_LIMITS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylcalc/groebner.hpp"
#include "cylcalc/ideal.hpp"

namespace cylcalc {

// A finitely generated ideal of the infinite-variable ring, recorded as the
// finite levels its generators were contributed at. The ideal it denotes is
// the sum of the extensions of the entries.
struct LeveledIdeal {
    std::vector<IdealPresentation> entries;

    // Union of the entry levels: the smallest level the whole ideal fits in.
    VarSet footprint() const {
        VarSet m;
        for (const auto& e : entries) m = m.unioned(e.level());
        return m;
    }

    // All generators gathered at one level, which must contain the footprint.
    IdealPresentation gathered_at(const VarSet& level) const {
        std::vector<Polynomial> gens;
        for (const auto& e : entries) {
            if (!e.level().subset_of(level))
                throw std::invalid_argument("level " + level.to_string() +
                                            " does not contain entry level " +
                                            e.level().to_string());
            for (const auto& g : e.generators()) gens.push_back(g);
        }
        return IdealPresentation(level, std::move(gens));
    }
};

// Thrown when a streamed search runs out of its prefix budget (or the stream
// itself ends) before the decision is reached.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultPrefixBudget = 64;

// The smallest level every ideal of the family fits in.
VarSet common_level(std::span<const LeveledIdeal> family);

// Indices of the family members that are generated, up to radical, by their
// contraction to the level: member A qualifies when A and the extension of
// eliminate(A, level) have equal radicals.
std::vector<std::size_t> members_detected_at_level(std::span<const LeveledIdeal> family,
                                                   const VarSet& level);

// Sum of the level contractions of the members detected at the level,
// presented at that level.
IdealPresentation detected_sum_at_level(std::span<const LeveledIdeal> family,
                                        const VarSet& level);

// Witness that a single level already carries the whole family: the reduced
// basis of the gathered sum at that level, together with the generators whose
// membership was checked. verify_* recompute the checks from scratch.
struct QuasiFiniteCertificate {
    VarSet level;
    IdealPresentation ideal;                  // reduced-basis presentation at `level`
    std::vector<Polynomial> family_side;      // generators gathered from the family
    std::vector<Polynomial> basis_side;       // generators of `ideal`

    bool verify_exact(std::span<const LeveledIdeal> family) const;
    bool verify_radical(std::span<const LeveledIdeal> family) const;
};

// For a finite family: the union of the footprints always works, and the
// certificate records the two exact membership directions.
QuasiFiniteCertificate find_stabilizing_level(std::span<const LeveledIdeal> family);

// Streamed variant: consumes prefixes of an enumerated family until the sum
// of the consumed entries radical-contains every generator of `target`.
// Throws BudgetExhausted after `budget` prefixes, or if the stream ends.
using LeveledIdealStream = std::function<std::optional<LeveledIdeal>()>;

QuasiFiniteCertificate find_radical_stabilizing_level(LeveledIdealStream stream,
                                                      const IdealPresentation& target,
                                                      int budget = kDefaultPrefixBudget);

// A finite directed system of polynomial rings with substitution transition
// maps. Levels are declared by name; maps are declared between levels and
// composed transitively, with consistency of alternative paths enforced.
class SubstitutionSystem {
public:
    using Substitution = std::map<VarIndex, Polynomial>;

    std::size_t add_level(const std::string& name, VarSet vars);
    // Declares from <= to with the given variable images; variables not
    // listed map to themselves and must then exist at the target level.
    void add_map(const std::string& from, const std::string& to, Substitution images);

    // Checks the directedness of the declared order and that alternative
    // compositions agree; called automatically by the operations below.
    void validate() const;

    std::size_t size() const { return levels_.size(); }
    std::size_t index_of(const std::string& name) const;
    const std::string& name_of(std::size_t i) const { return levels_.at(i).name; }
    const VarSet& vars_of(std::size_t i) const { return levels_.at(i).vars; }

    bool leq(std::size_t from, std::size_t to) const;

    // First declared level dominating every input; input must be nonempty.
    std::size_t common_level(std::span<const std::size_t> ids) const;

    // First declared level dominating the whole system; exists for every
    // finite directed system (fold pairwise upper bounds).
    std::size_t top_level() const;

    Polynomial apply(std::size_t from, std::size_t to, const Polynomial& f) const;
    IdealPresentation extend(const IdealPresentation& ideal, std::size_t from,
                             std::size_t to) const;

private:
    struct LevelDef {
        std::string name;
        VarSet vars;
    };
    const Substitution* map_between(std::size_t from, std::size_t to) const;
    void check_map_wellformed(std::size_t from, std::size_t to, const Substitution& s) const;
    void build_closure() const;

    std::vector<LevelDef> levels_;
    std::map<std::pair<std::size_t, std::size_t>, Substitution> declared_;
    mutable std::map<std::pair<std::size_t, std::size_t>, Substitution> closure_;
    mutable bool closure_valid_ = false;
};

}  // namespace cylcalc

#endif
