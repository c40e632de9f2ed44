#ifndef CYLCALC_COMPACTNESS_HPP
#define CYLCALC_COMPACTNESS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cylcalc/cylinder.hpp"
#include "cylcalc/limits.hpp"

namespace cylcalc {

// An open subset presented through its complement: U is everything outside
// the vanishing locus of the recorded ideal. The affine flavor records the
// ideal as contributions at variable-set levels; the general flavor ties
// every contribution to a named level of a substitution system.
struct OpenPresentation {
    enum class Flavor { AffineInclusion, GeneralSystem };
    Flavor flavor = Flavor::AffineInclusion;

    LeveledIdeal complement;  // affine flavor
    std::vector<std::pair<std::string, IdealPresentation>> system_entries;  // general flavor

    static OpenPresentation affine(LeveledIdeal ideal) {
        OpenPresentation u;
        u.flavor = Flavor::AffineInclusion;
        u.complement = std::move(ideal);
        return u;
    }
    static OpenPresentation with_system_entries(
        std::vector<std::pair<std::string, IdealPresentation>> entries) {
        OpenPresentation u;
        u.flavor = Flavor::GeneralSystem;
        u.system_entries = std::move(entries);
        return u;
    }

    // The open set as a cylinder (affine flavor).
    CylinderSet as_cylinder() const;
};

// One basic open of a cover: the complement of the vanishing locus of
// `avoid`, pulled back from the level of `avoid`.
struct CoverMember {
    IdealPresentation avoid;

    static CoverMember principal(const Polynomial& a) {
        return CoverMember{IdealPresentation::span({a})};
    }
};

using CoverStream = std::function<std::optional<CoverMember>()>;

// Thrown when a finite member list is exhausted without covering the target:
// the covering precondition simply fails.
class NotACover : public std::runtime_error {
public:
    explicit NotACover(const std::string& what) : std::runtime_error(what) {}
};

// True exactly when every generator of U's complement ideal lies in the
// radical of the sum of the members' avoidance ideals; equivalently, U is
// contained in the union of the members.
bool check_cover(const OpenPresentation& U, std::span<const CoverMember> members);

// One Rabinowitsch consistency certificate: the reduced basis of
// sum + <1 - t_fresh * generator> must be {1}.
struct MembershipProof {
    Polynomial generator;
    VarIndex fresh;
    std::vector<Polynomial> unit_basis;
};

struct SubcoverCertificate {
    std::vector<std::size_t> chosen;  // positions into the member list, ascending
    VarSet level;                     // common level of the chosen members
    std::vector<MembershipProof> proofs;

    // Recomputes every membership from scratch against the member list.
    bool verify(const OpenPresentation& U, std::span<const CoverMember> members) const;

    std::string render() const;
};

// Greedy selection in (level size, position) order followed by a pruning
// pass; the result is irredundant. Throws NotACover when the full list
// fails to cover.
SubcoverCertificate extract_finite_subcover(const OpenPresentation& U,
                                            std::span<const CoverMember> members);

// Streamed variant: members are consumed in arrival order until the consumed
// prefix covers, then pruned. Throws BudgetExhausted after `budget` members,
// NotACover if the stream ends first.
SubcoverCertificate extract_finite_subcover(const OpenPresentation& U, CoverStream stream,
                                            int budget = kDefaultPrefixBudget);

// One theorem condition in a report. A by-equivalence entry is justified by
// the equivalence chain rather than its own computation.
struct ConditionEntry {
    std::string label;
    bool verdict = false;
    bool by_equivalence = false;
    std::string detail;
};

struct ConditionsReport {
    std::vector<ConditionEntry> entries;
    VarSet common;                   // level the complement ideal was gathered at
    VarSet stable_level;             // support of the reduced basis
    WeakStabilityWitness stability;  // complement described at the stable level
    CylinderSet constructible;       // the open as a single-level cylinder
    bool coherent = false;

    bool all_true() const;
    std::string render() const;
};

// Materializes the equivalence-chain report for a finitely presented open
// in the affine flavor.
ConditionsReport decide_affine_conditions(const OpenPresentation& U);

struct SystemConditionsReport {
    std::vector<ConditionEntry> entries;
    std::string level_name;              // the common upper level used
    QuasiFiniteCertificate certificate;  // the pushed ideal and its checks
    WeakStabilityWitness stability;
    CylinderSet constructible;
    bool coherent = false;

    bool all_true() const;
    std::string render() const;
};

// Pushes every entry to a common level of the system and certifies the
// ideal-level conditions there.
SystemConditionsReport decide_system_conditions(const OpenPresentation& U,
                                                const SubstitutionSystem& system);

// Greedy-then-prune selection of finitely many parts whose union swallows C,
// with cylinder difference-emptiness as the oracle. Returns ascending
// positions. Throws NotACover / BudgetExhausted like the subcover variants.
std::vector<std::size_t> extract_finite_cylinder_union(const CylinderSet& C,
                                                       std::span<const CylinderSet> parts);

using CylinderStream = std::function<std::optional<CylinderSet>()>;

std::vector<std::size_t> extract_finite_cylinder_union(const CylinderSet& C,
                                                       CylinderStream stream,
                                                       int budget = kDefaultPrefixBudget);

}  // namespace cylcalc

#endif
