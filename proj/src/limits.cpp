#include "cylcalc/limits.hpp"

#include <algorithm>

namespace cylcalc {

VarSet common_level(std::span<const LeveledIdeal> family) {
    VarSet m;
    for (const auto& member : family) m = m.unioned(member.footprint());
    return m;
}

std::vector<std::size_t> members_detected_at_level(std::span<const LeveledIdeal> family,
                                                   const VarSet& level) {
    std::vector<std::size_t> out;
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        VarSet k = family[idx].footprint().unioned(level);
        IdealPresentation whole = family[idx].gathered_at(k);
        IdealPresentation contracted = eliminate(whole, level);
        if (radical_equal(whole, contracted.at_level(k))) out.push_back(idx);
    }
    return out;
}

IdealPresentation detected_sum_at_level(std::span<const LeveledIdeal> family,
                                        const VarSet& level) {
    std::vector<Polynomial> gens;
    for (std::size_t idx : members_detected_at_level(family, level)) {
        VarSet k = family[idx].footprint().unioned(level);
        IdealPresentation contracted = eliminate(family[idx].gathered_at(k), level);
        for (const auto& g : contracted.generators()) gens.push_back(g);
    }
    return IdealPresentation(level, std::move(gens));
}

namespace {

IdealPresentation gather_family(std::span<const LeveledIdeal> family, const VarSet& level) {
    std::vector<Polynomial> gens;
    for (const auto& member : family) {
        IdealPresentation at = member.gathered_at(level);
        for (const auto& g : at.generators()) gens.push_back(g);
    }
    return IdealPresentation(level, std::move(gens));
}

}  // namespace

bool QuasiFiniteCertificate::verify_exact(std::span<const LeveledIdeal> family) const {
    VarSet m = level.unioned(common_level(family));
    IdealPresentation sum = gather_family(family, m);
    IdealPresentation mine = ideal.at_level(m);
    for (const auto& g : sum.generators())
        if (!ideal_member(g, mine)) return false;
    for (const auto& g : ideal.generators())
        if (!ideal_member(g, sum)) return false;
    return true;
}

bool QuasiFiniteCertificate::verify_radical(std::span<const LeveledIdeal> family) const {
    VarSet m = level.unioned(common_level(family));
    return radical_equal(gather_family(family, m), ideal.at_level(m));
}

QuasiFiniteCertificate find_stabilizing_level(std::span<const LeveledIdeal> family) {
    VarSet m = common_level(family);
    IdealPresentation sum = gather_family(family, m);
    GroebnerBasis gb = groebner_basis(sum);
    QuasiFiniteCertificate cert;
    cert.level = m;
    cert.ideal = gb.as_presentation();
    cert.family_side = sum.generators();
    cert.basis_side = gb.elements;
    return cert;
}

QuasiFiniteCertificate find_radical_stabilizing_level(LeveledIdealStream stream,
                                                      const IdealPresentation& target,
                                                      int budget) {
    if (budget <= 0) throw std::invalid_argument("prefix budget must be positive");
    LeveledIdeal consumed;
    for (int used = 0; used < budget; ++used) {
        std::optional<LeveledIdeal> next = stream();
        if (!next)
            throw BudgetExhausted("family stream ended after " + std::to_string(used) +
                                  " prefixes without radical stabilization");
        for (auto& e : next->entries) consumed.entries.push_back(std::move(e));
        VarSet m = consumed.footprint();
        IdealPresentation sum = consumed.gathered_at(m);
        bool stabilized = true;
        for (const auto& g : target.generators()) {
            if (!radical_member(g, sum)) { stabilized = false; break; }
        }
        if (stabilized) {
            GroebnerBasis gb = groebner_basis(sum);
            QuasiFiniteCertificate cert;
            cert.level = m;
            cert.ideal = gb.as_presentation();
            cert.family_side = sum.generators();
            cert.basis_side = gb.elements;
            return cert;
        }
    }
    throw BudgetExhausted("prefix budget of " + std::to_string(budget) +
                          " exhausted without radical stabilization");
}

std::size_t SubstitutionSystem::add_level(const std::string& name, VarSet vars) {
    for (const auto& lv : levels_)
        if (lv.name == name) throw std::invalid_argument("duplicate level name: " + name);
    levels_.push_back({name, std::move(vars)});
    closure_valid_ = false;
    return levels_.size() - 1;
}

std::size_t SubstitutionSystem::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].name == name) return i;
    throw std::invalid_argument("unknown level: " + name);
}

void SubstitutionSystem::check_map_wellformed(std::size_t from, std::size_t to,
                                              const Substitution& s) const {
    const VarSet& src = levels_[from].vars;
    const VarSet& dst = levels_[to].vars;
    for (const auto& [v, image] : s) {
        if (!src.contains(v))
            throw std::invalid_argument("map from " + levels_[from].name + " substitutes t" +
                                        std::to_string(v) + " which is not a variable there");
        if (!image.support().subset_of(dst))
            throw std::invalid_argument("image of t" + std::to_string(v) + " leaves level " +
                                        levels_[to].name);
    }
    for (VarIndex v : src) {
        if (s.find(v) == s.end() && !dst.contains(v))
            throw std::invalid_argument("t" + std::to_string(v) + " of level " +
                                        levels_[from].name + " has no image in " +
                                        levels_[to].name);
    }
}

void SubstitutionSystem::add_map(const std::string& from, const std::string& to,
                                 Substitution images) {
    std::size_t f = index_of(from), t = index_of(to);
    check_map_wellformed(f, t, images);
    auto key = std::make_pair(f, t);
    if (declared_.count(key))
        throw std::invalid_argument("duplicate map from " + from + " to " + to);
    declared_[key] = std::move(images);
    closure_valid_ = false;
}

void SubstitutionSystem::build_closure() const {
    closure_.clear();
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        Substitution id;
        for (VarIndex v : levels_[i].vars) id[v] = Polynomial::variable(v);
        closure_[{i, i}] = std::move(id);
    }
    for (const auto& [key, images] : declared_) {
        Substitution complete;
        for (VarIndex v : levels_[key.first].vars) {
            auto it = images.find(v);
            complete[v] = (it != images.end()) ? it->second : Polynomial::variable(v);
        }
        auto existing = closure_.find(key);
        if (existing != closure_.end() && !(existing->second == complete))
            throw std::invalid_argument("transition maps disagree between " +
                                        levels_[key.first].name + " and " +
                                        levels_[key.second].name);
        closure_[key] = std::move(complete);
    }
    // Saturate under composition, rejecting any pair that acquires two
    // different maps: the system must commute.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [ik, map_ik] : closure_) {
            for (const auto& [kj, map_kj] : closure_) {
                if (ik.second != kj.first) continue;
                auto key = std::make_pair(ik.first, kj.second);
                Substitution composed;
                for (const auto& [v, image] : map_ik)
                    composed[v] = image.substitute(map_kj);
                auto existing = closure_.find(key);
                if (existing == closure_.end()) {
                    closure_[key] = std::move(composed);
                    changed = true;
                    break;  // iterators invalidated
                }
                if (!(existing->second == composed))
                    throw std::invalid_argument("transition maps disagree between " +
                                                levels_[key.first].name + " and " +
                                                levels_[key.second].name);
            }
            if (changed) break;
        }
    }
    closure_valid_ = true;
}

const SubstitutionSystem::Substitution* SubstitutionSystem::map_between(std::size_t from,
                                                                        std::size_t to) const {
    if (!closure_valid_) build_closure();
    auto it = closure_.find({from, to});
    return it == closure_.end() ? nullptr : &it->second;
}

bool SubstitutionSystem::leq(std::size_t from, std::size_t to) const {
    return map_between(from, to) != nullptr;
}

void SubstitutionSystem::validate() const {
    if (!closure_valid_) build_closure();
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            bool bounded = false;
            for (std::size_t u = 0; u < levels_.size(); ++u)
                if (leq(i, u) && leq(j, u)) { bounded = true; break; }
            if (!bounded)
                throw std::invalid_argument("levels " + levels_[i].name + " and " +
                                            levels_[j].name + " have no common upper bound");
        }
    }
}

std::size_t SubstitutionSystem::common_level(std::span<const std::size_t> ids) const {
    if (ids.empty()) throw std::invalid_argument("common level of an empty list");
    for (std::size_t u = 0; u < levels_.size(); ++u) {
        bool dominates = true;
        for (std::size_t id : ids)
            if (!leq(id, u)) { dominates = false; break; }
        if (dominates) return u;
    }
    throw std::invalid_argument("no level dominates the given list");
}

std::size_t SubstitutionSystem::top_level() const {
    if (levels_.empty()) throw std::invalid_argument("system has no levels");
    std::vector<std::size_t> all(levels_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return common_level(all);
}

Polynomial SubstitutionSystem::apply(std::size_t from, std::size_t to,
                                     const Polynomial& f) const {
    const Substitution* m = map_between(from, to);
    if (m == nullptr)
        throw std::invalid_argument("no transition from " + levels_.at(from).name + " to " +
                                    levels_.at(to).name);
    if (!f.support().subset_of(levels_[from].vars))
        throw std::invalid_argument(f.to_string() + " does not live at level " +
                                    levels_[from].name);
    return f.substitute(*m);
}

IdealPresentation SubstitutionSystem::extend(const IdealPresentation& ideal, std::size_t from,
                                             std::size_t to) const {
    if (!ideal.level().subset_of(levels_.at(from).vars))
        throw std::invalid_argument("ideal level " + ideal.level().to_string() +
                                    " does not fit in " + levels_[from].name);
    std::vector<Polynomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(apply(from, to, g));
    return IdealPresentation(levels_.at(to).vars, std::move(gens));
}

}  // namespace cylcalc
