#include "cylcalc/ideal.hpp"

#include <stdexcept>

namespace cylcalc {

IdealPresentation::IdealPresentation(VarSet level, std::vector<Polynomial> gens)
    : level_(std::move(level)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.support().subset_of(level_))
            throw std::invalid_argument("generator " + g.to_string() +
                                        " lies outside level " + level_.to_string());
        gens_.push_back(std::move(g));
    }
}

IdealPresentation IdealPresentation::span(std::vector<Polynomial> gens) {
    VarSet level;
    for (const auto& g : gens) level = level.unioned(g.support());
    return IdealPresentation(std::move(level), std::move(gens));
}

IdealPresentation IdealPresentation::unit_ideal(VarSet level) {
    return IdealPresentation(std::move(level), {Polynomial::constant(Rational(1))});
}

IdealPresentation IdealPresentation::at_level(const VarSet& bigger) const {
    if (!level_.subset_of(bigger))
        throw std::invalid_argument("cannot view an ideal over " + level_.to_string() +
                                    " inside the smaller level " + bigger.to_string());
    return IdealPresentation(bigger, gens_);
}

IdealPresentation IdealPresentation::plus(const IdealPresentation& other) const {
    if (level_ != other.level_)
        throw std::invalid_argument("ideal sum across different levels: " +
                                    level_.to_string() + " vs " + other.level_.to_string());
    std::vector<Polynomial> gens = gens_;
    gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
    return IdealPresentation(level_, std::move(gens));
}

std::string IdealPresentation::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += "; ";
        s += gens_[i].to_string();
    }
    s += "> over " + level_.to_string();
    return s;
}

}  // namespace cylcalc
