#ifndef CYLCALC_VARSET_HPP
#define CYLCALC_VARSET_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cylcalc {

using VarIndex = std::uint32_t;

// A finite set of variable indices, kept sorted and duplicate-free.
// Levels of the ambient directed system are exactly these sets, ordered
// by inclusion.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<VarIndex> vs) : elems_(vs) { normalize(); }
    explicit VarSet(std::vector<VarIndex> vs) : elems_(std::move(vs)) { normalize(); }

    static VarSet range(VarIndex lo, VarIndex hi) {  // {lo, ..., hi}, empty if hi < lo
        VarSet s;
        for (VarIndex v = lo; v <= hi; ++v) {
            s.elems_.push_back(v);
            if (v == hi) break;  // guards wrap-around at the top of the index range
        }
        return s;
    }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    bool contains(VarIndex v) const {
        return std::binary_search(elems_.begin(), elems_.end(), v);
    }
    bool subset_of(const VarSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(),
                             elems_.begin(), elems_.end());
    }

    void insert(VarIndex v) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
        if (it == elems_.end() || *it != v) elems_.insert(it, v);
    }

    VarSet unioned(const VarSet& other) const {
        VarSet out;
        std::set_union(elems_.begin(), elems_.end(),
                       other.elems_.begin(), other.elems_.end(),
                       std::back_inserter(out.elems_));
        return out;
    }
    VarSet intersected(const VarSet& other) const {
        VarSet out;
        std::set_intersection(elems_.begin(), elems_.end(),
                              other.elems_.begin(), other.elems_.end(),
                              std::back_inserter(out.elems_));
        return out;
    }
    VarSet minus(const VarSet& other) const {
        VarSet out;
        std::set_difference(elems_.begin(), elems_.end(),
                            other.elems_.begin(), other.elems_.end(),
                            std::back_inserter(out.elems_));
        return out;
    }

    // Smallest index strictly greater than everything in the set.
    VarIndex fresh_after() const { return elems_.empty() ? 0 : elems_.back() + 1; }

    const std::vector<VarIndex>& elems() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const VarSet& o) const { return elems_ == o.elems_; }
    bool operator!=(const VarSet& o) const { return elems_ != o.elems_; }
    bool operator<(const VarSet& o) const { return elems_ < o.elems_; }  // container order only

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(elems_[i]);
        }
        s += "}";
        return s;
    }

private:
    void normalize() {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }
    std::vector<VarIndex> elems_;
};

}  // namespace cylcalc

#endif
