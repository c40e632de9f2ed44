#include <doctest.h>

#include <variant>

#include "cylcalc/cylinder.hpp"
#include "cylcalc/groebner.hpp"
#include "cylcalc/parse.hpp"
#include "support/gen.hpp"

using namespace cylcalc;

namespace {

IdealPresentation over(const VarSet& level, const std::string& gens) {
    return IdealPresentation(level, parse_polynomial_list(gens));
}

CylinderSet vanishing(const VarSet& level, const std::string& gens) {
    return CylinderSet::closed_locus(over(level, gens));
}

}  // namespace

TEST_CASE("piece normalization") {
    // Closed part with a nonzero constant: empty, dropped.
    CHECK_FALSE(make_piece(VarSet{0}, over(VarSet{0}, "1"), over(VarSet{0}, "t0")).has_value());
    // Zero removed ideal: nothing survives the subtraction of the whole space.
    CHECK_FALSE(
        make_piece(VarSet{0}, over(VarSet{0}, "t0"), IdealPresentation::zero_ideal(VarSet{0}))
            .has_value());
    // A removed part holding a constant collapses to <1>.
    auto whole = make_piece(VarSet{0}, IdealPresentation::zero_ideal(VarSet{0}),
                            over(VarSet{0}, "t0 - t0 + 2"));
    REQUIRE(whole.has_value());
    REQUIRE(whole->removed.generators().size() == 1);
    CHECK(whole->removed.generators()[0].to_string() == "1");
}

TEST_CASE("piece emptiness is containment of vanishing loci") {
    LocallyClosedPiece a{VarSet{0}, over(VarSet{0}, "t0"), over(VarSet{0}, "t0")};
    CHECK(piece_is_empty(a));
    LocallyClosedPiece b{VarSet{0}, over(VarSet{0}, "t0^2"), over(VarSet{0}, "t0")};
    CHECK(piece_is_empty(b));
    LocallyClosedPiece c{VarSet{0}, over(VarSet{0}, "t0"), over(VarSet{0}, "t0 - 1")};
    CHECK_FALSE(piece_is_empty(c));
}

TEST_CASE("whole space and empty set") {
    CHECK(is_empty(CylinderSet::empty_set()));
    CHECK_FALSE(is_empty(CylinderSet::whole_space()));
    CHECK(is_equal(cyl_complement(CylinderSet::whole_space()), CylinderSet::empty_set()));
    CHECK(is_equal(cyl_complement(CylinderSet::empty_set()), CylinderSet::whole_space()));
}

TEST_CASE("lifting preserves the denoted set") {
    CylinderSet v = vanishing(VarSet{0}, "t0");
    CylinderSet lifted = lift_to_level(v, VarSet{0, 1});
    REQUIRE(lifted.pieces.size() == 1);
    CHECK(lifted.pieces[0].level == VarSet{0, 1});
    CHECK(is_equal(v, lifted));

    CHECK(is_empty(lift_to_level(CylinderSet::empty_set(), VarSet{0, 3})));

    CylinderSet full = CylinderSet::whole_space();
    CHECK(is_equal(full, lift_to_level(full, VarSet{0, 1})));

    CHECK_THROWS_AS(lift_to_level(vanishing(VarSet{0, 1}, "t0*t1"), VarSet{0}),
                    std::invalid_argument);
}

TEST_CASE("boolean operation examples") {
    CylinderSet v0 = vanishing(VarSet{0}, "t0");
    CylinderSet v1 = vanishing(VarSet{1}, "t1");
    CHECK(is_equal(cyl_intersect(v0, v1), vanishing(VarSet{0, 1}, "t0; t1")));

    // Difference of vanishing loci keeps the off-locus sheet.
    CylinderSet diff = cyl_difference(vanishing(VarSet{0, 1}, "t0*t1"), v0);
    CHECK_FALSE(is_empty(diff));  // (1, 0) lies in it
    CHECK(is_equal(diff, CylinderSet{{LocallyClosedPiece{VarSet{0, 1},
                                                         over(VarSet{0, 1}, "t0*t1"),
                                                         over(VarSet{0, 1}, "t0")}}}));

    CHECK(is_equal(cyl_union(v0, cyl_complement(v0)), CylinderSet::whole_space()));
    CHECK(is_empty(cyl_difference(v0, v0)));
}

TEST_CASE("boolean laws on random cylinders") {
    testgen::Rng rng(770001);
    for (int trial = 0; trial < 12; ++trial) {
        CylinderSet a = testgen::random_cylinder(rng, 2, 2, 2);
        CylinderSet b = testgen::random_cylinder(rng, 2, 2, 2);
        CHECK(is_equal(cyl_complement(cyl_complement(a)), a));
        CHECK(is_equal(cyl_complement(cyl_union(a, b)),
                       cyl_intersect(cyl_complement(a), cyl_complement(b))));
        CHECK(is_equal(cyl_complement(cyl_intersect(a, b)),
                       cyl_union(cyl_complement(a), cyl_complement(b))));
        CHECK(is_empty(cyl_difference(a, a)));
        CHECK(is_equal(cyl_union(a, cyl_complement(a)), CylinderSet::whole_space()));
        CHECK(is_subset(cyl_intersect(a, b), a));
        CHECK(is_subset(a, cyl_union(a, b)));
    }
}

TEST_CASE("equality is semantic, not syntactic") {
    CHECK(is_equal(vanishing(VarSet{0}, "t0^2"), vanishing(VarSet{0}, "t0")));
    CHECK_FALSE(is_equal(vanishing(VarSet{0}, "t0"), CylinderSet::whole_space()));
    CylinderSet c = vanishing(VarSet{0, 1}, "t0 - t1");
    CHECK(is_equal(c, lift_to_level(c, VarSet{0, 1, 2})));
}

TEST_CASE("closure saturates piece by piece") {
    CylinderSet punctured{{LocallyClosedPiece{VarSet{0, 1}, over(VarSet{0, 1}, "t0*t1"),
                                              over(VarSet{0, 1}, "t0")}}};
    CHECK(is_equal(closure(punctured), vanishing(VarSet{0, 1}, "t1")));

    CylinderSet closed = vanishing(VarSet{0, 1}, "t0 - t1");
    CHECK(is_equal(closure(closed), closed));
    CHECK(is_empty(closure(CylinderSet::empty_set())));
}

TEST_CASE("closure is extensive, idempotent and monotone") {
    testgen::Rng rng(770002);
    for (int trial = 0; trial < 10; ++trial) {
        CylinderSet a = testgen::random_cylinder(rng, 2, 2, 2);
        CylinderSet cl = closure(a);
        CHECK(is_empty(cyl_difference(a, cl)));      // extensive
        CHECK(is_equal(closure(cl), cl));            // idempotent
        CylinderSet b = cyl_union(a, testgen::random_cylinder(rng, 2, 2, 2));
        CHECK(is_empty(cyl_difference(cl, closure(b))));  // monotone
    }
}

TEST_CASE("weak stability witnesses") {
    // Complement of V(t0, t1) presented with a spare variable: the witness
    // drops to the support of the reduced basis.
    CylinderSet U =
        CylinderSet::open_complement(over(VarSet{0, 1, 2}, "t0; t1"));
    StabilityResult res = is_weakly_stable(U);
    REQUIRE(std::holds_alternative<WeakStabilityWitness>(res));
    const auto& w = std::get<WeakStabilityWitness>(res);
    CHECK(w.level == VarSet{0, 1});
    CHECK(radical_equal(w.complement_ideal, over(VarSet{0, 1}, "t0; t1")));
    CHECK(is_equal(cylinder_of_witness(w), U));

    // The full space: empty complement, empty witness level.
    StabilityResult full = is_weakly_stable(CylinderSet::whole_space());
    REQUIRE(std::holds_alternative<WeakStabilityWitness>(full));
    const auto& wf = std::get<WeakStabilityWitness>(full);
    CHECK(wf.level.empty());
    CHECK(is_equal(cylinder_of_witness(wf), CylinderSet::whole_space()));

    // Hyperbola complement: support is the whole level.
    CylinderSet hyp = CylinderSet::open_complement(over(VarSet{0, 1}, "t0*t1 - 1"));
    StabilityResult hres = is_weakly_stable(hyp);
    REQUIRE(std::holds_alternative<WeakStabilityWitness>(hres));
    CHECK(std::get<WeakStabilityWitness>(hres).level == VarSet{0, 1});
}

TEST_CASE("weak stability requires an open input") {
    CylinderSet locked{{LocallyClosedPiece{VarSet{0, 1}, over(VarSet{0, 1}, "t0*t1"),
                                           over(VarSet{0, 1}, "t0")}}};
    CHECK_THROWS_AS(is_weakly_stable(locked), std::invalid_argument);
}

TEST_CASE("witness reconstruction on random opens") {
    testgen::Rng rng(770003);
    for (int trial = 0; trial < 10; ++trial) {
        VarSet level = testgen::random_level(rng, 3, 3);
        IdealPresentation ideal = testgen::random_presentation(rng, level, 2, 2, 2);
        CylinderSet U = CylinderSet::open_complement(ideal);
        StabilityResult res = is_weakly_stable(U);
        REQUIRE(std::holds_alternative<WeakStabilityWitness>(res));
        CHECK(is_equal(cylinder_of_witness(std::get<WeakStabilityWitness>(res)), U));
    }
}

TEST_CASE("single-level splitting round trip") {
    // Any Boolean combination lifts to one level and splits back into
    // pieces without changing the denoted set.
    testgen::Rng rng(770004);
    for (int trial = 0; trial < 8; ++trial) {
        CylinderSet a = testgen::random_cylinder(rng, 2, 2, 2);
        CylinderSet b = testgen::random_cylinder(rng, 2, 2, 2);
        CylinderSet combo = cyl_union(cyl_intersect(a, b), cyl_complement(b));
        VarSet k;
        for (const auto& p : combo.pieces) k = k.unioned(p.level);
        CHECK(is_equal(combo, lift_to_level(combo, k)));
    }
}
