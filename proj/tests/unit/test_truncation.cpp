#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "cylcalc/truncation.hpp"

using namespace cylcalc;

namespace {

VarSet over(std::initializer_list<VarIndex> vs) {
    VarSet s;
    for (VarIndex v : vs) s.insert(v);
    return s;
}

FieldEnumeration integers() {
    return FieldEnumeration([](std::uint64_t i) { return Rational(static_cast<long>(i)); },
                            "integers");
}

}  // namespace

TEST_CASE("standard enumeration walks the rationals without repetition") {
    FieldEnumeration e = FieldEnumeration::standard();
    CHECK(e.name() == "default");
    CHECK(e.at(1) == Rational(0));
    CHECK(e.at(2) == Rational(1));
    CHECK(e.at(3) == Rational(-1));
    CHECK(e.at(4) == Rational(1, 2));
    CHECK(e.at(5) == Rational(-1, 2));
    CHECK(e.at(6) == Rational(2));
    CHECK(e.at(7) == Rational(-2));
    CHECK(e.at(8) == Rational(1, 3));
    CHECK(e.at(10) == Rational(3, 2));

    // Queried prefixes are cached and stay injective.
    std::set<std::string> seen;
    for (std::uint64_t i = 1; i <= 60; ++i) seen.insert(e.at(i).to_string());
    CHECK(seen.size() == 60);
    CHECK(e.at(37) == e.at(37));

    CHECK_THROWS_AS(e.at(0), std::invalid_argument);
}

TEST_CASE("a repeating enumeration is rejected at the first collision") {
    FieldEnumeration cyclic(
        [](std::uint64_t i) { return Rational(static_cast<long>(i % 3)); }, "cyclic");
    CHECK(cyclic.at(3) == Rational(0));
    CHECK_THROWS_AS(cyclic.at(4), std::logic_error);
}

TEST_CASE("truncations pin the hyperbola generators") {
    CounterexampleTruncation tr = build_truncation(3);
    REQUIRE(tr.gens.size() == 3);
    CHECK(tr.gens[0].to_string() == "t0*t1 - 1");
    CHECK(tr.gens[1].to_string() == "t0*t2 - t2 - 1");
    CHECK(tr.gens[2].to_string() == "t0*t3 + t3 - 1");

    CHECK(tr.ideal(1).level() == over({0, 1}));
    CHECK(tr.ideal(1).generators().size() == 1);
    CHECK(tr.ideal(3).level() == over({0, 1, 2, 3}));
    CHECK(tr.ideal(3).generators().size() == 3);
    CHECK_THROWS_AS(tr.ideal(0), std::invalid_argument);
    CHECK_THROWS_AS(tr.ideal(4), std::invalid_argument);

    CHECK_THROWS_AS(build_truncation(0), std::invalid_argument);
}

TEST_CASE("witness points solve exactly the depth they are built for") {
    CounterexampleTruncation tr = build_truncation(3);

    std::map<VarIndex, Rational> x1 = witness_point(tr, 1);
    CHECK(x1.at(0) == Rational(1));
    CHECK(x1.at(1) == Rational(1));

    std::map<VarIndex, Rational> x2 = witness_point(tr, 2);
    CHECK(x2.at(0) == Rational(-1));
    CHECK(x2.at(1) == Rational(-1));
    CHECK(x2.at(2) == Rational(-1, 2));

    // Every generator of the matching depth vanishes on its witness.
    for (int m = 1; m <= 3; ++m) {
        std::map<VarIndex, Rational> x = witness_point(tr, m);
        for (int k = 1; k <= m; ++k)
            CHECK(tr.gens[static_cast<std::size_t>(k - 1)].evaluate(x).is_zero());
    }

    // The next generator cannot vanish there no matter how the new
    // coordinate is filled in: its leading factor is pinned to zero.
    std::map<VarIndex, Rational> x = witness_point(tr, 2);
    for (Rational v : {Rational(0), Rational(5), Rational(-1, 3)}) {
        x[3] = v;
        CHECK(tr.gens[2].evaluate(x) == Rational(-1));
    }

    CHECK_THROWS_AS(witness_point(tr, 0), std::invalid_argument);
    CHECK_THROWS_AS(witness_point(tr, 4), std::invalid_argument);
}

TEST_CASE("truncation ideals ascend strictly") {
    CounterexampleTruncation tr = build_truncation(3);
    for (int i = 1; i < 3; ++i) {
        IdealPresentation lower = tr.ideal(i);
        IdealPresentation upper = tr.ideal(i + 1);
        for (const auto& g : lower.generators()) CHECK(radical_member(g, upper));
        // The new generator genuinely enlarges the ideal.
        CHECK_FALSE(radical_member(tr.gens[static_cast<std::size_t>(i)],
                                   lower.at_level(upper.level())));
    }
}

TEST_CASE("no-finite-subcover demonstration verifies itself") {
    NoFiniteSubcoverReport report = demonstrate_no_finite_subcover(3);
    CHECK(report.all_verified());
    CHECK(report.chain_ok.size() == 2);
    CHECK(report.deepest_consistent);
    CHECK(report.witness_values.size() == 3);
    for (const auto& v : report.witness_values) CHECK(v.is_zero());

    std::string text = report.render();
    CHECK(text.find("== truncation ==") != std::string::npos);
    CHECK(text.find("enumeration: default; values 0, 1, -1, 1/2") != std::string::npos);
    CHECK(text.find("== ascending chain ==") != std::string::npos);
    CHECK(text.find("depth 1 inside radical of depth 2: ok") != std::string::npos);
    CHECK(text.find("depth 2 inside radical of depth 3: ok") != std::string::npos);
    CHECK(text.find("== consistency ==") != std::string::npos);
    CHECK(text.find("nonempty (reduced basis is not {1})") != std::string::npos);
    CHECK(text.find("== witness ==") != std::string::npos);
    CHECK(text.find("t0 = 1/2") != std::string::npos);
    CHECK(text.find("generator values: 0; 0; 0") != std::string::npos);
    CHECK(text.find("no subfamily of these opens covers") != std::string::npos);

    NoFiniteSubcoverReport shallow = demonstrate_no_finite_subcover(1);
    CHECK(shallow.all_verified());
    CHECK(shallow.chain_ok.empty());
    CHECK(shallow.render().find("single depth, nothing to chain") != std::string::npos);
}

TEST_CASE("demonstration works over a custom enumeration") {
    NoFiniteSubcoverReport report = demonstrate_no_finite_subcover(2, integers());
    CHECK(report.all_verified());
    // Witness sits at the first unused value: t0 = 3 with forced inverses.
    CHECK(report.witness.at(0) == Rational(3));
    CHECK(report.witness.at(1) == Rational(1, 2));
    CHECK(report.witness.at(2) == Rational(1));
    CHECK(report.render().find("enumeration: integers; values 1, 2, 3") != std::string::npos);
}

TEST_CASE("the contraction to the final line is the zero ideal") {
    for (int n = 1; n <= 4; ++n) {
        IdealPresentation contraction = chevalley_failure(n);
        CHECK(contraction.is_zero_ideal());
        CHECK(contraction.level() == over({1}));
    }
    CHECK(chevalley_failure(3, integers()).is_zero_ideal());
}
