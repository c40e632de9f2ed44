#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cylcalc/cli.hpp"

using namespace cylcalc;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << content;
}

}  // namespace

TEST_CASE("gb subcommand prints the reduced presentation") {
    CliResult r = run({"gb", "--ideal", "t0^2 - 1; t0 - 1"});
    CHECK(r.code == 0);
    CHECK(r.out == "level: {0}\nt0 - 1\n");
    CHECK(r.err.empty());

    CliResult zero = run({"gb", "--ideal", "0"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "level: {}\n(zero ideal)\n");

    // Under lex the later variable dominates regardless of degree.
    CliResult lex = run({"gb", "--ideal", "t0 + t1^3", "--order", "lex"});
    CHECK(lex.code == 0);
    CHECK(lex.out == "level: {0, 1}\nt1^3 + t0\n");

    CliResult bad = run({"gb", "--ideal", "t0", "--order", "deglex"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unknown order") != std::string::npos);
}

TEST_CASE("membership subcommands answer on the exit code") {
    CliResult yes = run({"member", "--f", "t0*t1 + t1", "--ideal", "t1"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "true\n");

    CliResult no = run({"member", "--f", "t0", "--ideal", "t0^2"});
    CHECK(no.code == 1);
    CHECK(no.out == "false\n");

    CliResult rad = run({"radical-member", "--f", "t0", "--ideal", "t0^2"});
    CHECK(rad.code == 0);
    CHECK(rad.out == "true\n");

    CliResult eq = run({"radical-eq", "--a", "t0^2; t1", "--b", "t0; t1^3"});
    CHECK(eq.code == 0);
    CliResult neq = run({"radical-eq", "--a", "t0", "--b", "t1"});
    CHECK(neq.code == 1);
}

TEST_CASE("eliminate subcommand prints the contraction") {
    CliResult r = run({"eliminate", "--ideal", "t0*t1 - 1; t0*t2 - 1", "--keep", "{1, 2}"});
    CHECK(r.code == 0);
    CHECK(r.out == "level: {1, 2}\nt2 - t1\n");

    CliResult none = run({"eliminate", "--ideal", "t0*t1", "--keep", "{1}"});
    CHECK(none.code == 0);
    CHECK(none.out == "level: {1}\n(zero ideal)\n");
}

TEST_CASE("cyl subcommands compute the boolean algebra") {
    std::string axis0 = "level: {0}; closed: [t0]; removed: [1]";
    std::string axis1 = "level: {1}; closed: [t1]; removed: [1]";

    CliResult u = run({"cyl", "union", "--a", axis0, "--b", axis1});
    CHECK(u.code == 0);
    CHECK(u.out.find("level:") != std::string::npos);

    CliResult meet = run({"cyl", "intersect", "--a", axis0, "--b", axis1});
    CHECK(meet.code == 0);

    CliResult eq = run({"cyl", "equal", "--a", "level: {0}; closed: [t0^2]; removed: [1]",
                        "--b", axis0});
    CHECK(eq.code == 0);
    CHECK(eq.out == "true\n");

    CliResult empty_no = run({"cyl", "empty", "--a", axis0});
    CHECK(empty_no.code == 1);
    CHECK(empty_no.out == "false\n");
    CliResult empty_yes = run({"cyl", "empty", "--a", "empty"});
    CHECK(empty_yes.code == 0);
    CHECK(empty_yes.out == "true\n");

    // Complement of a union of two complements collapses to an intersection.
    CliResult compl_out = run({"cyl", "complement", "--a", axis0});
    CHECK(compl_out.code == 0);
    CliResult double_empty =
        run({"cyl", "empty", "--a", "level: {0}; closed: [t0]; removed: [t0]"});
    CHECK(double_empty.code == 0);

    CliResult closed = run({"cyl", "closure", "--a", "level: {0, 1}; closed: [t0*t1]; removed: [t0]"});
    CHECK(closed.code == 0);
    CHECK(closed.out.find("t1") != std::string::npos);
}

TEST_CASE("cyl stable reports the witness or the refusal") {
    CliResult ok = run({"cyl", "stable", "--a", "level: {0, 1}; closed: []; removed: [t0]"});
    CHECK(ok.code == 0);
    CHECK(ok.out ==
          "stable level: {0}\n"
          "complement ideal:\n"
          "level: {0}\n"
          "t0\n"
          "reconstruction: verified\n");

    // A closed locus is not open, so stability is not even well-posed.
    CliResult not_open = run({"cyl", "stable", "--a", "level: {0}; closed: [t0]; removed: [1]"});
    CHECK(not_open.code == 2);
    CHECK(not_open.err.find("cylinder is not open") != std::string::npos);
}

TEST_CASE("decide reports on both flavors and rejects ambiguity") {
    CliResult affine = run({"decide", "--complement", "t0; t1"});
    CHECK(affine.code == 0);
    CHECK(affine.out.find("conditions report (affine)") != std::string::npos);
    CHECK(affine.out.find("coherent: true") != std::string::npos);

    write_file("/tmp/cylcalc_test_system.txt",
               "level low vars {0}\n"
               "level high vars {0, 1}\n"
               "map low -> high { t0 -> t1^2 }\n"
               "entry at low: t0 - 1\n");
    CliResult system = run({"decide", "--system", "@/tmp/cylcalc_test_system.txt"});
    CHECK(system.code == 0);
    CHECK(system.out.find("conditions report (system)") != std::string::npos);
    CHECK(system.out.find("common level: high") != std::string::npos);
    CHECK(system.out.find("pushed ideal: [t1^2 - 1] over {0, 1}") != std::string::npos);

    CliResult neither = run({"decide"});
    CHECK(neither.code == 2);
    CliResult both = run({"decide", "--complement", "t0", "--system", "level l vars {0}\n"});
    CHECK(both.code == 2);
    CHECK(both.err.find("exactly one") != std::string::npos);
}

TEST_CASE("subcover extracts, re-verifies, and signals failures") {
    CliResult r = run({"subcover", "--target", "t0; t1; t2",
                       "--cover", "t0\nt1\nt2\nt0*t1\nt1*t2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("subcover certificate") != std::string::npos);
    CHECK(r.out.find("chosen: 0; 1; 2") != std::string::npos);
    CHECK(r.out.find("re-verification: passed") != std::string::npos);

    CliResult not_cover = run({"subcover", "--target", "t0; t1", "--cover", "t0"});
    CHECK(not_cover.code == 1);
    CHECK(not_cover.err.find("not a cover: ") != std::string::npos);

    CliResult budget = run({"subcover", "--target", "t0; t1", "--cover", "t0\nt1",
                            "--budget", "1"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("budget exhausted: ") != std::string::npos);

    CliResult streamed = run({"subcover", "--target", "t0; t1", "--cover", "t0\nt1",
                              "--budget", "5"});
    CHECK(streamed.code == 0);
    CHECK(streamed.out.find("chosen: 0; 1") != std::string::npos);
}

TEST_CASE("cylcover chooses part indices") {
    std::string parts =
        "level: {0}; closed: [t0]; removed: [1]\n"
        "---\n"
        "level: {1}; closed: [t1]; removed: [1]\n"
        "---\n"
        "level: {0, 1}; closed: [t0; t1]; removed: [1]\n";
    CliResult r = run({"cylcover", "--target", "level: {0, 1}; closed: [t0*t1]; removed: [1]",
                       "--parts", parts});
    CHECK(r.code == 0);
    CHECK(r.out == "chosen: 0; 1\n");

    CliResult nothing = run({"cylcover", "--target", "empty", "--parts", parts});
    CHECK(nothing.code == 0);
    CHECK(nothing.out == "chosen: none\n");

    CliResult short_budget = run({"cylcover", "--target",
                                  "level: {0, 1}; closed: [t0*t1]; removed: [1]",
                                  "--parts", parts, "--budget", "1"});
    CHECK(short_budget.code == 3);

    CliResult missing = run({"cylcover", "--target", "level: {2}; closed: [t2]; removed: [1]",
                             "--parts", parts});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("not a cover: ") != std::string::npos);
}

TEST_CASE("truncation demonstrations run end to end") {
    CliResult deep = run({"example41", "--n", "2"});
    CHECK(deep.code == 0);
    CHECK(deep.out.find("== truncation ==") != std::string::npos);
    CHECK(deep.out.find("no subfamily of these opens covers") != std::string::npos);

    CliResult line = run({"example43", "--n", "2"});
    CHECK(line.code == 0);
    CHECK(line.out == "contraction to F[t1] is the zero ideal\n");

    CliResult bad = run({"example41", "--n", "0"});
    CHECK(bad.code == 2);
}

TEST_CASE("help, indirection, and malformed input") {
    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("quasi-compactness") != std::string::npos);

    CliResult sub_help = run({"gb", "--help"});
    CHECK(sub_help.code == 0);
    CHECK(sub_help.out.find("--ideal") != std::string::npos);

    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gb"}).code == 2);  // missing required option

    CliResult bad_poly = run({"gb", "--ideal", "t0 + %"});
    CHECK(bad_poly.code == 2);
    CHECK(bad_poly.err.find("error: ") != std::string::npos);

    CliResult bad_file = run({"gb", "--ideal", "@/tmp/definitely_missing_cylcalc_input.txt"});
    CHECK(bad_file.code == 2);
    CHECK(bad_file.err.find("cannot read file") != std::string::npos);

    write_file("/tmp/cylcalc_test_ideal.txt", "# a line\nt0^2 - 1\nt0 - 1\n");
    CliResult from_file = run({"gb", "--ideal", "@/tmp/cylcalc_test_ideal.txt"});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == "level: {0}\nt0 - 1\n");
}

TEST_CASE("outputs are byte-identical across repeated runs") {
    std::vector<std::vector<std::string>> invocations = {
        {"gb", "--ideal", "t0*t2 - t1^2; t1*t2 - t0"},
        {"decide", "--complement", "t0*t1 - 1; t2"},
        {"subcover", "--target", "t0; t1", "--cover", "t1\nt0\nt0*t1"},
    };
    for (const auto& args : invocations) {
        CliResult first = run(args);
        CliResult second = run(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
        CHECK(first.err == second.err);
    }
}
