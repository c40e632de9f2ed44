#include "cylcalc/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cylcalc/compactness.hpp"
#include "cylcalc/groebner.hpp"
#include "cylcalc/textio.hpp"
#include "cylcalc/truncation.hpp"

namespace cylcalc {
namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

// '@path' pulls the value from a file; anything else is taken verbatim.
std::string resolve_arg(const std::string& value) {
    if (value.empty() || value.front() != '@') return value;
    std::ifstream in(value.substr(1));
    if (!in) throw std::invalid_argument("cannot read file: " + value.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw std::invalid_argument("unknown order: " + name + " (use grevlex or lex)");
}

void print_presentation(std::ostream& out, const IdealPresentation& ideal) {
    out << "level: " << ideal.level().to_string() << "\n";
    if (ideal.generators().empty()) {
        out << "(zero ideal)\n";
        return;
    }
    for (const auto& g : ideal.generators()) out << g.to_string() << "\n";
}

int bool_verdict(std::ostream& out, bool value) {
    out << (value ? "true" : "false") << "\n";
    return value ? kExitTrue : kExitFalse;
}

struct CylArgs {
    std::string a, b;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact quasi-compactness calculator for cylinder sets"};
    app.require_subcommand(1);

    // gb
    auto* gb_cmd = app.add_subcommand("gb", "reduced basis of an ideal");
    std::string gb_ideal, gb_order = "grevlex";
    gb_cmd->add_option("--ideal", gb_ideal, "generators, or 'level {..}: gens'")->required();
    gb_cmd->add_option("--order", gb_order, "grevlex or lex");

    // member / radical-member
    auto* member_cmd = app.add_subcommand("member", "exact ideal membership");
    std::string member_f, member_ideal;
    member_cmd->add_option("--f", member_f, "polynomial")->required();
    member_cmd->add_option("--ideal", member_ideal, "ideal")->required();

    auto* radmember_cmd = app.add_subcommand("radical-member", "radical membership");
    std::string rad_f, rad_ideal;
    radmember_cmd->add_option("--f", rad_f, "polynomial")->required();
    radmember_cmd->add_option("--ideal", rad_ideal, "ideal")->required();

    auto* radeq_cmd = app.add_subcommand("radical-eq", "equality of radicals");
    std::string radeq_a, radeq_b;
    radeq_cmd->add_option("--a", radeq_a, "first ideal")->required();
    radeq_cmd->add_option("--b", radeq_b, "second ideal")->required();

    auto* elim_cmd = app.add_subcommand("eliminate", "contraction to kept variables");
    std::string elim_ideal, elim_keep;
    elim_cmd->add_option("--ideal", elim_ideal, "ideal")->required();
    elim_cmd->add_option("--keep", elim_keep, "variable set, e.g. {0, 2}")->required();

    // cyl family
    auto* cyl_cmd = app.add_subcommand("cyl", "cylinder-set algebra");
    cyl_cmd->require_subcommand(1);
    std::map<std::string, CylArgs> cyl_args;
    for (const char* name : {"union", "intersect", "equal"}) {
        auto* sub = cyl_cmd->add_subcommand(name);
        sub->add_option("--a", cyl_args[name].a, "first cylinder")->required();
        sub->add_option("--b", cyl_args[name].b, "second cylinder")->required();
    }
    for (const char* name : {"complement", "empty", "closure", "stable"}) {
        auto* sub = cyl_cmd->add_subcommand(name);
        sub->add_option("--a", cyl_args[name].a, "cylinder")->required();
    }

    // decide
    auto* decide_cmd = app.add_subcommand("decide", "theorem-conditions report");
    std::string decide_complement, decide_system;
    decide_cmd->add_option("--complement", decide_complement,
                           "leveled complement ideal (affine flavor)");
    decide_cmd->add_option("--system", decide_system, "direct-system document");

    // subcover
    auto* subcover_cmd = app.add_subcommand("subcover", "finite subcover certificate");
    std::string sc_target, sc_cover;
    int sc_budget = 0;
    subcover_cmd->add_option("--target", sc_target, "complement ideal of the open")->required();
    subcover_cmd->add_option("--cover", sc_cover, "members, one per line or ';'-separated")
        ->required();
    subcover_cmd->add_option("--budget", sc_budget, "treat the members as a stream with this budget");

    // cylcover
    auto* cylcover_cmd = app.add_subcommand("cylcover", "finite union extraction");
    std::string cc_target, cc_parts;
    int cc_budget = 0;
    cylcover_cmd->add_option("--target", cc_target, "covered cylinder")->required();
    cylcover_cmd->add_option("--parts", cc_parts, "cylinders separated by '---' lines")
        ->required();
    cylcover_cmd->add_option("--budget", cc_budget, "treat the parts as a stream with this budget");

    auto* ex41_cmd = app.add_subcommand("example41", "missing finite subcover, truncated");
    int ex41_n = 3;
    ex41_cmd->add_option("--n", ex41_n, "truncation depth")->required();

    auto* ex43_cmd = app.add_subcommand("example43", "non-constructible image, truncated");
    int ex43_n = 3;
    ex43_cmd->add_option("--n", ex43_n, "truncation depth")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*gb_cmd) {
            IdealPresentation ideal = parse_ideal_entry(resolve_arg(gb_ideal));
            GroebnerBasis basis = groebner_basis(ideal, order_from_name(gb_order));
            print_presentation(out, basis.as_presentation());
            return kExitTrue;
        }
        if (*member_cmd) {
            return bool_verdict(out, ideal_member(parse_polynomial(resolve_arg(member_f)),
                                                  parse_ideal_entry(resolve_arg(member_ideal))));
        }
        if (*radmember_cmd) {
            return bool_verdict(out, radical_member(parse_polynomial(resolve_arg(rad_f)),
                                                    parse_ideal_entry(resolve_arg(rad_ideal))));
        }
        if (*radeq_cmd) {
            return bool_verdict(out, radical_equal(parse_ideal_entry(resolve_arg(radeq_a)),
                                                   parse_ideal_entry(resolve_arg(radeq_b))));
        }
        if (*elim_cmd) {
            IdealPresentation ideal = parse_ideal_entry(resolve_arg(elim_ideal));
            VarSet keep = parse_varset(resolve_arg(elim_keep));
            print_presentation(out, eliminate(ideal, keep));
            return kExitTrue;
        }
        if (*cyl_cmd) {
            CLI::App* sub = cyl_cmd->get_subcommands().front();
            const std::string& name = sub->get_name();
            CylinderSet a = parse_cylinder(resolve_arg(cyl_args[name].a));
            if (name == "union" || name == "intersect" || name == "equal") {
                CylinderSet b = parse_cylinder(resolve_arg(cyl_args[name].b));
                if (name == "union") out << render_cylinder(cyl_union(a, b)) << "\n";
                else if (name == "intersect") out << render_cylinder(cyl_intersect(a, b)) << "\n";
                else return bool_verdict(out, is_equal(a, b));
                return kExitTrue;
            }
            if (name == "complement") {
                out << render_cylinder(cyl_complement(a)) << "\n";
                return kExitTrue;
            }
            if (name == "empty") return bool_verdict(out, is_empty(a));
            if (name == "closure") {
                out << render_cylinder(closure(a)) << "\n";
                return kExitTrue;
            }
            // stable
            StabilityResult res = is_weakly_stable(a);
            if (std::holds_alternative<StabilityRefusal>(res)) {
                const auto& refusal = std::get<StabilityRefusal>(res);
                out << "refused: " << refusal.reason << "; generator "
                    << refusal.failing_generator.to_string() << "\n";
                return kExitFalse;
            }
            const auto& witness = std::get<WeakStabilityWitness>(res);
            out << "stable level: " << witness.level.to_string() << "\n";
            out << "complement ideal:\n";
            print_presentation(out, witness.complement_ideal);
            out << "reconstruction: "
                << (is_equal(cylinder_of_witness(witness), a) ? "verified" : "FAILED") << "\n";
            return kExitTrue;
        }
        if (*decide_cmd) {
            bool has_complement = !decide_complement.empty();
            bool has_system = !decide_system.empty();
            if (has_complement == has_system)
                throw std::invalid_argument("decide needs exactly one of --complement, --system");
            if (has_complement) {
                LeveledIdeal ideal = parse_leveled_ideal(resolve_arg(decide_complement));
                ConditionsReport report =
                    decide_affine_conditions(OpenPresentation::affine(ideal));
                out << report.render();
                return report.all_true() ? kExitTrue : kExitFalse;
            }
            SystemDocument doc = parse_system_document(resolve_arg(decide_system));
            SystemConditionsReport report = decide_system_conditions(
                OpenPresentation::with_system_entries(doc.entries), doc.system);
            out << report.render();
            return report.all_true() ? kExitTrue : kExitFalse;
        }
        if (*subcover_cmd) {
            OpenPresentation U = OpenPresentation::affine(
                LeveledIdeal{{parse_ideal_entry(resolve_arg(sc_target))}});
            std::vector<CoverMember> members = parse_cover(resolve_arg(sc_cover));
            SubcoverCertificate cert;
            if (sc_budget > 0) {
                std::size_t next = 0;
                CoverStream stream = [&]() -> std::optional<CoverMember> {
                    if (next >= members.size()) return std::nullopt;
                    return members[next++];
                };
                cert = extract_finite_subcover(U, stream, sc_budget);
            } else {
                cert = extract_finite_subcover(U, members);
            }
            out << cert.render();
            out << "re-verification: " << (cert.verify(U, members) ? "passed" : "FAILED") << "\n";
            return kExitTrue;
        }
        if (*cylcover_cmd) {
            CylinderSet target = parse_cylinder(resolve_arg(cc_target));
            std::vector<CylinderSet> parts = parse_cylinder_list(resolve_arg(cc_parts));
            std::vector<std::size_t> chosen;
            if (cc_budget > 0) {
                std::size_t next = 0;
                CylinderStream stream = [&]() -> std::optional<CylinderSet> {
                    if (next >= parts.size()) return std::nullopt;
                    return parts[next++];
                };
                chosen = extract_finite_cylinder_union(target, stream, cc_budget);
            } else {
                chosen = extract_finite_cylinder_union(target, parts);
            }
            out << "chosen:";
            if (chosen.empty()) out << " none";
            for (std::size_t i = 0; i < chosen.size(); ++i)
                out << (i ? "; " : " ") << chosen[i];
            out << "\n";
            return kExitTrue;
        }
        if (*ex41_cmd) {
            NoFiniteSubcoverReport report = demonstrate_no_finite_subcover(ex41_n);
            out << report.render();
            return report.all_verified() ? kExitTrue : kExitFalse;
        }
        if (*ex43_cmd) {
            IdealPresentation contraction = chevalley_failure(ex43_n);
            if (contraction.is_zero_ideal()) {
                out << "contraction to F[t1] is the zero ideal\n";
                return kExitTrue;
            }
            out << "contraction to F[t1] is NOT zero:\n";
            print_presentation(out, contraction);
            return kExitFalse;
        }
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NotACover& e) {
        err << "not a cover: " << e.what() << "\n";
        return kExitFalse;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    err << "error: no subcommand\n";
    return kExitInput;
}

}  // namespace cylcalc
