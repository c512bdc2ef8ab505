#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "splitjac/cli/command.hpp"

namespace {

struct Spec {
    std::string name, help;
    std::vector<std::string> options;
};

const std::vector<Spec> kSpecs{
    {"cover-generic", "generic degree-3 covering pair from P = x^3+ax^2+bx+c", {"a", "b", "c", "d"}},
    {"cover-special1", "first map special (triple zero at 0)", {"a", "b", "d"}},
    {"cover-special2", "second map special", {"b", "c", "d"}},
    {"cover-both-special", "classify pairs of special coverings", {}},
    {"glue", "Igusa-Clebsch invariants of the (3,3)-glued Jacobian of E_a x E_b", {"a", "b", "expect"}},
    {"hesse-j", "j-invariant of the Hesse curve E_a", {"a"}},
    {"hesse-orbit", "the 12 parameters a' with E_a' isomorphic to E_a", {"a"}},
    {"to-hesse", "Hesse form of y^2 = x^3 + Ax + B", {"A", "B"}},
    {"isogeny2", "the 2-isogeny E_a -> E_b with kernel [t:t:1]", {"t"}},
    {"invariants", "Igusa-Clebsch invariants of a sextic (JSON coefficient array, low degree first)", {"sextic", "expect"}},
    {"census", "2-torsion census of E_a x E_b over F_p", {"a", "b", "p"}},
    {"verify-appendix", "check all worked examples", {}},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (3,3)-split Jacobian toolkit"};
    app.require_subcommand(1);
    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, CLI::App*> subs;
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    for (const auto& s : kSpecs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        subs[s.name] = sub;
        auto& store = values[s.name];
        sub->add_option("--field", store["field"], "Q, Q(w), Q(r3) or Fp:<p> (default Q(w))");
        for (const auto& o : s.options) sub->add_option("--" + o, store[o]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    splitjac::cli::CommandRequest req;
    for (const auto& [name, sub] : subs) {
        if (!sub->parsed()) continue;
        req.subcommand = name;
        for (const auto& [key, val] : values[name])
            if (sub->get_option("--" + key)->count() > 0) req.params[key] = val;
    }

    auto report = splitjac::cli::run(req);
    std::cout << splitjac::cli::to_json(report).dump(pretty ? 2 : -1) << "\n";
    if (report.status != splitjac::cli::Status::ok) std::cerr << "error: " << report.message << "\n";
    else if (!report.all_pass()) std::cerr << "verification failed\n";
    return report.exit_code();
}
