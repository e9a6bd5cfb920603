#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "elp/elementary.hpp"
#include "elp/graph.hpp"
#include "elp/parser.hpp"
#include "elp/properties.hpp"
#include "elp/report.hpp"
#include "elp/semantics.hpp"
#include "elp/unfounded.hpp"

namespace {

// Exit codes shared by every subcommand:
//   0 success / stable, 1 enumeration guard exceeded, 2 syntax or input
//   error, 3 model not stable, 4 property violation or criterion
//   disagreement, 5 Theorem-1 hypothesis unmet (not a model over the
//   occurring atoms).
enum ExitCode {
    exit_ok = 0,
    exit_guard = 1,
    exit_syntax = 2,
    exit_not_stable = 3,
    exit_violation = 4,
    exit_hypothesis = 5,
};

elp::Program load_program(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw elp::SyntaxError("cannot read '" + path + "'", 0, 0);
    std::ostringstream text;
    text << in.rdbuf();
    return elp::parse_program(elp::SourceProgram{text.str(), path});
}

// Comma-separated atom names; every name must be lexically valid.
elp::AtomSet parse_atom_list(const elp::Program& p, const std::string& csv, bool* all_known) {
    elp::AtomSet out;
    *all_known = true;
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
            name.erase(name.begin());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        if (name.empty()) continue;
        elp::parse_program(name + ".", "<atom>"); // lexical validation
        if (auto idx = p.table().find(name))
            out.add(*idx);
        else
            *all_known = false;
    }
    return out;
}

void emit(const nlohmann::ordered_json& report, const std::string& format) {
    if (format == "text")
        std::cout << elp::render_text_report(report);
    else
        std::cout << report.dump(2) << "\n";
}

int run_analyze(const std::string& path, const std::string& format, bool with_loops,
                bool with_elem, bool assume_hef, std::size_t guard) {
    elp::Program p = load_program(path);
    elp::AnalyzeOptions opts;
    opts.with_loops = with_loops;
    opts.with_elementary_loops = with_elem;
    opts.mode = assume_hef ? elp::ElementaryMode::Subgraph : elp::ElementaryMode::Auto;
    opts.guard = guard;
    emit(elp::analysis_report(p, opts), format);
    return exit_ok;
}

int run_check_model(const std::string& path, const std::string& model,
                    const std::string& criterion, bool baseline, const std::string& format,
                    std::size_t guard) {
    elp::Program p = load_program(path);
    bool all_known = true;
    elp::AtomSet x = parse_atom_list(p, model, &all_known);
    if (!all_known || !elp::is_model(x, p)) {
        std::cerr << "given set is not a model over the atoms occurring in the program\n";
        return exit_hypothesis;
    }
    elp::CheckModelOptions opts;
    if (criterion != "all") opts.criterion = elp::criterion_from_name(criterion);
    opts.baseline = baseline;
    opts.guard = guard;
    nlohmann::ordered_json report = elp::check_model_report(p, x, opts);
    emit(report, format);
    if (!report["criteria_agree"].get<bool>()) {
        std::cerr << "internal error: stability criteria disagree\n";
        return exit_violation;
    }
    return report["stable"].get<bool>() ? exit_ok : exit_not_stable;
}

int run_shift(const std::string& path) {
    std::cout << elp::render_program(elp::shift(load_program(path)));
    return exit_ok;
}

int run_graph(const std::string& path, const std::string& elementary_of) {
    elp::Program p = load_program(path);
    if (elementary_of.empty()) {
        std::cout << elp::to_dot(elp::dependency_graph(p), p.table());
        return exit_ok;
    }
    bool all_known = true;
    elp::AtomSet x = parse_atom_list(p, elementary_of, &all_known);
    if (!all_known) {
        std::cerr << "unknown atom in --elementary set\n";
        return exit_hypothesis;
    }
    std::cout << elp::to_dot(elp::elementary_subgraph(p, x), p.table());
    return exit_ok;
}

int run_formulas(const std::string& path, const std::string& set_arg) {
    elp::Program p = load_program(path);
    bool all_known = true;
    elp::AtomSet y = parse_atom_list(p, set_arg, &all_known);
    std::cout << "ES: " << elp::external_support_formula_text(p, y) << "\n";
    if (!y.empty()) std::cout << "LF: " << elp::loop_formula_text(p, y) << "\n";
    return exit_ok;
}

int run_verify(std::uint64_t seed, std::uint64_t count, std::size_t max_rules,
               std::size_t pool_atoms, std::size_t guard) {
    elp::GeneratorOptions gen;
    gen.max_rules = max_rules;
    gen.pool_atoms = pool_atoms;
    elp::VerifyOptions opts;
    opts.guard = guard;
    elp::VerifyReport report = elp::verify_random_programs(seed, count, gen, opts);
    if (report.ok) {
        std::cout << "verified " << report.instances << " random programs, no violations\n";
        return exit_ok;
    }
    std::cout << "property violated: " << report.violation->property << "\n"
              << "detail: " << report.violation->detail << "\n"
              << "minimized counterexample:\n"
              << elp::render_program(*report.counterexample);
    return exit_violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"loop-theoretic analysis of propositional disjunctive logic programs"};
    app.require_subcommand(1);
    app.fallthrough(); // --max-atoms may follow the subcommand
    std::size_t guard = elp::default_guard;
    app.add_option("--max-atoms", guard, "subset-enumeration guard")->capture_default_str();

    std::string path, format = "json", model, criterion = "all", elementary_of, set_arg;
    bool with_loops = false, with_elem = false, assume_hef = false, baseline = false, dot = false;
    std::uint64_t seed = 1, count = 500;
    std::size_t max_rules = 10, pool_atoms = 6;

    CLI::App* analyze = app.add_subcommand("analyze", "classify a program and list its models");
    analyze->add_option("file", path)->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    analyze->add_flag("--loops", with_loops, "include the loop list");
    analyze->add_flag("--elementary-loops", with_elem, "include the elementary-loop list");
    analyze->add_flag("--assume-hef", assume_hef,
                      "use the elementary-subgraph test for disjunctive programs");

    CLI::App* check = app.add_subcommand("check-model", "evaluate stability criteria on a model");
    check->add_option("file", path)->required();
    check->add_option("-m,--model", model, "comma-separated atom names")->required();
    check->add_option("--criterion", criterion)
        ->check(CLI::IsMember({"a", "b", "bprime", "c", "d", "e", "eprime", "all"}));
    check->add_flag("--baseline", baseline, "include maximal loops of the R-reduced subprogram");
    check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    CLI::App* shift_cmd = app.add_subcommand("shift", "print the shifted variant");
    shift_cmd->add_option("file", path)->required();

    CLI::App* graph_cmd = app.add_subcommand("graph", "DOT export of dependency structure");
    graph_cmd->add_option("file", path)->required();
    graph_cmd->add_flag("--dot", dot, "emit DOT (default output format)");
    graph_cmd->add_option("--elementary", elementary_of,
                          "emit the elementary subgraph of this atom set");

    CLI::App* formulas = app.add_subcommand("formulas", "print ES/LF formula text for a set");
    formulas->add_option("file", path)->required();
    formulas->add_option("--set", set_arg, "comma-separated atom names")->required();

    CLI::App* verify = app.add_subcommand("verify", "fuzz the property suite");
    verify->add_option("--seed", seed)->capture_default_str();
    verify->add_option("--count", count)->capture_default_str();
    verify->add_option("--max-rules", max_rules)->capture_default_str();
    verify->add_option("--pool-atoms", pool_atoms)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return run_analyze(path, format, with_loops, with_elem, assume_hef, guard);
        if (check->parsed())
            return run_check_model(path, model, criterion, baseline, format, guard);
        if (shift_cmd->parsed()) return run_shift(path);
        if (graph_cmd->parsed()) return run_graph(path, elementary_of);
        if (formulas->parsed()) return run_formulas(path, set_arg);
        if (verify->parsed()) return run_verify(seed, count, max_rules, pool_atoms, guard);
    } catch (const elp::SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return exit_syntax;
    } catch (const elp::GuardExceeded& e) {
        std::cerr << e.what() << "\n";
        return exit_guard;
    } catch (const elp::PreconditionViolated& e) {
        std::cerr << e.what() << "\n";
        return exit_hypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_syntax;
    }
    return exit_ok;
}
