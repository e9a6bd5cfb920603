#include "elp/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "elp/elementary.hpp"
#include "elp/graph.hpp"
#include "elp/parser.hpp"
#include "elp/semantics.hpp"

namespace elp {

using json = nlohmann::ordered_json;

namespace {

json names_of(const Program& p, const AtomSet& s) {
    std::vector<std::string> names;
    names.reserve(s.size());
    for (AtomIndex a : s) names.push_back(p.atom_name(a));
    std::sort(names.begin(), names.end());
    return json(names);
}

json set_list(const Program& p, const std::vector<AtomSet>& sets) {
    std::vector<std::vector<std::string>> lists;
    lists.reserve(sets.size());
    for (const AtomSet& s : sets) {
        std::vector<std::string> names;
        for (AtomIndex a : s) names.push_back(p.atom_name(a));
        std::sort(names.begin(), names.end());
        lists.push_back(std::move(names));
    }
    std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return json(lists);
}

json violation_json(const Program& p, const std::optional<ClassViolation>& v) {
    if (!v) return nullptr;
    return json{{"rule", v->rule}, {"loop", names_of(p, v->loop)}};
}

json classification_json(const Program& p, const ClassReport& rep) {
    json out;
    out["tight"] = rep.tight;
    out["e_tight"] = rep.e_tight;
    out["hcf"] = rep.hcf;
    out["hef"] = rep.hef ? json(*rep.hef) : json(nullptr);
    json witnesses = json::object();
    if (rep.tight_witness) witnesses["tight"] = violation_json(p, rep.tight_witness);
    if (rep.hcf_witness) witnesses["hcf"] = violation_json(p, rep.hcf_witness);
    if (rep.hef_witness) witnesses["hef"] = violation_json(p, rep.hef_witness);
    out["witnesses"] = witnesses;
    return out;
}

} // namespace

json analysis_report(const Program& p, const AnalyzeOptions& opts) {
    json out;
    out["program"] = render_program(p);
    json atoms = json::array();
    for (AtomIndex a : p.atoms()) atoms.push_back(p.atom_name(a));
    out["atoms"] = atoms;
    out["rule_count"] = p.rules().size();
    out["nondisjunctive"] = p.nondisjunctive();
    out["classification"] = classification_json(p, classify(p, opts.guard));
    if (opts.with_loops) out["loops"] = set_list(p, loops(p, opts.guard));
    if (opts.with_elementary_loops)
        out["elementary_loops"] = set_list(p, elementary_loops(p, opts.guard, opts.mode));
    out["stable_models"] = set_list(p, stable_models(p, opts.guard));
    return out;
}

json check_model_report(const Program& p, const AtomSet& x, const CheckModelOptions& opts) {
    json out;
    out["program"] = render_program(p);
    out["model"] = names_of(p, x);
    std::vector<StabilityCriterion> todo;
    if (opts.criterion)
        todo.push_back(*opts.criterion);
    else
        todo.assign(std::begin(all_criteria), std::end(all_criteria));

    json criteria = json::object();
    std::optional<bool> verdict;
    bool agree = true;
    for (StabilityCriterion c : todo) {
        CriterionResult res = stable_via_witness(p, x, c, opts.guard);
        json one;
        one["holds"] = res.holds;
        one["witness"] = res.witness ? names_of(p, *res.witness) : json(nullptr);
        criteria[criterion_name(c)] = one;
        if (verdict && *verdict != res.holds) agree = false;
        if (!verdict) verdict = res.holds;
    }
    out["criteria"] = criteria;
    out["criteria_agree"] = agree;
    out["stable"] = agree && verdict.value_or(false);
    out["elementarily_unfounded_sets"] = set_list(p, elementarily_unfounded_sets(p, x, opts.guard));

    BoundingLoopReport bl = bounding_loops(p, x, opts.guard);
    json loops_json = json::array();
    for (const BoundingLoopInfo& info : bl.loops) {
        json one;
        one["loop"] = names_of(p, info.atoms);
        one["hef_subprogram"] = info.hef_subprogram ? json(*info.hef_subprogram) : json(nullptr);
        one["unfounded_witness"] =
            info.unfounded_witness ? names_of(p, *info.unfounded_witness) : json(nullptr);
        loops_json.push_back(one);
    }
    out["bounding_loops"] = loops_json;
    if (opts.baseline)
        out["baseline_maximal_loops"] = set_list(p, baseline_maximal_loops(p, x));
    return out;
}

namespace {

void render_value(std::ostringstream& out, const json& value, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items()) {
            if (sub.is_object() || (sub.is_array() && !sub.empty() && sub.front().is_object())) {
                out << pad << key << ":\n";
                render_value(out, sub, indent + 1);
            } else {
                out << pad << key << ": " << sub.dump() << "\n";
            }
        }
    } else if (value.is_array()) {
        for (const auto& sub : value) {
            out << pad << "-\n";
            render_value(out, sub, indent + 1);
        }
    } else {
        out << pad << value.dump() << "\n";
    }
}

} // namespace

std::string render_text_report(const json& report) {
    std::ostringstream out;
    render_value(out, report, 0);
    return out.str();
}

} // namespace elp
