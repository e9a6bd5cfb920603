#ifndef ELP_REPORT_HPP
#define ELP_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "elp/classify.hpp"
#include "elp/elementary.hpp"
#include "elp/program.hpp"
#include "elp/stability.hpp"
#include "elp/unfounded.hpp"

// JSON report assembly for the CLI. Key order is fixed by insertion;
// atom names are sorted within each set and lists of sets by
// (cardinality, lexicographic), so equal inputs produce byte-identical
// output.
namespace elp {

struct AnalyzeOptions {
    bool with_loops = false;
    bool with_elementary_loops = false;
    ElementaryMode mode = ElementaryMode::Auto;
    std::size_t guard = default_guard;
};

struct CheckModelOptions {
    std::optional<StabilityCriterion> criterion; // all seven when absent
    bool baseline = false;
    std::size_t guard = default_guard;
};

nlohmann::ordered_json analysis_report(const Program& p, const AnalyzeOptions& opts);

/// Requires x to be a model over the occurring atoms. When several
/// criteria are evaluated they must agree; a disagreement is reported
/// via the "criteria_agree" field (the CLI turns it into exit 4).
nlohmann::ordered_json check_model_report(const Program& p, const AtomSet& x,
                                          const CheckModelOptions& opts);

std::string render_text_report(const nlohmann::ordered_json& report);

} // namespace elp

#endif
