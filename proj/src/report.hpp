#pragma once

#include "catalog.hpp"
#include "distinguish.hpp"
#include "gysin.hpp"
#include "oracle.hpp"

#include "json.hpp"

#include <string>

namespace g2x::report {

using nlohmann::json;

/// Result of one CLI-level command: human text, machine document, pass flag.
struct CommandResult {
    std::string text;
    json doc;
    bool ok = true;
};

std::string tool_name();
std::string tool_version();

json group_to_json(const FGAbelianGroup& g);
FGAbelianGroup group_from_json(const json& j);
json ring_to_json(const GradedRing& r);
std::string groups_tuple(const std::vector<FGAbelianGroup>& gs);

CommandResult cohomology(const std::string& space_spec, Variant default_variant);
CommandResult ring_info(const std::string& space_spec, Variant default_variant);
CommandResult ring_from_text(const std::string& presentation_text);
CommandResult gysin_command(const std::string& total_spec, const std::string& base_spec,
                            const std::string& mode, bool print_pages, Variant default_variant);
CommandResult homotopy_command(const std::string& fibration_spec, int max_level);
CommandResult compare_command(const std::string& a_spec, const std::string& b_spec, int bound,
                              int max_pi, Variant default_variant);
CommandResult validate_command(const std::string& space_spec, Variant default_variant);
CommandResult validate_text(const std::string& presentation_text);

/// One-shot reproduction of every claim in scope: the eight acceptance
/// checks over k in [k_min, k_max] (Hopf columns over n in 1..6), with one
/// pass/fail line each and aggregated notes. Running with the verbatim
/// variant makes the even-family checks report their documented failures.
CommandResult verification_suite(int k_min = 2, int k_max = 8, Variant variant = Variant::Corrected);

json sspage_to_json(const SSPage& page);

/// End-to-end spectral-sequence run for a catalog circle bundle.
struct Pipeline {
    GradedRing base_ring;
    SSPage e2;
    SSPage limit;
    GysinReport verification;
};
Pipeline run_pipeline(const SpaceId& total, const SpaceId& base, Variant variant);

/// Rank of an integer matrix over Q (independent of the SNF path).
std::size_t rank_over_q(const IntMatrix& m);

}  // namespace g2x::report
