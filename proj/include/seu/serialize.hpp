#pragma once

#include <string>

#include "json.hpp"

#include "seu/decide.hpp"
#include "seu/family.hpp"
#include "seu/hypotheses.hpp"
#include "seu/lemma_tests.hpp"
#include "seu/sweep.hpp"

namespace seu {

using ordered_json = nlohmann::ordered_json;

// Builders with fixed key order, so equal runs emit identical bytes.
// Wall-clock data is opt-in (with_timing) and absent by default.

ordered_json to_json(const PairClassification& p);
ordered_json to_json(const Decision& decision, bool with_timing = false);
ordered_json to_json(const CheckerOutcome& outcome);
ordered_json to_json(const HypothesisOutcome& outcome);
ordered_json to_json(const PopulationSpec& spec);
ordered_json to_json(const VerificationReport& report, bool with_timing = false);
ordered_json to_json(const FamilyAudit& audit);
ordered_json to_json(const SharpnessReport& report);
ordered_json to_json(const LemmaSuiteReport& report);

// dump with 2-space indent and a trailing newline
std::string to_text(const ordered_json& j);

} // namespace seu
