#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "seqlab/families.hpp"
#include "seqlab/sequence.hpp"
#include "seqlab/verify.hpp"
#include "seqlab/weil.hpp"

namespace seqlab {

inline constexpr const char* kReportSchema = "seqlab-report/1";

/// {"p", "label", "values": [[re, im], ...], "exact": [null | [u, v], ...]}.
/// "exact" and "exact_scale" appear only for sequences carrying a symbolic form.
nlohmann::json to_json(const Sequence& s);
Sequence sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FamilyDescriptor& fam);

/// JSON-lines dump: descriptor header line, then one sequence per line.
std::string family_to_jsonl(const FamilyDescriptor& fam, const std::vector<Sequence>& members);

nlohmann::json to_json(const VerificationReport& rep, bool include_timing = false);
nlohmann::json to_json(const Theorem2Report& rep);
nlohmann::json to_json(const RepresentationReport& rep);

nlohmann::json comparison_to_json(int p, int generator, const std::vector<ComparisonRow>& rows);
/// Header "family,size,auto_max,cross_max,ft_max,cross_mode".
std::string comparison_to_csv(const std::vector<ComparisonRow>& rows);

/// printf("%.17g") rendering used by every CSV writer.
std::string format_double(double v);

}  // namespace seqlab
