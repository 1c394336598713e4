#ifndef RAMSEY_CERTIFICATE_HPP
#define RAMSEY_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Packaged two-sided claim for one (j, n): the witnessed lower bound and the
// exhausted (or trusted) upper bound, self-contained enough to re-validate
// from nothing but the file.
struct Certificate {
    int j = 0;
    int n = 0;
    RamseyValue claimed;
    Regime regime;
    bool contested = false;
    std::optional<Coloring> lower_bound;  // absent when the value is 1
    GoodnessReport lower_report;
    UpperBoundResult::Status upper_method = UpperBoundResult::Status::kUnverified;
    std::optional<ExhaustionCertificate> exhaustion;
    std::string upper_note;
    SearchOptions options;
};

// Runs both directions: the construction (verified) and the search at t = m.
// Throws for j = 2 (no finite value to certify).
Certificate build_certificate(int j, int n, const SearchOptions& options);

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json exhaustion_to_json(const ExhaustionCertificate& record);
nlohmann::json search_options_to_json(const SearchOptions& options);

// Re-validation from the serialized form alone: recompute the formula cell,
// rebuild the embedded coloring, re-run the detectors, re-check every
// structural invariant. Returns the list of violations (empty = valid).
std::vector<std::string> validate_certificate(const nlohmann::json& j);

}  // namespace ramsey

#endif
