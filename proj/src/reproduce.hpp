#pragma once

#include <string>
#include <vector>

#include "lcp.hpp"

namespace ringlcp::repro {

using rmod::Budget;

/// One evaluated claim of a bundled worked example at one characteristic.
/// `status` is "confirmed", "refuted", or — when the same claim failed here
/// but held at another q in the sweep — "confirmed-at-other-q".
struct ClaimRow {
  std::string example;  // example identifier, e.g. "4.1"
  std::string claim;    // the claim under test, self-contained
  int q = 0;
  std::string verdict;  // what the evaluation actually found
  std::string status;
  std::string witness;  // rendered witness/certificate, may be empty
};

struct ReproReport {
  std::vector<ClaimRow> rows;
};

/// Known example identifiers, in report order.
const std::vector<std::string>& example_ids();

/// Evaluates the requested examples ("all" handled by the caller passing
/// every id). `q_sweep` applies to the characteristic-swept example "5.5";
/// the other examples run at their fixed characteristics. Rows are emitted
/// in a deterministic order; with a fixed budget the report is reproducible
/// byte for byte.
ReproReport run(const std::vector<std::string>& examples,
                const std::vector<int>& q_sweep, const Budget& budget);

std::string report_json(const ReproReport& r);
std::string report_text(const ReproReport& r);

}  // namespace ringlcp::repro
