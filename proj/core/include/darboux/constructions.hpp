#pragma once

#include <string>
#include <vector>

namespace darboux {

// Catalogue entry for a bundled verification document.
struct FixtureMeta {
  std::string id;      // "9.6", "9.8", "9.9", "9.10", "9.14", "quartic-d2"
  std::string family;  // known center-family note, e.g. "(CD_28)", or ""
  std::string role;    // "Construction" or "Example"
};

// Options for verify_construction / run_analysis_config.  The global checks
// always run over the document's declared field (Q for every bundled
// fixture); local invariants and focal values run at the prime recorded in
// the document, so that the stored finite-field point data stays valid.
struct VerifyOptions {
  bool focal = false;    // run the recorded-equilibrium focal-value checks
  bool tangent = false;  // run the focal Jacobian rank check (where recorded)
  int focal_order = 10;  // number of focal values s_1..s_N
};

// One executed check.  `expected` and `computed` hold canonical JSON
// encodings ("null" when the document supplies no expectation).
struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  std::string status;  // "pass" | "fail" | "inconclusive"
};

struct VerificationReport {
  std::string fixture;  // document id ("" for ad-hoc configs without one)
  std::string field;
  long prime = 0;  // prime used for local/focal blocks (0 if none)
  std::string conventions;
  std::vector<CheckResult> checks;
  std::string status;  // worst check status: fail > inconclusive > pass
  std::string json;    // canonical serialized report (sorted keys, LF, final
                       // newline; byte-identical across reruns)

  bool passed() const { return status == "pass"; }
};

// Metadata for all bundled documents, in catalogue order.
std::vector<FixtureMeta> list_fixtures();
std::vector<std::string> fixture_ids();

// Raw JSON text of a bundled document; ConfigError for unknown ids.
const std::string& fixture_document(const std::string& id);

// Run every check recorded in the bundled document.
VerificationReport verify_construction(const std::string& id,
                                       const VerifyOptions& options = {});

// Run a user-supplied document (same schema as the bundled ones; the
// expectation block is optional).  ConfigError on malformed input.
VerificationReport run_analysis_config(const std::string& json_text,
                                       const VerifyOptions& options = {});

}  // namespace darboux
