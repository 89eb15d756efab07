#pragma once

#include "syzmirror/moment_fibration.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace syzmirror {

enum class Check { kLemma, kScaling, kSyzMin, kBipolar, kReflexive };

Check parse_check(std::string_view text);
const char* to_string(Check c);

struct VerifyParams {
  int n = 2;
  int alpha = 3;
  Metric metric = Metric::kFubiniStudy;
  int resolution = 40;
};

struct VerificationReport {
  Check check = Check::kScaling;
  VerifyParams params;
  bool pass = false;
  // Always populated, pass or fail.
  nlohmann::ordered_json witness;

  // Key order: check, parameters, status, witness. Floats carry 12
  // significant digits.
  nlohmann::ordered_json to_json() const;
};

// Exact checks accept 1 <= n <= 8; grid checks (lemma, syz-min) accept
// 2 <= n <= 4 and n <= resolution <= 400. Throws UsageError outside these
// ranges.
VerificationReport run_check(Check check, const VerifyParams& params);

// Interior lattice points of the moment simplex Delta(n, alpha), counted by
// walking every integer point of the bounding box. Throws UsageError past
// 10^6 candidates.
long long enumerate_interior_lattice_points(int n, int alpha);

}  // namespace syzmirror
