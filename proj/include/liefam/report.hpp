#ifndef LIEFAM_REPORT_HPP
#define LIEFAM_REPORT_HPP

// Verification runs over a point sample and single-fiber reports. Output
// layout is described in docs/report_schema.md.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liefam/document.hpp"

namespace liefam {

inline constexpr int kReportSchemaVersion = 1;
const char* library_version();

enum class VerifyMode { Algebra, Group, All };
VerifyMode parse_mode(const std::string& text);  // ParseError
const char* to_string(VerifyMode m);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::All;
  std::uint64_t seed = 1;
  std::optional<std::vector<ProjPoint>> points;  // overrides the document and the default sample
  std::size_t random_points = 4;                 // added to the default sample only
  std::size_t group_samples = 50;
};

struct VerifyResult {
  nlohmann::ordered_json report;
  bool passed = false;
  std::vector<std::string> failures;  // ids of failed checks
};

// Theorem-level failures are listed in the report; only malformed input or
// an unusable configuration throws.
VerifyResult verify(const InputDocument& doc, const VerifyOptions& options);

// Sorted, duplicate-free sample: explicit points, else the document's, else
// default_sample() plus seeded random real points.
std::vector<ProjPoint> sample_points(const InputDocument& doc, const VerifyOptions& options);

nlohmann::ordered_json fiber_report(const InputDocument& doc, const ProjPoint& p);

nlohmann::ordered_json to_json(const Fingerprint& f);

}  // namespace liefam

#endif
