#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace lkt3 {

/// Numeric tolerances shared by validation and event extraction.
struct Tolerances {
  double defect = 1e-4;           // max |omega(a')| / |a'|
  double embedding = 1e-4;        // min quotient distance between non-adjacent samples
  double condition3 = 1e-6;       // min distance of 2nz from an integer at vertical tangents
  double transversality = 1e-3;   // min |sin| of a crossing angle
  double event_merge = 1e-6;      // parameter distance below which events are merged
  double event_separation = 1e-6; // min parameter distance between a crossing and a cusp
  double bisection = 1e-9;        // parameter accuracy of refined events
  double winding_residual = 0.1;  // max turns away from an integer before a winding is rejected
  double framing_orthogonality = 1e-3;
};

struct RunConfig {
  Tolerances tol;
  int samples = 512;
  int plane_candidates = 16;
  int threads = 0;  // 0 = hardware concurrency
  std::string output_dir = ".";

  /// Throws PreconditionError if a field is out of range.
  void validate() const;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& cfg);

/// Reads a config file; the path defaults to $LKT3_CONFIG when empty.
/// Returns defaults when neither is set.
RunConfig load_config(const std::filesystem::path& path = {});

}  // namespace lkt3
