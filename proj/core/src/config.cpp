#include "lkt3/config.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "lkt3/errors.hpp"

namespace lkt3 {

void RunConfig::validate() const {
  const double values[] = {tol.defect,          tol.embedding,        tol.condition3,
                           tol.transversality,  tol.event_merge,      tol.event_separation,
                           tol.bisection,       tol.winding_residual, tol.framing_orthogonality};
  for (double v : values) {
    if (!(v > 0.0)) throw PreconditionError("tolerances must be positive");
  }
  if (samples < 64) throw PreconditionError("sample count must be at least 64");
  if (plane_candidates < 1) throw PreconditionError("plane candidate count must be positive");
  if (threads < 0) throw PreconditionError("thread count must be non-negative");
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig cfg;
  if (auto t = j.find("tolerances"); t != j.end()) {
    auto& tol = cfg.tol;
    tol.defect = t->value("defect", tol.defect);
    tol.embedding = t->value("embedding", tol.embedding);
    tol.condition3 = t->value("condition3", tol.condition3);
    tol.transversality = t->value("transversality", tol.transversality);
    tol.event_merge = t->value("event_merge", tol.event_merge);
    tol.event_separation = t->value("event_separation", tol.event_separation);
    tol.bisection = t->value("bisection", tol.bisection);
    tol.winding_residual = t->value("winding_residual", tol.winding_residual);
    tol.framing_orthogonality = t->value("framing_orthogonality", tol.framing_orthogonality);
  }
  cfg.samples = j.value("samples", cfg.samples);
  cfg.plane_candidates = j.value("plane_candidates", cfg.plane_candidates);
  cfg.threads = j.value("threads", cfg.threads);
  cfg.output_dir = j.value("output_dir", cfg.output_dir);
  cfg.validate();
  return cfg;
}

nlohmann::json to_json(const RunConfig& cfg) {
  const auto& t = cfg.tol;
  return {
      {"tolerances",
       {{"defect", t.defect},
        {"embedding", t.embedding},
        {"condition3", t.condition3},
        {"transversality", t.transversality},
        {"event_merge", t.event_merge},
        {"event_separation", t.event_separation},
        {"bisection", t.bisection},
        {"winding_residual", t.winding_residual},
        {"framing_orthogonality", t.framing_orthogonality}}},
      {"samples", cfg.samples},
      {"plane_candidates", cfg.plane_candidates},
      {"threads", cfg.threads},
      {"output_dir", cfg.output_dir},
  };
}

RunConfig load_config(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  if (p.empty()) {
    if (const char* env = std::getenv("LKT3_CONFIG"); env != nullptr && *env != '\0') p = env;
  }
  if (p.empty()) return RunConfig{};
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open config file " + p.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config " + p.string() + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace lkt3
