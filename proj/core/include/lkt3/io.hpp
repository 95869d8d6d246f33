#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lkt3/config.hpp"
#include "lkt3/contact.hpp"
#include "lkt3/diagram.hpp"
#include "lkt3/front.hpp"
#include "lkt3/invariants.hpp"
#include "lkt3/seifert.hpp"

namespace lkt3 {

inline constexpr const char* kKnotSchema = "lkt3-knot/1";

struct KnotFile {
  LegendrianCurve curve;
  std::optional<Front> front;
};

/// Parses a knot document. A document without samples but with a front block
/// is reconstructed from the front. Throws ParseError on schema problems and
/// ValidationError when the curve fails validation.
KnotFile knot_from_json(const nlohmann::json& doc, const Tolerances& tol = {});
nlohmann::json knot_to_json(const LegendrianCurve& curve, const std::optional<Front>& front = std::nullopt);

KnotFile load_knot(const std::filesystem::path& path, const Tolerances& tol = {});
void save_knot(const std::filesystem::path& path, const LegendrianCurve& curve,
               const std::optional<Front>& front = std::nullopt);

nlohmann::json to_json(const Front& front);
Front front_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GenericityReport& g);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const SeifertCensus& c);
nlohmann::json to_json(const BennequinVerdict& b);

/// Atlas CSV: fixed columns, one row per knot; failed rows carry the error text.
std::string atlas_header();
std::string atlas_row(const Period& period, int n, const InvariantReport* report, const std::string& error);

}  // namespace lkt3
