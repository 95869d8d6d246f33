#include "lkt3/io.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>

#include "lkt3/errors.hpp"

namespace lkt3 {

using nlohmann::json;

namespace {

json half(HalfInt h) {
  if (h.is_integer()) return h.twice() / 2;
  return h.value();
}

template <class T, class F>
void put(json& j, const char* key, const std::optional<T>& v, F&& conv) {
  j[key] = v ? conv(*v) : json(nullptr);
}

json tallies(const Tallies& t) {
  return {{"P", t.P},           {"N", t.N},         {"C", t.C},      {"C_plus", t.C_plus},
          {"C_minus", t.C_minus}, {"C_up", t.C_up}, {"C_down", t.C_down}};
}

json vec(const Vec2& v) { return json::array({v.x, v.y}); }
json vec(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, HalfInt>)
    return v->str();
  else
    return std::to_string(*v);
}

}  // namespace

json to_json(const Front& f) {
  json pts = json::array();
  for (const Vec2& p : f.points) pts.push_back(vec(p));
  return {{"points", pts},       {"cusps", f.cusps},       {"period_x", f.period_x},
          {"period_y", f.period_y}, {"z0", f.z0},           {"period_z", f.period_z},
          {"initial_branch", f.initial_branch}};
}

Front front_from_json(const json& j) {
  Front f;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("front points must be [x, y] pairs");
    f.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  f.cusps = j.value("cusps", std::vector<std::size_t>{});
  f.period_x = j.value("period_x", 0);
  f.period_y = j.value("period_y", 0);
  f.z0 = j.value("z0", 0.0);
  f.period_z = j.value("period_z", 0);
  f.initial_branch = j.value("initial_branch", 0);
  return f;
}

KnotFile knot_from_json(const json& doc, const Tolerances& tol) {
  KnotFile out;
  LegendrianCurve& c = out.curve;
  try {
    if (!doc.is_object()) throw ParseError("knot document must be a JSON object");
    if (doc.at("schema").get<std::string>() != kKnotSchema)
      throw ParseError("unsupported schema '" + doc.at("schema").get<std::string>() + "'");
    const std::string amb = doc.at("ambient").get<std::string>();
    if (amb == "T3")
      c.ambient = Ambient::T3;
    else if (amb == "R3")
      c.ambient = Ambient::R3;
    else
      throw ParseError("ambient must be T3 or R3");
    if (c.ambient == Ambient::T3) {
      const int n = doc.at("n").get<int>();
      if (n < 1) throw ParseError("n must be a positive integer");
      c.contact = ContactTorus(n);
    }
    const auto& per = doc.at("period");
    if (!per.is_array() || per.size() != 3) throw ParseError("period must be [p, q, r]");
    c.period = {per[0].get<int>(), per[1].get<int>(), per[2].get<int>()};
    c.orientation = doc.value("orientation", 1);
    if (c.orientation != 1 && c.orientation != -1) throw ParseError("orientation must be 1 or -1");
    if (doc.contains("front")) out.front = front_from_json(doc.at("front"));
    if (doc.contains("samples")) {
      for (const auto& s : doc.at("samples")) {
        if (!s.is_array() || s.size() != 3) throw ParseError("samples must be [x, y, z] triples");
        c.samples.push_back({s[0].get<double>(), s[1].get<double>(), s[2].get<double>()});
      }
    } else if (out.front) {
      if (c.ambient != Ambient::T3) throw ParseError("front reconstruction needs ambient T3");
      const int orientation = c.orientation;
      c = reconstruct_from_front(*out.front, c.contact);
      c.orientation = orientation;
    } else {
      throw ParseError("document has neither samples nor a front");
    }
    if (doc.contains("meta")) {
      const auto& m = doc.at("meta");
      c.meta.generator = m.value("generator", std::string{});
      if (m.contains("params")) c.meta.params = m.at("params").get<std::map<std::string, double>>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("knot document: ") + e.what());
  }
  validate_curve(c, tol);
  return out;
}

json knot_to_json(const LegendrianCurve& c, const std::optional<Front>& front) {
  json doc;
  doc["schema"] = kKnotSchema;
  doc["ambient"] = to_string(c.ambient);
  if (c.ambient == Ambient::T3) doc["n"] = c.contact.n();
  doc["period"] = {c.period.p, c.period.q, c.period.r};
  doc["orientation"] = c.orientation;
  json s = json::array();
  for (const Vec3& v : c.samples) s.push_back(vec(v));
  doc["samples"] = std::move(s);
  if (front) doc["front"] = to_json(*front);
  if (!c.meta.empty()) doc["meta"] = {{"generator", c.meta.generator}, {"params", c.meta.params}};
  return doc;
}

KnotFile load_knot(const std::filesystem::path& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return knot_from_json(doc, tol);
}

void save_knot(const std::filesystem::path& path, const LegendrianCurve& curve, const std::optional<Front>& front) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << knot_to_json(curve, front).dump(1) << '\n';
}

json to_json(const GenericityReport& g) {
  json j{{"curvature_ok", g.curvature_ok},
         {"double_points_transverse", g.double_points_transverse},
         {"cusps_semicubical", g.cusps_semicubical},
         {"condition3_ok", g.condition3_ok},
         {"worst_margin", g.worst_margin},
         {"ok", g.ok()},
         {"notes", g.notes}};
  put(j, "condition3_t", g.condition3_t, [](double t) { return json(t); });
  return j;
}

json to_json(const Diagram& d) {
  json j;
  j["plane"] = to_string(d.plane);
  j["ambient"] = to_string(d.ambient);
  j["n"] = d.n;
  j["orientation"] = d.orientation;
  j["tallies"] = tallies(d.tallies);
  j["condition3_ok"] = d.condition3_ok;
  put(j, "condition3_violation", d.condition3_violation, [](double t) { return json(t); });
  put(j, "tangent_winding", d.tangent_winding, [](int w) { return json(w); });
  json cr = json::array();
  for (const Crossing& c : d.crossings)
    cr.push_back({{"t_over", c.t_over},
                  {"t_under", c.t_under},
                  {"point", vec(c.point)},
                  {"sign", c.sign},
                  {"sin_angle", c.sin_angle},
                  {"height_gap", c.height_gap}});
  j["crossings"] = std::move(cr);
  json cu = json::array();
  for (const Cusp& c : d.cusps) {
    json e{{"t", c.t}, {"point", vec(c.point)}};
    if (d.plane == Plane::R3Front)
      e["updown"] = c.updown == CuspKind::Up ? "up" : "down";
    else
      e.update({{"sign", c.sign}, {"y_side", c.y_side}});
    cu.push_back(std::move(e));
  }
  j["cusps"] = std::move(cu);
  json ve = json::array();
  for (const VerticalEvent& v : d.vertical_events)
    ve.push_back({{"t", v.t}, {"a", v.a}, {"b", v.b}, {"two_nz", v.two_nz}});
  j["vertical_events"] = std::move(ve);
  return j;
}

json to_json(const BennequinVerdict& b) {
  return {{"lhs", half(b.lhs)},
          {"rhs", half(b.rhs)},
          {"holds", b.holds},
          {"equality", b.equality},
          {"verdict", b.verdict()}};
}

json to_json(const InvariantReport& r) {
  json j;
  j["ambient"] = to_string(r.ambient);
  j["period"] = {r.period.p, r.period.q, r.period.r};
  j["n"] = r.n;
  auto h = [](HalfInt v) { return half(v); };
  auto i = [](int v) { return json(v); };
  put(j, "tb_xy", r.tb_xy, h);
  put(j, "tb_xz", r.tb_xz, i);
  put(j, "r_xy", r.r_xy, h);
  put(j, "r_xz", r.r_xz, h);
  put(j, "r_direct", r.r_direct, i);
  put(j, "tb_oracle", r.tb_oracle, i);
  if (r.ambient == Ambient::R3) {
    put(j, "tb_front", r.tb_front, h);
    put(j, "r_front", r.r_front, h);
    put(j, "tb_lagrangian", r.tb_lagrangian, h);
    put(j, "r_lagrangian", r.r_lagrangian, h);
  }
  json t = json::object();
  if (r.xy_tallies) t["xy"] = tallies(*r.xy_tallies);
  if (r.xz_tallies) t["xz"] = tallies(*r.xz_tallies);
  if (r.front_tallies) t["front"] = tallies(*r.front_tallies);
  if (r.lagrangian_tallies) t["lagrangian"] = tallies(*r.lagrangian_tallies);
  j["tallies"] = std::move(t);
  put(j, "chi", r.chi, i);
  put(j, "bennequin", r.bennequin, [](const BennequinVerdict& b) { return to_json(b); });
  if (r.bennequin) j["bennequin_method"] = r.bennequin_method;
  j["method_disagreements"] = r.method_disagreements;
  j["notes"] = r.notes;
  j["genericity"] = to_json(r.genericity);
  return j;
}

json to_json(const SeifertCensus& c) {
  json circles = json::array();
  for (const SeifertCircle& s : c.circles)
    circles.push_back({{"band_ends", s.band_ends}, {"winding", s.winding}, {"mean_w", s.mean_w}, {"arcs", s.arcs}});
  return {{"plane_normal", vec(c.plane_normal)},
          {"periodic", c.periodic},
          {"compact_circles", c.compact_circles},
          {"essential_curves", c.essential_curves},
          {"crossings", c.crossings},
          {"seifert_circles", c.seifert_circles},
          {"chi", c.chi},
          {"k", c.k},
          {"margin", c.margin},
          {"circles", std::move(circles)}};
}

std::string atlas_header() {
  return "p,q,r,n,tb_xy,tb_xz,r_xy,r_xz,r_direct,chi,bennequin_lhs,bennequin_rhs,verdict,error";
}

std::string atlas_row(const Period& period, int n, const InvariantReport* r, const std::string& error) {
  std::ostringstream os;
  os << period.p << ',' << period.q << ',' << period.r << ',' << n << ',';
  if (r) {
    os << opt_str(r->tb_xy) << ',' << opt_str(r->tb_xz) << ',' << opt_str(r->r_xy) << ',' << opt_str(r->r_xz) << ','
       << opt_str(r->r_direct) << ',' << opt_str(r->chi) << ',';
    if (r->bennequin)
      os << r->bennequin->lhs.str() << ',' << r->bennequin->rhs.str() << ',' << r->bennequin->verdict();
    else
      os << ",,";
  } else {
    os << ",,,,,,,,";
  }
  os << ',' << csv_field(error);
  return os.str();
}

}  // namespace lkt3
