// lkt3: command line front end for Legendrian knots in T^3 and R^3.
//
// Exit codes: 0 ok, 1 validation failure, 2 genericity / projection failure,
// 3 parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lkt3/errors.hpp"
#include "lkt3/generators.hpp"
#include "lkt3/io.hpp"
#include "lkt3/parallel.hpp"

using namespace lkt3;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kValidation = 1, kGenericity = 2, kParse = 3 };

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParse;
  if (dynamic_cast<const GenericityError*>(&e) || dynamic_cast<const WindingError*>(&e)) return kGenericity;
  return kValidation;
}

void report_error(const std::exception& e) {
  std::cerr << "error: " << e.what();
  if (auto* v = dynamic_cast<const ValidationError*>(&e)) {
    if (v->index()) std::cerr << " (sample " << *v->index() << ", measured " << v->measured() << ")";
  } else if (auto* g = dynamic_cast<const GenericityError*>(&e)) {
    if (g->parameter()) std::cerr << " (t = " << *g->parameter() << ")";
  }
  std::cerr << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// "1,2,5" or "a:b" (inclusive) or a mix: "0:2,5".
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        const int a = std::stoi(item.substr(0, colon));
        const int b = std::stoi(item.substr(colon + 1));
        for (int v = a; v <= b; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad integer list '" + s + "'");
    }
  }
  return out;
}

std::string text_report(const InvariantReport& r) {
  std::ostringstream os;
  const json j = to_json(r);
  for (const char* key : {"ambient", "period", "n", "tb_xy", "tb_xz", "r_xy", "r_xz", "r_direct", "tb_oracle",
                          "tb_front", "r_front", "tb_lagrangian", "r_lagrangian", "chi"}) {
    if (j.contains(key) && !j[key].is_null()) os << key << ": " << j[key].dump() << '\n';
  }
  if (r.bennequin)
    os << "bennequin (" << r.bennequin_method << "): " << r.bennequin->lhs.str() << " <= " << r.bennequin->rhs.str()
       << "  " << r.bennequin->verdict() << '\n';
  for (const auto& d : r.method_disagreements) os << "disagreement: " << d << '\n';
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  os << "generic: " << (r.genericity.ok() ? "yes" : "no") << '\n';
  return os.str();
}

struct Globals {
  std::string config;
  RunConfig cfg;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian knot invariants in (T^3, xi_n) and (R^3, xi_std)"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "JSON run configuration (default: $LKT3_CONFIG)");

  // validate
  auto* validate = app.add_subcommand("validate", "Load and validate a knot file; print its genericity report");
  std::string validate_path;
  validate->add_option("path", validate_path, "knot file")->required();

  // invariants
  auto* inv = app.add_subcommand("invariants", "Compute tb and r by every applicable method");
  std::string inv_path, inv_projection = "both";
  bool inv_oracle = false, inv_json = false, inv_seifert = false;
  inv->add_option("path", inv_path, "knot file")->required();
  inv->add_option("--projection", inv_projection, "xy, xz or both")
      ->check(CLI::IsMember({"xy", "xz", "both"}))
      ->capture_default_str();
  inv->add_flag("--oracle", inv_oracle, "add r_direct and, for quasilinear inputs, the framing oracle tb");
  inv->add_flag("--seifert", inv_seifert, "add chi and the Bennequin-type check");
  inv->add_flag("--json", inv_json, "print the report as JSON");

  // seifert
  auto* sei = app.add_subcommand("seifert", "Seifert circle census and Euler characteristic");
  std::string sei_path;
  std::vector<double> sei_normal;
  bool sei_json = false;
  sei->add_option("path", sei_path, "knot file")->required();
  sei->add_option("--normal", sei_normal, "projection normal x y z (default: best candidate)")->expected(3);
  sei->add_flag("--json", sei_json, "print the census as JSON");

  // bennequin
  auto* ben = app.add_subcommand("bennequin", "Evaluate tb + r <= -chi + r_period * n");
  std::string ben_path, ben_method = "xy";
  ben->add_option("path", ben_path, "knot file")->required();
  ben->add_option("--method", ben_method, "tb method: xy, xz or oracle")
      ->check(CLI::IsMember({"xy", "xz", "oracle"}))
      ->capture_default_str();

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated knot file");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "output file (default: stdout)");
  QuasilinearSpec qs;
  auto* gq = gen->add_subcommand("quasilinear", "(p,q,r)-periodic knot with monotone z");
  gq->add_option("--p", qs.p)->capture_default_str();
  gq->add_option("--q", qs.q)->capture_default_str();
  gq->add_option("--r", qs.r)->capture_default_str();
  gq->add_option("--n", qs.n)->capture_default_str();
  gq->add_option("--smoothing", qs.smoothing)->capture_default_str();
  gq->add_option("--samples", qs.samples)->capture_default_str();
  int unknot_samples = 512;
  auto* gu = gen->add_subcommand("r3-unknot", "two-cusp unknot front in R^3");
  gu->add_option("--samples", unknot_samples)->capture_default_str();
  int tref_sign = 1, tref_samples = 512;
  auto* gt = gen->add_subcommand("r3-trefoil", "right (+1) or left (-1) trefoil front in R^3");
  gt->add_option("--sign", tref_sign)->capture_default_str();
  gt->add_option("--samples", tref_samples)->capture_default_str();
  double loop_scale = 0.1, loop_rotation = 0.0;
  int loop_n = 1, loop_samples = 512;
  auto* gc = gen->add_subcommand("contractible", "two-cusp contractible loop in T^3");
  gc->add_option("--scale", loop_scale)->capture_default_str();
  gc->add_option("--n", loop_n)->capture_default_str();
  gc->add_option("--rotation", loop_rotation)->capture_default_str();
  gc->add_option("--samples", loop_samples)->capture_default_str();
  std::string pert_input;
  std::uint64_t pert_seed = 0;
  double pert_magnitude = 1e-3;
  auto* gp = gen->add_subcommand("perturb", "random small front perturbation of a T^3 knot");
  gp->add_option("input", pert_input, "knot file")->required();
  gp->add_option("--seed", pert_seed)->capture_default_str();
  gp->add_option("--magnitude", pert_magnitude)->capture_default_str();

  // render
  auto* ren = app.add_subcommand("render", "SVG drawing of a projection");
  std::string ren_path, ren_plane = "xy", ren_out;
  ren->add_option("path", ren_path, "knot file")->required();
  ren->add_option("--plane", ren_plane, "xy, xz, front or lagrangian")
      ->check(CLI::IsMember({"xy", "xz", "front", "lagrangian"}))
      ->capture_default_str();
  ren->add_option("-o,--output", ren_out, "output SVG (default: stdout)");

  // atlas
  auto* atl = app.add_subcommand("atlas", "CSV of invariants over a range of quasilinear knots");
  std::string atl_p = "0", atl_q = "0", atl_r = "1", atl_n = "1", atl_out;
  int atl_family = 0;
  double atl_magnitude = 1e-3;
  atl->add_option("--p", atl_p, "list or range, e.g. 0:1")->capture_default_str();
  atl->add_option("--q", atl_q)->capture_default_str();
  atl->add_option("--r", atl_r)->capture_default_str();
  atl->add_option("--n", atl_n)->capture_default_str();
  atl->add_option("--perturb", atl_family, "perturbed copies per knot")->capture_default_str();
  atl->add_option("--magnitude", atl_magnitude, "perturbation magnitude")->capture_default_str();
  atl->add_option("-o,--output", atl_out, "output CSV (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    g.cfg = load_config(g.config);
    const Tolerances& tol = g.cfg.tol;

    if (*validate) {
      const KnotFile kf = load_knot(validate_path, tol);
      const GenericityReport rep = check_genericity(kf.curve, tol);
      std::cout << to_json(rep).dump(2) << '\n';
      if (!rep.ok()) {
        std::cerr << "not generic";
        if (rep.condition3_t) std::cerr << ": 2nz is integral at a vertical tangent, t = " << *rep.condition3_t;
        std::cerr << '\n';
        return kGenericity;
      }
      return kOk;
    }

    if (*inv) {
      const KnotFile kf = load_knot(inv_path, tol);
      ReportOptions opt;
      opt.xy = inv_projection != "xz";
      opt.xz = inv_projection != "xy";
      opt.oracle = inv_oracle;
      opt.seifert = inv_seifert;
      const InvariantReport rep = compute_report(kf.curve, opt, tol);
      std::cout << (inv_json ? to_json(rep).dump(2) + "\n" : text_report(rep));
      return rep.genericity.ok() ? kOk : kGenericity;
    }

    if (*sei) {
      const KnotFile kf = load_knot(sei_path, tol);
      const SeifertCensus cs = sei_normal.empty()
                                   ? seifert_census(kf.curve, g.cfg)
                                   : seifert_census(kf.curve, Vec3{sei_normal[0], sei_normal[1], sei_normal[2]}, g.cfg);
      const int oracle = chi_oracle(cs);
      if (sei_json) {
        json j = to_json(cs);
        j["chi_oracle"] = oracle;
        j["oracle_agrees"] = oracle == cs.chi;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "plane normal: (" << cs.plane_normal.x << ", " << cs.plane_normal.y << ", " << cs.plane_normal.z
                  << ")\ncrossings: " << cs.crossings << "\nseifert circles: " << cs.seifert_circles
                  << "\ncompact circles: " << cs.compact_circles
                  << "\nessential curves: " << json(cs.essential_curves).dump() << "\nchi: " << cs.chi
                  << "\nchi oracle: " << oracle << (oracle == cs.chi ? " (agrees)" : " (DISAGREES)") << '\n';
      }
      return kOk;
    }

    if (*ben) {
      const KnotFile kf = load_knot(ben_path, tol);
      ReportOptions opt;
      opt.oracle = true;
      opt.seifert = true;
      opt.bennequin_method = tb_method_from_string(ben_method);
      const InvariantReport rep = compute_report(kf.curve, opt, tol);
      if (!rep.bennequin) {
        for (const auto& n : rep.notes) std::cerr << "note: " << n << '\n';
        return kGenericity;
      }
      json j = to_json(*rep.bennequin);
      j["method"] = rep.bennequin_method;
      std::cout << j.dump(2) << '\n';
      return kOk;
    }

    if (*gen) {
      LegendrianCurve c;
      if (*gq) {
        c = quasilinear(qs);
      } else if (*gu) {
        c = r3_unknot(unknot_samples);
      } else if (*gt) {
        c = r3_trefoil(tref_sign, tref_samples);
      } else if (*gc) {
        c = contractible_loop(loop_scale, loop_n, loop_rotation, loop_samples);
      } else {
        c = perturb_front(load_knot(pert_input, tol).curve, pert_seed, pert_magnitude, tol);
      }
      write_text(gen_out, knot_to_json(c).dump(1) + "\n");
      return kOk;
    }

    if (*ren) {
      const KnotFile kf = load_knot(ren_path, tol);
      const Diagram d = build_diagram(kf.curve, plane_from_string(ren_plane), tol);
      write_text(ren_out, render_svg(d));
      return kOk;
    }

    if (*atl) {
      struct Job {
        Period period;
        int n;
        int member;  // 0 = base knot, k > 0 = k-th perturbation
      };
      std::vector<Job> jobs;
      for (int p : parse_int_list(atl_p))
        for (int q : parse_int_list(atl_q))
          for (int r : parse_int_list(atl_r))
            for (int n : parse_int_list(atl_n))
              for (int k = 0; k <= atl_family; ++k) jobs.push_back({{p, q, r}, n, k});

      ReportOptions opt;
      opt.oracle = true;
      opt.seifert = true;
      opt.bennequin_method = TbMethod::Oracle;
      const auto rows = parallel_map<std::string>(jobs.size(), g.cfg.threads, [&](std::size_t i) {
        const Job& jb = jobs[i];
        try {
          QuasilinearSpec s;
          s.p = jb.period.p, s.q = jb.period.q, s.r = jb.period.r, s.n = jb.n;
          s.samples = g.cfg.samples;
          LegendrianCurve c = quasilinear(s);
          if (jb.member > 0) c = perturb_front(c, std::uint64_t(jb.member), atl_magnitude, tol);
          const InvariantReport rep = compute_report(c, opt, tol);
          std::string err;
          for (const auto& note : rep.notes) err += (err.empty() ? "" : "; ") + note;
          return atlas_row(jb.period, jb.n, &rep, err);
        } catch (const std::exception& e) {
          return atlas_row(jb.period, jb.n, nullptr, e.what());
        }
      });
      std::string csv = atlas_header() + "\n";
      for (const auto& row : rows) csv += row + "\n";
      write_text(atl_out, csv);
      return kOk;
    }
  } catch (const std::exception& e) {
    report_error(e);
    return exit_code(e);
  }
  return kOk;
}
