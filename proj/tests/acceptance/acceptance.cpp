// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any of
// criteria 1 to 10 fails. Criterion 11 is reported but never fails the run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lkt3/errors.hpp"
#include "lkt3/generators.hpp"
#include "lkt3/invariants.hpp"
#include "lkt3/parallel.hpp"
#include "lkt3/seifert.hpp"
#include "oracle.hpp"

using namespace lkt3;
using namespace lkt3::testing;

namespace {

struct Outcome {
  bool pass = true;
  int checked = 0;
  std::vector<std::string> failures;
  std::string extra;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

template <class T>
std::string show(const std::optional<T>& v) {
  if (!v) return "n/a";
  if constexpr (std::is_same_v<T, HalfInt>)
    return v->str();
  else
    return std::to_string(*v);
}

void print(int id, const char* title, const Outcome& o, bool informational = false) {
  std::printf("criterion %d: %s  %s  [%d checks, %zu failed]%s%s\n", id, o.pass ? "PASS" : "FAIL", title, o.checked,
              o.failures.size(), informational ? " (informational)" : "",
              o.extra.empty() ? "" : ("  " + o.extra).c_str());
  const std::size_t shown = std::min<std::size_t>(o.failures.size(), 6);
  for (std::size_t i = 0; i < shown; ++i) std::printf("    - %s\n", o.failures[i].c_str());
  if (o.failures.size() > shown) std::printf("    ... %zu more\n", o.failures.size() - shown);
  std::fflush(stdout);
}

ReportOptions full_options() {
  ReportOptions o;
  o.oracle = true;
  o.seifert = true;
  o.bennequin_method = TbMethod::Oracle;
  return o;
}

std::vector<InvariantReport> reports_for(const std::vector<CorpusCurve>& corpus, const ReportOptions& opt) {
  std::vector<LegendrianCurve> curves;
  for (const auto& c : corpus) curves.push_back(c.curve);
  RunConfig cfg;
  return batch_reports(curves, opt, cfg);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto grid = quasilinear_grid();
  const auto reps = reports_for(grid, full_options());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& c = grid[i].curve;
    const auto& r = reps[i];
    const int rn = c.period.r * c.contact.n();
    o.check(r.r_direct && *r.r_direct == 0, grid[i].name + ": r_direct = " + show(r.r_direct));
    o.check(r.tb_oracle && *r.tb_oracle == rn,
            grid[i].name + ": tb_oracle = " + show(r.tb_oracle) + ", rn = " + std::to_string(rn));
    o.check(r.bennequin && r.bennequin->equality,
            grid[i].name + ": bennequin " + (r.bennequin ? r.bennequin->verdict() : std::string("unavailable")));
  }
  o.check(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << "runtime " << secs << " s";
  o.extra = os.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto suite = linear_suite();
  const auto reps = reports_for(suite, full_options());
  for (std::size_t i = 0; i < suite.size(); ++i) {
    o.check(reps[i].tb_oracle && *reps[i].tb_oracle == 0, suite[i].name + ": tb_oracle = " + show(reps[i].tb_oracle));
    o.check(reps[i].r_direct && *reps[i].r_direct == 0, suite[i].name + ": r_direct = " + show(reps[i].r_direct));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Case {
    const char* name;
    LegendrianCurve curve;
    std::optional<Tallies> tallies;  // expected front counts where pinned
    std::optional<int> tb, r;
  };
  Tallies right{};
  right.P = 3, right.N = 0, right.C = 4;
  std::vector<Case> cases = {{"unknot", r3_unknot(), std::nullopt, -1, 0},
                             {"right trefoil", r3_trefoil(1), right, 1, 0},
                             {"left trefoil", r3_trefoil(-1), std::nullopt, std::nullopt, std::nullopt}};
  for (const Case& k : cases) {
    const Diagram front = build_diagram(k.curve, Plane::R3Front);
    const Tallies t = front.count();
    const ClassicalInvariants ci = classical_r3(front);
    o.check(ci.tb == HalfInt::from_twice(2 * (t.P - t.N) - t.C), std::string(k.name) + ": tb not P - N - C/2");
    o.check(ci.r == HalfInt::from_twice(t.C_down - t.C_up), std::string(k.name) + ": r not (C_d - C_u)/2");
    if (k.tallies)
      o.check(t.P == k.tallies->P && t.N == k.tallies->N && t.C == k.tallies->C,
              std::string(k.name) + ": tallies P=" + std::to_string(t.P) + " N=" + std::to_string(t.N) +
                  " C=" + std::to_string(t.C));
    if (k.tb) o.check(ci.tb == HalfInt(*k.tb), std::string(k.name) + ": tb = " + ci.tb.str());
    if (k.r) o.check(ci.r == HalfInt(*k.r), std::string(k.name) + ": r = " + ci.r.str());
    const InvariantReport rep = compute_report(k.curve);
    o.check(rep.tb_front && rep.tb_lagrangian && *rep.tb_front == *rep.tb_lagrangian,
            std::string(k.name) + ": tb front " + show(rep.tb_front) + " vs lagrangian " + show(rep.tb_lagrangian));
    o.check(rep.r_front && rep.r_lagrangian && *rep.r_front == *rep.r_lagrangian,
            std::string(k.name) + ": r front " + show(rep.r_front) + " vs lagrangian " + show(rep.r_lagrangian));
  }
  return o;
}

// Cyclic alternation of the Y-side labels of consecutive xy cusps.
bool cusps_alternate(const std::vector<Cusp>& cusps) {
  for (std::size_t i = 0; i < cusps.size(); ++i)
    if (cusps[i].y_side == cusps[(i + 1) % cusps.size()].y_side) return false;
  return true;
}

Outcome criterion4(const std::vector<CorpusCurve>& corpus, const std::vector<InvariantReport>& reps) {
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& r = reps[i];
    const std::string& name = corpus[i].name;
    const bool all = r.r_xy && r.r_xz && r.r_direct;
    o.check(all && *r.r_xy == *r.r_xz && *r.r_xz == HalfInt(*r.r_direct),
            name + ": r_xy " + show(r.r_xy) + ", r_xz " + show(r.r_xz) + ", r_direct " + show(r.r_direct));
    try {
      const auto cusps = find_cusps(corpus[i].curve, Plane::XY);
      o.check(cusps.size() % 2 == 0, name + ": " + std::to_string(cusps.size()) + " xy cusps");
      o.check(cusps_alternate(cusps), name + ": xy cusp Y-sides do not alternate");
    } catch (const Error& e) {
      o.check(false, name + ": " + e.what());
    }
  }
  return o;
}

Outcome criterion5(const std::vector<CorpusCurve>& corpus, const std::vector<InvariantReport>& reps) {
  Outcome o;
  std::map<std::string, int> by_family;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& r = reps[i];
    const bool ok = r.tb_xy && r.tb_xz && *r.tb_xy == HalfInt(*r.tb_xz);
    if (!ok) ++by_family[to_string(corpus[i].family)];
    o.check(ok, corpus[i].name + ": tb_xy " + show(r.tb_xy) + ", tb_xz " + show(r.tb_xz));
  }
  std::ostringstream os;
  for (const auto& [f, k] : by_family) os << f << ":" << k << " ";
  o.extra = os.str();
  return o;
}

Outcome criterion6(const std::vector<CorpusCurve>& corpus) {
  Outcome o;
  RunConfig cfg;
  struct Result {
    std::vector<std::string> failures;
    int checks = 0;
  };
  const auto results = parallel_map<Result>(corpus.size(), cfg.threads, [&](std::size_t i) {
    Result res;
    auto check = [&](bool ok, const std::string& what) {
      ++res.checks;
      if (!ok) res.failures.push_back(corpus[i].name + ": " + what);
    };
    const LegendrianCurve& c = corpus[i].curve;
    try {
      const auto planes = ranked_projection_planes(c, cfg);
      check(planes.size() >= 3, std::to_string(planes.size()) + " regular planes");
      std::optional<int> chi0;
      for (std::size_t k = 0; k < std::min<std::size_t>(3, planes.size()); ++k) {
        const SeifertCensus s = seifert_census(c, planes[k], cfg);
        if (!c.period.is_zero()) {
          int sum = 0;
          for (int e : s.essential_curves) sum += e;
          check(s.essential_curves.size() % 2 == 1 && sum == 1,
                "plane " + std::to_string(k) + ": " + std::to_string(s.essential_curves.size()) +
                    " essential curves, orientation sum " + std::to_string(sum));
        }
        int oracle = 0;
        try {
          oracle = chi_oracle(s);
        } catch (const Error& e) {
          check(false, std::string("chi_oracle: ") + e.what());
          continue;
        }
        check(s.chi == oracle, "plane " + std::to_string(k) + ": chi " + std::to_string(s.chi) + " vs oracle " +
                                   std::to_string(oracle));
        if (!chi0) chi0 = s.chi;
        check(s.chi == *chi0, "plane " + std::to_string(k) + ": chi " + std::to_string(s.chi) + " vs plane 0 " +
                                  std::to_string(*chi0));
      }
    } catch (const Error& e) {
      check(false, e.what());
    }
    return res;
  });
  for (const auto& r : results) {
    o.checked += r.checks;
    for (const auto& f : r.failures) {
      o.pass = false;
      o.failures.push_back(f);
    }
  }
  QuasilinearSpec helix;
  helix.p = 0, helix.q = 0, helix.r = 1;
  const int helix_chi = seifert_census(quasilinear(helix)).chi;
  o.check(helix_chi == 0, "helix chi = " + std::to_string(helix_chi));
  for (int sign : {1, -1}) {
    const int chi = seifert_census(r3_trefoil(sign)).chi;
    o.check(chi == -1, std::string(sign > 0 ? "right" : "left") + " trefoil chi = " + std::to_string(chi));
  }
  return o;
}

Outcome criterion7(const std::vector<CorpusCurve>& corpus, const std::vector<InvariantReport>& reps) {
  Outcome o;
  std::vector<LegendrianCurve> reversed;
  for (const auto& c : corpus) reversed.push_back(reverse_orientation(c.curve));
  ReportOptions opt;
  opt.oracle = true;
  const auto rev = batch_reports(reversed, opt, RunConfig{});
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto &a = reps[i], &b = rev[i];
    const std::string& name = corpus[i].name;
    o.check(a.tb_xy && b.tb_xy && *a.tb_xy == *b.tb_xy, name + ": tb_xy " + show(a.tb_xy) + " -> " + show(b.tb_xy));
    o.check(a.tb_xz && b.tb_xz && *a.tb_xz == *b.tb_xz, name + ": tb_xz " + show(a.tb_xz) + " -> " + show(b.tb_xz));
    o.check(a.r_xy && b.r_xy && *a.r_xy == -*b.r_xy, name + ": r_xy " + show(a.r_xy) + " -> " + show(b.r_xy));
    o.check(a.r_xz && b.r_xz && *a.r_xz == -*b.r_xz, name + ": r_xz " + show(a.r_xz) + " -> " + show(b.r_xz));
    o.check(a.r_direct && b.r_direct && *a.r_direct == -*b.r_direct,
            name + ": r_direct " + show(a.r_direct) + " -> " + show(b.r_direct));
  }
  return o;
}

Outcome criterion8(const std::vector<CorpusCurve>& corpus) {
  Outcome o;
  std::set<int> constants;
  for (const auto& c : corpus) {
    const bool loop = c.curve.period.is_zero();
    const int pr = c.curve.period.r;
    if (!loop && pr == 0) continue;
    try {
      const int base = r_direct(c.curve);
      for (int m = -2; m <= 2; ++m) {
        const int tw = r_with_twisted_section(c.curve, m);
        if (loop) {
          o.check(tw == base, c.name + ": m=" + std::to_string(m) + " gives " + std::to_string(tw) + " vs " +
                                  std::to_string(base));
        } else if (m != 0) {
          const int diff = tw - base;
          const bool integral = diff % (m * pr) == 0;
          o.check(integral, c.name + ": difference " + std::to_string(diff) + " not a multiple of m r");
          if (integral) constants.insert(diff / (m * pr));
        }
      }
    } catch (const Error& e) {
      o.check(false, c.name + ": " + e.what());
    }
  }
  o.check(constants.size() == 1 && (*constants.begin() == 1 || *constants.begin() == -1),
          "observed constants: " + std::to_string(constants.size()));
  if (constants.size() == 1) o.extra = "c = " + std::to_string(*constants.begin());
  return o;
}

struct Fingerprint {
  std::optional<HalfInt> tb_xy, r_xy, r_xz;
  std::optional<int> tb_xz, r_direct, tb_oracle, chi;
  bool operator==(const Fingerprint&) const = default;
  std::string str() const {
    return "tb_xy " + show(tb_xy) + " tb_xz " + show(tb_xz) + " r_xy " + show(r_xy) + " r_xz " + show(r_xz) +
           " r_direct " + show(r_direct) + " tb_oracle " + show(tb_oracle) + " chi " + show(chi);
  }
};

Fingerprint fingerprint(const InvariantReport& r) {
  return {r.tb_xy, r.r_xy, r.r_xz, r.tb_xz, r.r_direct, r.tb_oracle, r.chi};
}

Outcome criterion9() {
  Outcome o;
  ReportOptions opt;
  opt.oracle = true;
  opt.seifert = true;
  for (const CorpusCurve& base : perturbation_bases()) {
    const Fingerprint ref = fingerprint(compute_report(base.curve, opt));
    std::vector<LegendrianCurve> family;
    for (std::uint64_t seed = 100; seed < 125; ++seed) {
      try {
        family.push_back(perturb_front(base.curve, seed, kPerturbMagnitude));
      } catch (const Error& e) {
        o.check(false, base.name + " seed " + std::to_string(seed) + ": " + e.what());
      }
    }
    const auto reps = batch_reports(family, opt, RunConfig{});
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const Fingerprint f = fingerprint(reps[k]);
      o.check(f == ref, base.name + " member " + std::to_string(k) + ": " + f.str() + " vs " + ref.str());
    }
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const CorpusCurve& c : small_corpus()) {
    const bool t3 = c.curve.ambient == Ambient::T3;
    for (Plane p : t3 ? std::vector<Plane>{Plane::XY, Plane::XZ}
                      : std::vector<Plane>{Plane::R3Front, Plane::R3Lagrangian}) {
      CrossingOptions opt;
      opt.check_cusp_separation = false;
      try {
        const std::string diff = compare_crossings(find_crossings(c.curve, p, {}, opt), brute_force_crossings(c.curve, p));
        o.check(diff.empty(), c.name + " " + to_string(p) + ": " + diff);
      } catch (const Error& e) {
        o.check(false, c.name + " " + to_string(p) + ": " + e.what());
      }
    }
  }
  return o;
}

// Relative turns of a blackboard collar against the constant framing, or
// nothing when the collar degenerates (the tangent meets the collar direction).
std::optional<int> collar_turns(const LegendrianCurve& c, const Vec3& dir) {
  try {
    const Framing x = constant_framing(c, constant_framing_vector(c.period));
    return relative_framing_rotation(c, x, projected_framing(c, dir));
  } catch (const Error&) {
    return std::nullopt;
  }
}

Outcome criterion11(const std::vector<CorpusCurve>& corpus, const std::vector<InvariantReport>& reps) {
  Outcome o;
  QuasilinearSpec helix;
  helix.p = 0, helix.q = 0, helix.r = 1;
  for (int n : {1, 2, 3}) {
    helix.n = n;
    ReportOptions opt;
    opt.oracle = true;
    const InvariantReport r = compute_report(quasilinear(helix), opt);
    o.check(r.tb_xy && *r.tb_xy == HalfInt(0) && r.tb_xz && *r.tb_xz == 0 && r.tb_oracle && *r.tb_oracle == n &&
                !r.method_disagreements.empty(),
            "helix n=" + std::to_string(n) + ": tb_xy " + show(r.tb_xy) + " tb_xz " + show(r.tb_xz) + " tb_oracle " +
                show(r.tb_oracle));
  }
  int agree = 0, disagree = 0, undefined = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const LegendrianCurve& c = corpus[i].curve;
    if (c.period.is_zero()) continue;
    std::optional<int> turns = collar_turns(c, {0.0, 0.0, 1.0});
    if (!turns) turns = collar_turns(c, {0.0, 1.0, 0.0});
    if (!turns) {
      ++undefined;
      continue;
    }
    const bool gap = *turns != 0;
    const bool flagged = !reps[i].method_disagreements.empty();
    (gap == flagged ? agree : disagree)++;
  }
  std::ostringstream os;
  os << "collar vs constant framing: biconditional holds on " << agree << ", fails on " << disagree
     << ", collar undefined on " << undefined;
  o.extra = os.str();
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  auto run = [&](int id, const char* title, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.check(false, std::string("aborted: ") + e.what());
    }
    print(id, title, o);
    ok = ok && o.pass;
  };

  run(1, "quasilinear identity suite", criterion1);
  run(2, "r = 0 linear suite", criterion2);
  run(3, "classical R^3 suite", criterion3);

  std::vector<CorpusCurve> corpus;
  std::vector<InvariantReport> reps;
  try {
    corpus = standard_corpus();
    reps = reports_for(corpus, full_options());
    std::printf("corpus: %zu curves\n", corpus.size());
  } catch (const std::exception& e) {
    std::printf("corpus construction failed: %s\n", e.what());
    return 1;
  }
  run(4, "cross-method rotation agreement", [&] { return criterion4(corpus, reps); });
  run(5, "cross-projection tb agreement", [&] { return criterion5(corpus, reps); });
  run(6, "Seifert suite", [&] { return criterion6(corpus); });
  run(7, "orientation reversal symmetry", [&] { return criterion7(corpus, reps); });
  run(8, "section-twist suite", [&] { return criterion8(corpus); });
  run(9, "perturbation stability", criterion9);
  run(10, "crossing oracle equivalence", criterion10);

  Outcome o11;
  try {
    o11 = criterion11(corpus, reps);
  } catch (const std::exception& e) {
    o11.check(false, std::string("aborted: ") + e.what());
  }
  print(11, "helix framing tension", o11, true);

  return ok ? 0 : 1;
}
