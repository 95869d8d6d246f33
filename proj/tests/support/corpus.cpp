#include "corpus.hpp"

#include <numeric>

#include "lkt3/generators.hpp"

namespace lkt3::testing {

const char* to_string(Family f) {
  switch (f) {
    case Family::Quasilinear: return "quasilinear";
    case Family::Linear: return "linear";
    case Family::Contractible: return "contractible";
    case Family::Perturbed: return "perturbed";
  }
  return "?";
}

namespace {

std::string period_name(const char* tag, int p, int q, int r, int n) {
  return std::string(tag) + "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
         ")/n" + std::to_string(n);
}

CorpusCurve ql(int p, int q, int r, int n, int samples) {
  QuasilinearSpec s;
  s.p = p, s.q = q, s.r = r, s.n = n, s.samples = samples;
  return {period_name(r == 0 ? "linear" : "ql", p, q, r, n), r == 0 ? Family::Linear : Family::Quasilinear,
          quasilinear(s)};
}

}  // namespace

std::vector<CorpusCurve> quasilinear_grid(int samples) {
  std::vector<CorpusCurve> out;
  for (int p : {0, 1})
    for (int q : {0, 1})
      for (int r : {-2, -1, 1, 2})
        for (int n : {1, 2, 3}) out.push_back(ql(p, q, r, n, samples));
  return out;
}

std::vector<CorpusCurve> linear_suite(int samples) {
  std::vector<CorpusCurve> out;
  for (int p : {1, 2})
    for (int q : {1, 2})
      if (std::gcd(p, q) == 1)
        for (int n : {1, 2, 3}) out.push_back(ql(p, q, 0, n, samples));
  return out;
}

std::vector<CorpusCurve> contractible_suite(int samples) {
  std::vector<CorpusCurve> out;
  for (double scale : {0.3, 0.6})
    for (int n : {1, 2})
      for (double rot : {0.0, 0.7, 1.4, 2.0}) {
        std::string name = "loop(s=" + std::to_string(scale).substr(0, 3) + ",rot=" +
                           std::to_string(rot).substr(0, 3) + ")/n" + std::to_string(n);
        out.push_back({name, Family::Contractible, contractible_loop(scale, n, rot, samples)});
      }
  return out;
}

std::vector<CorpusCurve> perturbation_bases(int samples) {
  std::vector<CorpusCurve> out;
  out.push_back(ql(0, 0, 1, 1, samples));
  out.push_back(ql(1, 0, 1, 2, samples));
  out.push_back(ql(1, 1, -2, 1, samples));
  out.push_back(ql(0, 1, 2, 3, samples));
  out.push_back(ql(1, 2, 0, 1, samples));
  out.push_back({"loop(s=0.4,rot=0.0)/n1", Family::Contractible, contractible_loop(0.4, 1, 0.0, samples)});
  return out;
}

std::vector<CorpusCurve> standard_corpus() {
  std::vector<CorpusCurve> out = quasilinear_grid();
  for (auto& c : linear_suite())
    if (c.curve.contact.n() <= 2) out.push_back(std::move(c));
  for (auto& c : contractible_suite()) out.push_back(std::move(c));
  for (const CorpusCurve& base : perturbation_bases())
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      out.push_back({base.name + "+seed" + std::to_string(seed), Family::Perturbed,
                     perturb_front(base.curve, seed, kPerturbMagnitude)});
  return out;
}

std::vector<CorpusCurve> small_corpus() {
  constexpr int kSmall = 64;
  std::vector<CorpusCurve> out = quasilinear_grid(kSmall);
  for (auto& c : linear_suite(kSmall)) out.push_back(std::move(c));
  for (auto& c : contractible_suite(kSmall)) out.push_back(std::move(c));
  out.push_back({"r3_unknot", Family::Contractible, r3_unknot(kSmall)});
  out.push_back({"r3_trefoil+", Family::Contractible, r3_trefoil(1, kSmall)});
  out.push_back({"r3_trefoil-", Family::Contractible, r3_trefoil(-1, kSmall)});
  return out;
}

}  // namespace lkt3::testing
