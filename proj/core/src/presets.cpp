#include "liemc/presets.hpp"

#include <string>

namespace liemc {

namespace {

FVec point(const EElement& a, const EElement& b) { return flatten({a, b}); }

AnalysisJob metabelian_job(std::string name, FieldTower tower, int depth, std::vector<FVec> l1) {
  std::vector<CentraliserLine> lines(depth - 2, CentraliserLine::y_line(tower));
  return AnalysisJob{std::move(name), std::move(tower), std::move(lines), depth, std::move(l1), std::nullopt, 0};
}

// x, alpha x, y
std::vector<FVec> shifted_x_shape(const FieldTower& t) {
  return {point(t.one(), t.zero()), point(t.alpha(), t.zero()), point(t.zero(), t.one())};
}

constexpr int kFiniteDepth = 24;
constexpr int kTranscendentalDepth = 13;
constexpr int kTranscendentalCap = 16;

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"ex4.1", "ex4.2-d2", "ex4.2-d3", "ex4.2-d4", "prob4.3", "cor3.7-trivial"};
  return names;
}

Preset preset(std::string_view name) {
  if (name == "ex4.1") {
    // x outside C_2 plus a 2-dimensional F-subspace of C_2 = Ey.
    auto t = FieldTower::finite(2, {1, 1, 1});
    auto job = metabelian_job("ex4.1", t, kFiniteDepth,
                              {point(t.one(), t.zero()), point(t.zero(), t.one()), point(t.zero(), t.alpha())});
    return Preset{std::move(job), DichotomyKind::NotJustInfinite, std::nullopt, false};
  }
  if (name == "ex4.2-d2" || name == "ex4.2-d3" || name == "ex4.2-d4") {
    static const std::vector<FVec> minpolys{{1, 1, 1}, {1, 1, 0, 1}, {1, 1, 0, 0, 1}};
    const int d = name.back() - '0';
    auto t = FieldTower::finite(2, minpolys[d - 2]);
    auto job = metabelian_job(std::string(name), t, kFiniteDepth, shifted_x_shape(t));
    return Preset{std::move(job), DichotomyKind::Constrained, d, false};
  }
  if (name == "prob4.3") {
    auto t = FieldTower::transcendental(2, kTranscendentalCap);
    auto job = metabelian_job("prob4.3", t, kTranscendentalDepth,
                              {point(t.one(), t.zero()), point(t.alpha(), t.one())});
    return Preset{std::move(job), std::nullopt, std::nullopt, true};
  }
  if (name == "cor3.7-trivial") {
    auto t = FieldTower::finite(2, {1, 1});
    auto job = metabelian_job("cor3.7-trivial", t, kFiniteDepth, {point(t.one(), t.zero()), point(t.zero(), t.one())});
    return Preset{std::move(job), DichotomyKind::Constrained, 1, false};
  }
  throw Error(Errc::UnknownPreset, "no preset named '" + std::string(name) + "'");
}

AnalysisReport reproduce(const Preset& p) {
  AnalysisReport report = analyze(p.job);
  if (p.expected_kind) {
    const bool ok = report.dichotomy && report.dichotomy->kind == *p.expected_kind;
    report.checks.push_back({"expected_classification", ok, "expected " + to_string(*p.expected_kind)});
  }
  if (p.expected_r) {
    const bool ok = report.dichotomy && report.dichotomy->r_empirical == *p.expected_r;
    report.checks.push_back({"expected_r", ok, "expected r = " + std::to_string(*p.expected_r)});
  }
  if (p.expect_free_metabelian) {
    const bool ok = report.find("free_metabelian_dims") && report.find("free_metabelian_dims")->passed;
    report.checks.push_back({"expected_free_metabelian", ok, "dim_F L_n = n - 1"});
  }
  return report;
}

}  // namespace liemc
