#include <fmt/format.h>

#include <iterator>
#include <string>
#include <vector>

#include "liemc/cli.hpp"

namespace liemc::cli {

namespace {

std::string join_from(const std::vector<int>& v, std::size_t first) {
  std::string s;
  for (std::size_t i = first; i < v.size(); ++i) {
    if (i > first) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string render_element(const EElement& e) {
  std::string s;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    const Scalar c = e.coeffs[k];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (k == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += k == 1 ? std::string("a") : fmt::format("a^{}", k);
  }
  return s.empty() ? "0" : s;
}

std::string render_line(const FieldTower& tower, const CentraliserLine& line) {
  if (tower.is_zero(line.b)) return "Ex";
  if (tower.is_zero(line.a)) return "Ey";
  if (line.b == tower.one()) return "E(x+y)";
  return fmt::format("E(x+({})y)", render_element(line.b));
}

std::string render_text(const ValidationReport& r) {
  std::string s = fmt::format("validation: {}\n", r.ok ? "ok" : "FAILED");
  for (const auto& f : r.failures) {
    if (!f.triple.empty()) {
      std::vector<std::string> labels;
      for (int o : f.triple) labels.push_back(basis_label(o));
      s += fmt::format("  {} at ({})\n", to_string(f.kind), fmt::join(labels, ", "));
    } else {
      s += fmt::format("  {} at degree {}\n", to_string(f.kind), f.degree);
    }
  }
  return s;
}

std::string render_text(const AnalysisReport& r) {
  std::string s = fmt::format("job {} ({}, N = {})\n", r.name, r.finite ? "finite" : "transcendental", r.depth);
  s += render_text(r.validation);
  if (!r.dims.empty()) s += fmt::format("dim_F L_i (i >= 1): {}\n", join_from(r.dims, 1));
  if (r.fields) {
    const auto& f = *r.fields;
    s += fmt::format("two-step field K: [K:F] = {}, r_gen = {}, {}\n", f.t, f.r_gen,
                     f.stabilized ? "stabilized" : "not stabilized within N");
  }
  if (r.k_chain) s += fmt::format("dim_K T_i (i >= 1): {}\n", join_from(r.k_chain->k_dims, 1));
  if (r.dichotomy) {
    const auto& d = *r.dichotomy;
    s += fmt::format("classification: {}", to_string(d.kind));
    if (d.kind == DichotomyKind::Constrained) {
      s += fmt::format(", r_empirical = {} (observed on [2, {}]), r_bound = {}, {} enumeration of {} elements", d.r_empirical,
                       r.depth, d.r_bound, d.sampled ? "sampled" : "full", d.elements_checked);
    } else if (d.kind == DichotomyKind::NotJustInfinite) {
      s += fmt::format(", witness at degree {}, ideal dims {}", d.witness_degree, join_from(d.ideal_dims, 0));
    }
    if (!d.reason.empty()) s += fmt::format(" ({})", d.reason);
    s += '\n';
  }
  if (r.constituents) {
    const auto& c = *r.constituents;
    if (c.applicable) {
      s += fmt::format("predicted r from centraliser pattern: {} (m_2 = {}, max m_i = {})\n", c.predicted_r, c.m2, c.max_m);
    } else {
      s += fmt::format("predicted r: not applicable ({})\n", c.reason);
    }
  }
  if (!r.free_metabelian.empty()) s += fmt::format("free metabelian dims (n >= 2): {}\n", join_from(r.free_metabelian, 2));
  s += "checks:\n";
  for (const auto& c : r.checks) {
    s += fmt::format("  {} {}", c.passed ? "PASS" : "FAIL", c.name);
    if (!c.detail.empty()) s += fmt::format(": {}", c.detail);
    s += '\n';
  }
  s += fmt::format("result: {}\n", r.passed() ? "PASS" : "FAIL");
  return s;
}

std::string render_text(const SearchResult& r, const FieldTower& tower, int depth) {
  std::string s = fmt::format("{} sequences of length {} (examined {}{})\n", r.sequences.size(), depth - 2, r.examined,
                              r.exhausted ? ", budget exhausted" : "");
  for (const auto& seq : r.sequences) {
    std::vector<std::string> parts;
    for (const auto& l : seq) parts.push_back(render_line(tower, l));
    s += fmt::format("{}\n", fmt::join(parts, " "));
  }
  return s;
}

}  // namespace liemc::cli
