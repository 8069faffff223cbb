#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liemc/analyzer.hpp"
#include "liemc/maxclass.hpp"

namespace liemc {

/// Everything needed to run an analysis: an algebra given by its centraliser
/// lines, a generating space L_1 (rows of flattened (x, y)-coordinates), the
/// truncation depth, and the sampling seed.
struct AnalysisJob {
  std::string name = "job";
  FieldTower tower;
  std::vector<CentraliserLine> lines;  // C_2 .. C_{N-1}
  int depth = 0;
  std::vector<FVec> l1_rows;
  std::optional<int> r_max;
  std::uint64_t seed = 0;

  MaxClassAlgebra build() const;
  FSubspace l1() const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AnalysisReport {
  std::string name;
  bool finite = true;
  int depth = 0;
  ValidationReport validation;
  std::vector<int> dims;   // dims[i] = dim_F L_i, 1 <= i <= N
  std::vector<int> d_seq;  // 2 <= i <= N-1
  std::optional<TwoStepFieldReport> fields;
  std::optional<KChainReport> k_chain;
  std::optional<DichotomyResult> dichotomy;
  std::optional<ConstituentStats> constituents;
  std::vector<int> free_metabelian;  // oracle dims, transcendental jobs only
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& check) const;
};

/// Runs the chain, two-step fields, K-chain, dichotomy and constituent
/// statistics (finite towers) or the free metabelian comparison
/// (transcendental towers), collecting every invariant as a named check.
AnalysisReport analyze(const AnalysisJob& job);

}  // namespace liemc
