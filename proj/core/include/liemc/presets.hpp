#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liemc/analysis.hpp"

namespace liemc {

/// A named reproduction: the job plus the outcome it must produce.
struct Preset {
  AnalysisJob job;
  std::optional<DichotomyKind> expected_kind;
  std::optional<int> expected_r;
  bool expect_free_metabelian = false;
};

const std::vector<std::string>& preset_names();

/// Throws UnknownPreset for names outside the registry.
Preset preset(std::string_view name);

/// analyze() plus the preset's expected-outcome checks.
AnalysisReport reproduce(const Preset& p);

}  // namespace liemc
