#include "liemc/analysis.hpp"

#include <algorithm>
#include <string>

namespace liemc {

MaxClassAlgebra AnalysisJob::build() const {
  MaxClassAlgebra m = build_from_centralisers(tower, lines, depth);
  validate(m);
  return m;
}

FSubspace AnalysisJob::l1() const { return FSubspace::span(tower, 2, l1_rows); }

bool AnalysisReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* AnalysisReport::find(const std::string& check) const {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == check; });
  return it == checks.end() ? nullptr : &*it;
}

namespace {

std::string degree_note(int i) { return "first failure at degree " + std::to_string(i); }

}  // namespace

AnalysisReport analyze(const AnalysisJob& job) {
  AnalysisReport report;
  report.name = job.name;
  report.finite = job.tower.is_finite();
  report.depth = job.depth;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back(CheckResult{std::move(name), passed, std::move(detail)});
  };

  const MaxClassAlgebra m = job.build();
  report.validation = m.last_report();
  add("algebra_valid", report.validation.ok,
      report.validation.ok ? "" : std::to_string(report.validation.failures.size()) + " failures");
  if (!report.validation.ok) return report;

  const FSubspace l1 = job.l1();
  const LChain l = chain(m, l1);
  const int n = l.depth;
  report.dims = l.dims;
  report.d_seq = l.d_seq;

  {
    int bad = 0;
    for (int i = 2; i < n && !bad; ++i) {
      if (l.dims[i + 1] < l.dims[i]) bad = i;
    }
    add("dims_nondecreasing", bad == 0, bad ? degree_note(bad) : "");
  }

  if (!report.finite) {
    report.free_metabelian.assign(n + 1, 0);
    int bad = 0;
    for (int i = 2; i <= n; ++i) {
      report.free_metabelian[i] = free_metabelian_dims(i);
      if (!bad && report.free_metabelian[i] != l.dims[i]) bad = i;
    }
    add("free_metabelian_dims", bad == 0, bad ? degree_note(bad) : "dim_F L_n matches for 2 <= n <= " + std::to_string(n));
    return report;
  }

  report.fields = two_step_fields(m, l1);
  const auto& f = *report.fields;

  {
    // dim_F [L_i, L_1] = dim_F L_i exactly when the stabilizer of L_i contains F_i.
    int bad = 0;
    for (int i = 2; i <= n - 1 && !bad; ++i) {
      const bool equal = l.dims[i + 1] == l.dims[i];
      const bool stabilized = stabilizer(l.at(i)).ring.contains(f.at(i).field.space());
      if (equal != stabilized) bad = i;
    }
    add("covering_equality_criterion", bad == 0, bad ? degree_note(bad) : "");
  }
  {
    int bad = 0;
    for (int i = 2; i <= n - 1 && !bad; ++i) {
      if (f.at(i).field.degree() < l1.rank() - l.d_seq[i]) bad = i;
    }
    add("field_degree_bound", bad == 0, bad ? degree_note(bad) : "");
  }

  report.k_chain = k_chain_check(m, l1, f.k);
  add("k_dimension_drop", report.k_chain->holds,
      "dim_K T_1 = " + std::to_string(report.k_chain->k_dims[1]) + ", dim_K T_i = " + std::to_string(report.k_chain->k_dims[2]));

  report.dichotomy = classify(m, l1, l, f, ClassifyOptions{job.seed, job.r_max});
  const auto& dr = *report.dichotomy;
  add("classified", dr.kind != DichotomyKind::Inconclusive, dr.reason);

  if (dr.kind == DichotomyKind::Constrained) {
    add("covering_within_bound", dr.r_empirical <= dr.r_bound,
        "r_empirical = " + std::to_string(dr.r_empirical) + ", r_bound = " + std::to_string(dr.r_bound));
    if (dr.r_empirical == 1) {
      bool ok = true;
      for (int i = 3; i <= n; ++i) ok = ok && l.dims[i] == f.t;
      for (const auto& e : f.entries) ok = ok && e.field == f.k;
      add("ideally_constrained_structure", ok, "dim_F L_i = [K:F] for i >= 3 and F_i = K");
    }
  }
  if (dr.kind == DichotomyKind::NotJustInfinite) {
    const auto& x = *dr.witness_space;
    const bool proper = !x.is_zero() && x.rank() < l.at(dr.witness_degree).rank() && k_closure(f.k, x).is_k_space;
    const bool constant = std::all_of(dr.ideal_dims.begin(), dr.ideal_dims.end(), [&](int v) { return v == x.rank(); });
    add("witness_proper_k_subspace", proper);
    add("ideal_dims_constant", constant, "degrees " + std::to_string(dr.witness_degree) + ".." + std::to_string(n));
  }

  report.constituents = predicted_r(m, l1);
  if (report.constituents->applicable && dr.kind == DichotomyKind::Constrained) {
    add("predicted_r_agrees", report.constituents->predicted_r == dr.r_empirical,
        "predicted " + std::to_string(report.constituents->predicted_r) + ", observed " + std::to_string(dr.r_empirical));
  }
  return report;
}

}  // namespace liemc
