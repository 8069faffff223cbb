#include "liemc/json_io.hpp"

#include <string>

namespace liemc {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(Errc::InvalidInput, "field '" + field + "': " + why);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) bad(path, "expected an integer");
  return j.get<long long>();
}

FVec coeff_list(const Json& j, Scalar p, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of integers");
  FVec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long long c = as_int(j[i], path + "[" + std::to_string(i) + "]");
    if (c < 0 || c >= static_cast<long long>(p)) bad(path + "[" + std::to_string(i) + "]", "coefficient not in [0, p)");
    v.push_back(static_cast<Scalar>(c));
  }
  return v;
}

EElement element_at_path(const FieldTower& tower, const Json& j, const std::string& path) {
  FVec c = coeff_list(j, tower.p(), path);
  if (static_cast<int>(c.size()) > tower.width()) bad(path, "more coefficients than the tower width");
  return tower.element(c);
}

FieldTower tower_at_path(const Json& j, const std::string& path) {
  const long long p = as_int(field(j, "p", path), sub(path, "p"));
  if (p < 2 || p > (1 << 16)) bad(sub(path, "p"), "characteristic out of range");
  std::string mode = "finite";
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) bad(sub(path, "mode"), "expected a string");
    mode = j["mode"].get<std::string>();
  }
  try {
    if (mode == "finite") {
      return FieldTower::finite(static_cast<Scalar>(p), coeff_list(field(j, "minpoly", path), static_cast<Scalar>(p), sub(path, "minpoly")));
    }
    if (mode == "transcendental") {
      return FieldTower::transcendental(static_cast<Scalar>(p), static_cast<int>(as_int(field(j, "cap", path), sub(path, "cap"))));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidInput) throw;
    throw Error(e.code(), "field '" + path + "': " + e.detail());
  }
  bad(sub(path, "mode"), "expected \"finite\" or \"transcendental\"");
}

std::vector<CentraliserLine> lines_at_path(const FieldTower& tower, const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of [a, b] pairs");
  std::vector<CentraliserLine> lines;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string here = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) bad(here, "expected [a-coeffs, b-coeffs]");
    const EElement a = element_at_path(tower, j[i][0], here + "[0]");
    const EElement b = element_at_path(tower, j[i][1], here + "[1]");
    if (tower.is_zero(a) && tower.is_zero(b)) bad(here, "line needs (a, b) != (0, 0)");
    lines.push_back(CentraliserLine::canonical(tower, a, b));
  }
  return lines;
}

Json rows_json(const std::vector<FVec>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

template <class T>
Json from_degree(const std::vector<T>& v, std::size_t first) {
  Json out = Json::array();
  for (std::size_t i = first; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

Json to_json(const FieldTower& tower) {
  Json j{{"p", tower.p()}, {"mode", tower.is_finite() ? "finite" : "transcendental"}, {"minpoly", tower.minpoly()}};
  if (!tower.is_finite()) j["cap"] = tower.cap();
  return j;
}

FieldTower tower_from_json(const Json& j) { return tower_at_path(j, "tower"); }

Json to_json(const EElement& e) { return Json(e.coeffs); }

EElement element_from_json(const FieldTower& tower, const Json& j) { return element_at_path(tower, j, "element"); }

Json to_json(const FSubspace& s) { return Json{{"ambient_k", s.ambient_k()}, {"basis", rows_json(s.basis())}}; }

FSubspace subspace_from_json(const FieldTower& tower, const Json& j) {
  const long long k = as_int(field(j, "ambient_k", ""), "ambient_k");
  if (k < 1) bad("ambient_k", "must be >= 1");
  const Json& basis = field(j, "basis", "");
  if (!basis.is_array()) bad("basis", "expected an array of rows");
  std::vector<FVec> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    FVec r = coeff_list(basis[i], tower.p(), "basis[" + std::to_string(i) + "]");
    if (static_cast<long long>(r.size()) != k * tower.width()) bad("basis[" + std::to_string(i) + "]", "row length must be ambient_k * width");
    rows.push_back(std::move(r));
  }
  return FSubspace::span(tower, static_cast<int>(k), rows);
}

Json to_json(const CentraliserLine& line) { return Json::array({to_json(line.a), to_json(line.b)}); }

CentraliserLine line_from_json(const FieldTower& tower, const Json& j) {
  return lines_at_path(tower, Json::array({j}), "line").front();
}

Json algebra_to_json(const FieldTower& tower, const std::vector<CentraliserLine>& lines, int depth) {
  Json ls = Json::array();
  for (const auto& l : lines) ls.push_back(to_json(l));
  return Json{{"tower", to_json(tower)}, {"N", depth}, {"lines", ls}};
}

Json to_json(const MaxClassAlgebra& m) { return algebra_to_json(m.tower(), m.lines(), m.depth()); }

MaxClassAlgebra algebra_from_json(const Json& j) {
  const FieldTower tower = tower_at_path(field(j, "tower", ""), "tower");
  const long long n = as_int(field(j, "N", ""), "N");
  if (n < 3 || n > 4096) bad("N", "truncation depth out of range");
  auto lines = lines_at_path(tower, field(j, "lines", ""), "lines");
  return build_from_centralisers(tower, std::move(lines), static_cast<int>(n));
}

Json to_json(const ValidationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json e{{"kind", to_string(f.kind)}};
    if (!f.triple.empty()) {
      Json t = Json::array();
      for (int o : f.triple) t.push_back(basis_label(o));
      e["triple"] = t;
    } else {
      e["degree"] = f.degree;
    }
    failures.push_back(e);
  }
  return Json{{"ok", r.ok}, {"failures", failures}};
}

Json to_json(const SearchResult& r, const FieldTower& tower, int depth, int max_distinct, std::uint64_t budget) {
  Json seqs = Json::array();
  for (const auto& s : r.sequences) {
    Json ls = Json::array();
    for (const auto& l : s) ls.push_back(to_json(l));
    seqs.push_back(ls);
  }
  return Json{{"tower", to_json(tower)}, {"N", depth},        {"max_centralisers", max_distinct}, {"budget", budget},
              {"examined", r.examined}, {"exhausted", r.exhausted}, {"count", r.sequences.size()}, {"sequences", seqs}};
}

AnalysisJob job_from_json(const Json& j) {
  const Json& alg = field(j, "algebra", "");
  const FieldTower tower = tower_at_path(field(alg, "tower", "algebra"), "algebra.tower");
  const long long alg_n = as_int(field(alg, "N", "algebra"), "algebra.N");
  if (alg_n < 3 || alg_n > 4096) bad("algebra.N", "truncation depth out of range");
  auto lines = lines_at_path(tower, field(alg, "lines", "algebra"), "algebra.lines");
  if (static_cast<long long>(lines.size()) != alg_n - 2) bad("algebra.lines", "expected N - 2 lines");

  long long n = alg_n;
  if (j.contains("N")) {
    n = as_int(j["N"], "N");
    if (n < 3 || n > alg_n) bad("N", "must lie in [3, algebra.N]");
  }
  lines.resize(static_cast<std::size_t>(n - 2));

  const Json& l1 = field(j, "L1", "");
  if (!l1.is_array() || l1.empty()) bad("L1", "expected a nonempty array of rows");
  std::vector<FVec> rows;
  for (std::size_t i = 0; i < l1.size(); ++i) {
    const std::string here = "L1[" + std::to_string(i) + "]";
    FVec r = coeff_list(l1[i], tower.p(), here);
    if (static_cast<int>(r.size()) != 2 * tower.width()) bad(here, "row length must be 2 * width");
    rows.push_back(std::move(r));
  }

  AnalysisJob job{"job", tower, std::move(lines), static_cast<int>(n), std::move(rows), std::nullopt, 0};
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name", "expected a string");
    job.name = j["name"].get<std::string>();
  }
  if (j.contains("r_max")) {
    const long long r = as_int(j["r_max"], "r_max");
    if (r < 1) bad("r_max", "must be >= 1");
    job.r_max = static_cast<int>(r);
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0)) {
      bad("seed", "expected a nonnegative integer");
    }
    job.seed = j["seed"].get<std::uint64_t>();
  }
  return job;
}

Json to_json(const AnalysisJob& job) {
  Json j{{"name", job.name}, {"algebra", algebra_to_json(job.tower, job.lines, job.depth)}, {"L1", rows_json(job.l1_rows)},
         {"N", job.depth}, {"seed", job.seed}};
  if (job.r_max) j["r_max"] = *job.r_max;
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json j{{"name", r.name}, {"mode", r.finite ? "finite" : "transcendental"}, {"N", r.depth}, {"validation", to_json(r.validation)}};
  if (!r.dims.empty()) {
    j["dims"] = from_degree(r.dims, 1);
    j["d_seq"] = from_degree(r.d_seq, 2);
  }
  if (r.fields) {
    const auto& f = *r.fields;
    Json degrees = Json::array();
    for (const auto& e : f.entries) degrees.push_back(e.field.degree());
    j["two_step_fields"] = Json{{"F_i_degrees", degrees},      {"K_degree", f.t},         {"K_basis", rows_json(f.k.space().basis())},
                                {"r_gen", f.r_gen},             {"stabilized", f.stabilized}, {"stable_window", f.stable_window}};
  }
  if (r.k_chain) j["k_chain"] = Json{{"dim_K_T", from_degree(r.k_chain->k_dims, 1)}, {"holds", r.k_chain->holds}};
  if (r.dichotomy) {
    const auto& d = *r.dichotomy;
    Json c{{"kind", to_string(d.kind)}, {"k_dim_L1", d.k_dim_l1}};
    if (!d.reason.empty()) c["reason"] = d.reason;
    if (d.kind == DichotomyKind::Constrained) {
      c["r_empirical"] = d.r_empirical;
      c["r_empirical_scope"] = "observed on [2, " + std::to_string(r.depth) + "]";
      c["r_bound"] = d.r_bound;
      c["checked_degrees"] = Json::array({1, d.checked_up_to});
      c["max_covering_degree"] = from_degree(d.max_kappa, 1);
      c["enumeration"] = Json{{"policy", d.sampled ? "sampled" : "full"}, {"seed", d.seed}, {"elements", d.elements_checked}};
    }
    if (d.kind == DichotomyKind::NotJustInfinite) {
      c["witness"] = Json{{"degree", d.witness_degree}, {"space", to_json(*d.witness_space)}, {"ideal_dims", d.ideal_dims}};
    }
    j["classification"] = c;
  }
  if (r.constituents) {
    const auto& s = *r.constituents;
    Json c{{"applicable", s.applicable}};
    if (!s.reason.empty()) c["reason"] = s.reason;
    if (s.applicable) {
      Json mi = Json::array();
      for (std::size_t i = 2; i < s.m_i.size(); ++i) mi.push_back(s.m_i[i] ? Json(*s.m_i[i]) : Json(nullptr));
      c["d"] = s.d;
      c["m_i"] = mi;
      c["m_2"] = s.m2;
      c["max_m"] = s.max_m;
      c["predicted_r"] = s.predicted_r;
    }
    j["constituents"] = c;
  }
  if (!r.free_metabelian.empty()) j["free_metabelian_dims"] = from_degree(r.free_metabelian, 2);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["passed"] = r.passed();
  return j;
}

}  // namespace liemc
