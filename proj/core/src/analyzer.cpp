#include "liemc/analyzer.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace liemc {

namespace {

void require_finite(const FieldTower& tower, const char* what) {
  if (!tower.is_finite()) throw Error(Errc::UnsupportedInTranscendentalMode, what);
}

int ambient_for(int degree) { return degree == 1 ? 2 : 1; }

// Unbounded product of coefficient vectors, used only to test E-independence
// in transcendental mode where the tower's own product is capped.
FVec raw_poly_mul(const FVec& a, const FVec& b, const PrimeField& gf) {
  FVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = gf.add(r[i + j], gf.mul(a[i], b[j]));
  }
  return r;
}

// Calls visit(c) for every nonzero c in F^r whose first nonzero entry is 1.
void for_each_projective(int r, Scalar p, const std::function<void(const FVec&)>& visit) {
  for (int lead = 0; lead < r; ++lead) {
    const int free = r - lead - 1;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) count *= p;
    FVec c(r, 0);
    c[lead] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (int i = lead + 1; i < r; ++i) {
        c[i] = static_cast<Scalar>(v % p);
        v /= p;
      }
      visit(c);
    }
  }
}

FVec combination(const std::vector<FVec>& basis, const FVec& c, const PrimeField& gf) {
  FVec v(basis.front().size(), 0);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (c[r] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = gf.add(v[j], gf.mul(c[r], basis[r][j]));
  }
  return v;
}

constexpr std::uint64_t kFullEnumerationLimit = 1u << 16;
constexpr int kSamplesPerDegree = 10000;

}  // namespace

FSubspace line_space(const FieldTower& tower, const CentraliserLine& line) {
  std::vector<FVec> rows;
  EElement power = tower.one();
  for (int l = 0; l < tower.width(); ++l) {
    rows.push_back(flatten({tower.mul(power, line.a), tower.mul(power, line.b)}));
    if (l + 1 < tower.width()) power = tower.mul(power, tower.alpha());
  }
  return FSubspace::span(tower, 2, rows);
}

bool spans_m1(const FSubspace& l1) {
  if (l1.ambient_k() != 2) return false;
  const auto& tower = l1.tower();
  if (tower.is_finite()) return k_closure(Subfield::whole(tower), l1).closure.rank() == 2 * tower.degree();
  // E-rank 2 iff some pair of spanning vectors has nonzero determinant.
  const auto& gf = tower.gf();
  const int r = l1.rank();
  for (int i = 0; i < r; ++i) {
    const EPoint u = l1.basis_point(i);
    for (int j = i + 1; j < r; ++j) {
      const EPoint v = l1.basis_point(j);
      const FVec ad = raw_poly_mul(u[0].coeffs, v[1].coeffs, gf);
      const FVec bc = raw_poly_mul(u[1].coeffs, v[0].coeffs, gf);
      for (std::size_t k = 0; k < ad.size(); ++k) {
        if (ad[k] != bc[k]) return true;
      }
    }
  }
  return false;
}

HomElement to_hom(const FieldTower& tower, const FVec& v, int degree) {
  return HomElement{degree, unflatten(tower, v, ambient_for(degree))};
}

FVec from_hom(const HomElement& h) { return flatten(h.coords); }

FSubspace bracket_spaces(const MaxClassAlgebra& m, const FSubspace& u, int du, const FSubspace& v, int dv) {
  const auto& tower = m.tower();
  std::vector<FVec> rows;
  rows.reserve(u.basis().size() * v.basis().size());
  std::vector<HomElement> vs;
  for (const auto& b : v.basis()) vs.push_back(to_hom(tower, b, dv));
  for (const auto& a : u.basis()) {
    const HomElement ha = to_hom(tower, a, du);
    for (const auto& hb : vs) rows.push_back(from_hom(bracket(m, ha, hb)));
  }
  return FSubspace::span(tower, ambient_for(du + dv), rows);
}

// --- chain -----------------------------------------------------------------

LChain chain(const MaxClassAlgebra& m, const FSubspace& l1) { return chain(m, l1, m.depth()); }

LChain chain(const MaxClassAlgebra& m, const FSubspace& l1, int depth) {
  if (m.status() != AlgebraStatus::Validated) throw Error(Errc::AlgebraNotValidated, "chain needs a validated algebra");
  if (depth < 2 || depth > m.depth()) throw Error(Errc::TruncationExceeded, "chain depth outside [2, N]");
  if (!(l1.tower() == m.tower())) throw Error(Errc::TowerMismatch, "L_1 over a different tower");
  if (l1.ambient_k() != 2) throw Error(Errc::AmbientMismatch, "L_1 must live in M_1 = E^2");
  if (!m.tower().is_finite() && !m.is_metabelian()) {
    throw Error(Errc::UnsupportedInTranscendentalMode, "transcendental mode supports the metabelian algebra only");
  }
  if (!spans_m1(l1)) throw Error(Errc::GeneratingSpaceTooSmall, "E L_1 != M_1");

  LChain l;
  l.depth = depth;
  l.spaces.reserve(depth + 1);
  l.spaces.push_back(FSubspace(m.tower(), 1));
  l.spaces.push_back(l1);
  for (int i = 2; i <= depth; ++i) l.spaces.push_back(bracket_spaces(m, l.spaces[i - 1], i - 1, l1, 1));
  l.dims.assign(depth + 1, 0);
  for (int i = 1; i <= depth; ++i) l.dims[i] = l.spaces[i].rank();
  l.d_seq.assign(depth, 0);
  for (int i = 2; i <= depth - 1; ++i) l.d_seq[i] = intersect(l1, line_space(m.tower(), m.line(i))).rank();
  return l;
}

// --- two-step fields -------------------------------------------------------

Subfield two_step_field_at(const MaxClassAlgebra& m, const FSubspace& l1, int degree, const FVec& x_choice,
                           FSubspace* image_out) {
  const auto& tower = m.tower();
  require_finite(tower, "two-step fields need a finite tower");
  const CentraliserLine& c = m.line(degree);
  if (!l1.member(x_choice)) throw Error(Errc::InvalidInput, "chosen x is not in L_1");
  if (line_space(tower, c).member(x_choice)) throw Error(Errc::InvalidInput, "chosen x lies in C_i");
  // phi(u x + v y) = (b u - a v) / (b x_a - a x_b) kills C_i = E(a x + b y) and sends x to 1.
  const EPoint xp = unflatten(tower, x_choice, 2);
  const EElement scale = tower.inv(tower.sub(tower.mul(c.b, xp[0]), tower.mul(c.a, xp[1])));
  std::vector<EElement> images;
  for (int r = 0; r < l1.rank(); ++r) {
    const EPoint u = l1.basis_point(r);
    images.push_back(tower.mul(scale, tower.sub(tower.mul(c.b, u[0]), tower.mul(c.a, u[1]))));
  }
  if (image_out) {
    std::vector<FVec> rows;
    for (const auto& e : images) rows.push_back(e.coeffs);
    *image_out = FSubspace::span(tower, 1, rows);
  }
  return subfield_generated(tower, images);
}

TwoStepFieldReport two_step_fields(const MaxClassAlgebra& m, const FSubspace& l1) {
  const auto& tower = m.tower();
  require_finite(tower, "two-step fields need a finite tower");
  if (!spans_m1(l1)) throw Error(Errc::GeneratingSpaceTooSmall, "E L_1 != M_1");
  const int n = m.depth();
  std::vector<TwoStepEntry> entries;
  std::vector<Subfield> running;
  Subfield k = Subfield::prime(tower);
  for (int i = 2; i <= n - 1; ++i) {
    const FSubspace c = line_space(tower, m.line(i));
    const auto it = std::find_if(l1.basis().begin(), l1.basis().end(), [&](const FVec& v) { return !c.member(v); });
    FSubspace image(tower, 1);
    Subfield fi = two_step_field_at(m, l1, i, *it, &image);
    k = compositum(k, fi);
    running.push_back(k);
    entries.push_back(TwoStepEntry{i, *it, std::move(image), std::move(fi)});
  }
  const int t = k.degree();
  int r_gen = 2;
  while (!(running[r_gen - 2] == k)) ++r_gen;
  const int window = std::max(t, 5);
  const int trailing = (n - 1) - r_gen + 1;
  return TwoStepFieldReport{std::move(entries), k, t, r_gen, trailing >= window, window};
}

// --- K-chain ---------------------------------------------------------------

KChainReport k_chain_check(const MaxClassAlgebra& m, const FSubspace& l1, const Subfield& k) {
  require_finite(m.tower(), "K-chains need a finite tower");
  const int n = m.depth();
  KChainReport report;
  report.k_dims.assign(n + 1, 0);
  report.f_dims.assign(n + 1, 0);
  const FSubspace t1 = k_closure(k, l1).closure;
  FSubspace ti = t1;
  for (int i = 1; i <= n; ++i) {
    if (i == 2) ti = bracket_spaces(m, t1, 1, t1, 1);
    if (i > 2) ti = bracket_spaces(m, ti, i - 1, t1, 1);
    report.k_dims[i] = dim_over(k, ti);
    report.f_dims[i] = ti.rank();
    if (i >= 2 && report.k_dims[i] != report.k_dims[1] - 1) report.holds = false;
  }
  return report;
}

// --- covering degree -------------------------------------------------------

std::optional<int> covering_degree(const MaxClassAlgebra& m, const LChain& l, const FVec& z, int degree, int r_max) {
  if (degree < 1 || degree > l.depth) throw Error(Errc::DegreeOutOfRange, "z of degree " + std::to_string(degree));
  if (degree + r_max > l.depth) throw Error(Errc::TruncationExceeded, "i + r_max exceeds the truncation depth");
  FSubspace x = FSubspace::span(m.tower(), ambient_for(degree), {z});
  if (x.is_zero()) throw Error(Errc::ZeroElement, "covering degree of 0");
  const FSubspace& l1 = l.at(1);
  for (int k = 1; k <= r_max; ++k) {
    x = bracket_spaces(m, x, degree + k - 1, l1, 1);
    if (x == l.at(degree + k)) return k;
  }
  return std::nullopt;
}

std::optional<int> covering_degree(const MaxClassAlgebra& m, const LChain& l, const HomElement& z, int r_max) {
  return covering_degree(m, l, from_hom(z), z.degree, r_max);
}

// --- dichotomy -------------------------------------------------------------

std::string to_string(DichotomyKind kind) {
  switch (kind) {
    case DichotomyKind::Constrained: return "Constrained";
    case DichotomyKind::NotJustInfinite: return "NotJustInfinite";
    case DichotomyKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

DichotomyResult classify(const MaxClassAlgebra& m, const FSubspace& l1, const ClassifyOptions& options) {
  const LChain l = chain(m, l1);
  const TwoStepFieldReport f = two_step_fields(m, l1);
  return classify(m, l1, l, f, options);
}

DichotomyResult classify(const MaxClassAlgebra& m, const FSubspace& l1, const LChain& l, const TwoStepFieldReport& f,
                         const ClassifyOptions& options) {
  const auto& tower = m.tower();
  require_finite(tower, "classification needs a finite tower");
  const int n = l.depth;
  DichotomyResult result;
  result.seed = options.seed;
  result.k_dim_l1 = dim_over(f.k, k_closure(f.k, l1).closure);
  if (!f.stabilized) {
    result.reason = "two-step field not stable over the trailing " + std::to_string(f.stable_window) + " degrees";
    return result;
  }

  if (result.k_dim_l1 == 2) {
    result.r_bound = (f.t - 1) * f.r_gen + 1;
    const int last = n - result.r_bound;
    if (last < 2) {
      result.reason = "truncation depth too small for the covering bound " + std::to_string(result.r_bound);
      return result;
    }
    // Degrees up to `last` must reach full covering within the truncation.
    // Later degrees still bound r from below: an unreached covering degree
    // counts as one more than the steps available.
    result.max_kappa.assign(n, 0);
    const Scalar p = tower.p();
    for (int degree = 1; degree <= n - 1; ++degree) {
      const bool strict = degree <= last;
      const FSubspace& space = l.at(degree);
      const int r_max = std::min(n - degree, options.r_max.value_or(n));
      std::optional<int> missing_at;
      auto visit = [&](const FVec& c) {
        if (missing_at) return;
        const FVec z = combination(space.basis(), c, tower.gf());
        const auto kappa = covering_degree(m, l, z, degree, r_max);
        ++result.elements_checked;
        if (!kappa && strict) {
          missing_at = degree;
          return;
        }
        result.max_kappa[degree] = std::max(result.max_kappa[degree], kappa.value_or(r_max + 1));
      };
      const int r = space.rank();
      std::uint64_t size = 1;
      bool small = true;
      for (int i = 0; i < r && small; ++i) {
        size *= p;
        small = size <= kFullEnumerationLimit;
      }
      if (small) {
        for_each_projective(r, p, visit);
      } else {
        result.sampled = true;
        std::mt19937_64 gen(options.seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(degree)));
        for (int s = 0; s < kSamplesPerDegree; ++s) {
          FVec c(r, 0);
          while (std::all_of(c.begin(), c.end(), [](Scalar v) { return v == 0; })) {
            for (auto& v : c) v = static_cast<Scalar>(gen() % p);
          }
          visit(c);
        }
      }
      if (missing_at) {
        result.reason = "covering degree not reached within the truncation at degree " + std::to_string(*missing_at);
        return result;
      }
      result.r_empirical = std::max(result.r_empirical, result.max_kappa[degree]);
    }
    result.checked_up_to = last;
    result.kind = DichotomyKind::Constrained;
    return result;
  }

  // dim_K K L_1 > 2: the ideal generated by a proper K-subspace of a K-space
  // L_i stays proper in every later degree.
  for (int i = 2; i <= n; ++i) {
    const FSubspace& li = l.at(i);
    if (!k_closure(f.k, li).is_k_space || li.rank() / f.t < 2) continue;
    FSubspace x = k_closure(f.k, FSubspace::span(tower, 1, {li.basis().front()})).closure;
    result.witness_degree = i;
    result.witness_space = x;
    result.ideal_dims.push_back(x.rank());
    for (int j = i + 1; j <= n; ++j) {
      x = bracket_spaces(m, x, j - 1, l.at(1), 1);
      result.ideal_dims.push_back(x.rank());
    }
    result.kind = DichotomyKind::NotJustInfinite;
    return result;
  }
  result.reason = "no degree where L_i is a K-space of K-dimension >= 2";
  return result;
}

// --- constituent statistics ------------------------------------------------

ConstituentStats predicted_r_from_pattern(const std::vector<bool>& occurrences, int d) {
  ConstituentStats s;
  s.d = d;
  s.occurrences = occurrences;
  const int last = static_cast<int>(occurrences.size()) - 1;
  s.m_ik.assign(occurrences.size(), {});
  s.m_i.assign(occurrences.size(), std::nullopt);
  for (int i = 2; i <= last; ++i) {
    auto& row = s.m_ik[i];
    row.push_back(0);
    for (int k = 1; i + k - 1 <= last; ++k) row.push_back(row.back() + (occurrences[i + k - 1] ? 1 : 0));
    for (int k = 0; k < static_cast<int>(row.size()); ++k) {
      if (row[k] == d - 1) {
        s.m_i[i] = k;
        break;
      }
    }
  }
  if (last < 2 || !s.m_i[2]) {
    s.reason = "m_2 is not determined within the truncation";
    return s;
  }
  s.m2 = *s.m_i[2];
  for (int i = 2; i <= last; ++i) {
    if (s.m_i[i]) s.max_m = std::max(s.max_m, *s.m_i[i]);
  }
  s.predicted_r = s.m2 == s.max_m ? s.m2 + 1 : s.max_m;
  s.applicable = true;
  return s;
}

ConstituentStats predicted_r(const MaxClassAlgebra& m, const FSubspace& l1) {
  const auto& tower = m.tower();
  ConstituentStats none;
  if (!tower.is_finite()) {
    none.reason = "needs a finite tower";
    return none;
  }
  const auto ey = CentraliserLine::y_line(tower);
  std::vector<CentraliserLine> distinct;
  for (const auto& c : m.lines()) {
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);
  }
  if (distinct.size() > 2) {
    none.reason = "more than two distinct centralisers";
    return none;
  }
  const CentraliserLine other = distinct.size() == 2 ? distinct[1] : CentraliserLine::x_line(tower);
  const FVec v = flatten({other.a, other.b});
  const FSubspace shape = FSubspace::span(tower, 2, {v, scale_point(tower, tower.alpha(), v, 2), flatten({tower.zero(), tower.one()})});
  if (!(shape == l1)) {
    none.reason = "L_1 is not F{v, alpha v, y} with v on the second centraliser";
    return none;
  }
  std::vector<bool> occ(m.depth(), false);
  for (int i = 2; i <= m.depth() - 1; ++i) occ[i] = m.line(i) == ey;
  return predicted_r_from_pattern(occ, tower.degree());
}

// --- expanding sequences ---------------------------------------------------

ExpandingTrace expanding_check(const MaxClassAlgebra& m, const FSubspace& l1, const FSubspace& x0, int degree,
                               const TwoStepFieldReport& fields) {
  require_finite(m.tower(), "expanding check needs a finite tower");
  if (degree < 2 || x0.ambient_k() != 1) throw Error(Errc::DegreeOutOfRange, "X_0 must lie in some M_i with i >= 2");
  ExpandingTrace trace;
  trace.start_degree = degree;
  trace.bound = (fields.t - 1) * fields.r_gen;
  if (degree + trace.bound > m.depth()) throw Error(Errc::TruncationExceeded, "degree + (t-1) r_gen exceeds N");
  FSubspace x = x0;
  for (int j = 0; degree + j <= m.depth(); ++j) {
    if (j > 0) x = bracket_spaces(m, x, degree + j - 1, l1, 1);
    const KClosure kc = k_closure(fields.k, x);
    trace.f_dims.push_back(x.rank());
    trace.k_dims.push_back(kc.closure.rank() / fields.t);
    if (trace.j_star < 0 && kc.is_k_space) trace.j_star = j;
  }
  trace.within_bound = trace.j_star >= 0 && trace.j_star <= trace.bound;
  trace.k_dims_constant = std::adjacent_find(trace.k_dims.begin(), trace.k_dims.end(), std::not_equal_to<>()) == trace.k_dims.end();
  return trace;
}

// --- free metabelian oracle ------------------------------------------------

int free_metabelian_dims(int n) {
  if (n < 2) throw Error(Errc::DegreeTooSmall, "free metabelian dimensions start at degree 2");
  if (n > 30) throw Error(Errc::InvalidInput, "enumeration over 2^n words is limited to n <= 30");
  // Left-normed [g_{i1}, ..., g_{in}] with i1 > i2 <= i3 <= ... <= in.
  int count = 0;
  for (std::uint32_t word = 0; word < (1u << n); ++word) {
    auto g = [&](int pos) { return (word >> pos) & 1u; };
    if (!(g(0) > g(1))) continue;
    bool ok = true;
    for (int pos = 2; pos < n && ok; ++pos) ok = g(pos - 1) <= g(pos);
    if (ok) ++count;
  }
  return count;
}

}  // namespace liemc
