#include "liemc/maxclass.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace liemc {

namespace {

bool is_constant(const EElement& e) {
  return std::all_of(e.coeffs.begin() + 1, e.coeffs.end(), [](Scalar c) { return c == 0; });
}

// Constants invert inside GF(p), so they work in transcendental mode too.
EElement invert(const FieldTower& tower, const EElement& e) {
  if (is_constant(e)) return tower.constant(tower.gf().inv(e.coeffs[0]));
  return tower.inv(e);
}

}  // namespace

// --- CentraliserLine -------------------------------------------------------

CentraliserLine CentraliserLine::canonical(const FieldTower& tower, EElement a, EElement b) {
  const bool a_zero = tower.is_zero(a);
  if (a_zero && tower.is_zero(b)) throw Error(Errc::InvalidInput, "centraliser line needs (a, b) != (0, 0)");
  const EElement s = invert(tower, a_zero ? b : a);
  return CentraliserLine{tower.mul(s, a), tower.mul(s, b)};
}

CentraliserLine CentraliserLine::y_line(const FieldTower& tower) { return {tower.zero(), tower.one()}; }
CentraliserLine CentraliserLine::x_line(const FieldTower& tower) { return {tower.one(), tower.zero()}; }

FVec CentraliserLine::encoding() const { return flatten({a, b}); }

// --- labels ----------------------------------------------------------------

std::string basis_label(int ordinal) {
  if (ordinal == 0) return "y";
  if (ordinal == 1) return "x";
  return "e" + std::to_string(ordinal);
}

int basis_ordinal(const std::string& label) {
  if (label == "y") return 0;
  if (label == "x") return 1;
  if (label.size() >= 2 && label[0] == 'e') {
    std::size_t used = 0;
    const int i = std::stoi(label.substr(1), &used);
    if (used + 1 == label.size() && i >= 2) return i;
  }
  throw Error(Errc::InvalidInput, "bad basis label '" + label + "'");
}

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::Antisymmetry: return "antisymmetry";
    case FailureKind::Jacobi: return "jacobi";
    case FailureKind::Alternating: return "alternating";
    case FailureKind::MaximalClass: return "maximalclass";
    case FailureKind::CentraliserMismatch: return "centraliser_mismatch";
    case FailureKind::Window: return "window";
  }
  return "unknown";
}

// --- MaxClassAlgebra -------------------------------------------------------

const CentraliserLine& MaxClassAlgebra::line(int degree) const {
  if (degree < 2 || degree > depth_ - 1) throw Error(Errc::DegreeOutOfRange, "no centraliser at degree " + std::to_string(degree));
  return lines_[degree - 2];
}

const EElement& MaxClassAlgebra::lambda(int degree) const {
  line(degree);
  return lambda_[degree];
}

const EElement& MaxClassAlgebra::mu(int degree) const {
  line(degree);
  return mu_[degree];
}

const EElement& MaxClassAlgebra::product(int i, int j) const {
  if (i < 2 || j < 2 || i + j > depth_) throw Error(Errc::DegreeOverflow, "no product [e" + std::to_string(i) + ", e" + std::to_string(j) + "]");
  return products_[i][j];
}

const EElement& MaxClassAlgebra::derived_square(int i) const {
  if (i < 2 || 2 * i > depth_) throw Error(Errc::DegreeOverflow, "no product [e" + std::to_string(i) + ", e" + std::to_string(i) + "]");
  return squares_[i];
}

bool MaxClassAlgebra::is_metabelian() const {
  const auto ey = CentraliserLine::y_line(tower_);
  return std::all_of(lines_.begin(), lines_.end(), [&](const CentraliserLine& l) { return l == ey; }) &&
         std::all_of(lambda_.begin() + 2, lambda_.end(), [&](const EElement& v) { return v == tower_.one(); }) &&
         std::all_of(mu_.begin() + 2, mu_.end(), [&](const EElement& v) { return tower_.is_zero(v); });
}

void MaxClassAlgebra::derive_products() {
  const int n = depth_;
  products_.assign(n + 1, std::vector<EElement>(n + 1, tower_.zero()));
  squares_.assign(n + 1, tower_.zero());
  auto settle_square = [&](int i) {
    squares_[i] = products_[i][i];
    products_[i][i] = tower_.zero();
  };
  auto adj = [&](int degree, bool by_x) -> const EElement& { return by_x ? lambda_[degree] : mu_[degree]; };
  // [e_i, e_2] = [e_i, [y, x]] = [[e_i, y], x] - [[e_i, x], y]
  for (int i = 2; i + 2 <= n; ++i) {
    products_[i][2] = tower_.sub(tower_.mul(mu_[i], lambda_[i + 1]), tower_.mul(lambda_[i], mu_[i + 1]));
  }
  if (4 <= n) settle_square(2);
  // e_j = nu^{-1} [e_{j-1}, w], so
  // [e_i, e_j] = nu^{-1} ([[e_i, e_{j-1}], w] - [[e_i, w], e_{j-1}]).
  for (int j = 3; j + 2 <= n; ++j) {
    const bool by_x = !tower_.is_zero(lambda_[j - 1]);
    const EElement& nu = adj(j - 1, by_x);
    if (tower_.is_zero(nu)) continue;  // not of maximal class at j-1; reported by validation
    const EElement nu_inv = invert(tower_, nu);
    for (int i = 2; i + j <= n; ++i) {
      const EElement t = tower_.sub(tower_.mul(products_[i][j - 1], adj(i + j - 1, by_x)),
                                    tower_.mul(adj(i, by_x), products_[i + 1][j - 1]));
      products_[i][j] = tower_.mul(nu_inv, t);
    }
    if (2 * j <= n) settle_square(j);
  }
}

MaxClassAlgebra build_from_centralisers(FieldTower tower, std::vector<CentraliserLine> lines, int depth) {
  if (depth < 3) throw Error(Errc::TruncationTooSmall, "truncation depth must be at least 3");
  if (static_cast<int>(lines.size()) != depth - 2) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(depth - 2) + " lines (C_2..C_{N-1}), got " +
                                          std::to_string(lines.size()));
  }
  for (auto& l : lines) l = CentraliserLine::canonical(tower, l.a, l.b);
  if (!(lines.front() == CentraliserLine::y_line(tower))) throw Error(Errc::BadFirstLine, "C_2 must be Ey");

  MaxClassAlgebra m(tower, depth);
  m.lambda_.assign(depth, tower.zero());
  m.mu_.assign(depth, tower.zero());
  for (int i = 2; i <= depth - 1; ++i) {
    const auto& l = lines[i - 2];
    // (lambda, mu) annihilates (a, b), normalized on the x side unless x spans the line.
    if (tower.is_zero(l.b)) {
      m.mu_[i] = tower.one();
    } else {
      m.lambda_[i] = tower.one();
      m.mu_[i] = tower.neg(tower.mul(l.a, invert(tower, l.b)));
    }
  }
  m.lines_ = std::move(lines);
  m.derive_products();
  return m;
}

MaxClassAlgebra build_metabelian(FieldTower tower, int depth) {
  if (depth < 3) throw Error(Errc::TruncationTooSmall, "truncation depth must be at least 3");
  std::vector<CentraliserLine> lines(depth - 2, CentraliserLine::y_line(tower));
  MaxClassAlgebra m = build_from_centralisers(std::move(tower), std::move(lines), depth);
  validate(m);
  return m;
}

MaxClassAlgebra MaxClassAlgebra::with_adjoint(int degree, EElement lambda, EElement mu) const {
  line(degree);
  tower_.check(lambda);
  tower_.check(mu);
  MaxClassAlgebra copy = *this;
  copy.lambda_[degree] = std::move(lambda);
  copy.mu_[degree] = std::move(mu);
  copy.derive_products();
  copy.status_ = AlgebraStatus::Unvalidated;
  copy.report_ = {};
  return copy;
}

HomElement MaxClassAlgebra::x() const { return HomElement{1, {tower_.one(), tower_.zero()}}; }
HomElement MaxClassAlgebra::y() const { return HomElement{1, {tower_.zero(), tower_.one()}}; }

HomElement MaxClassAlgebra::e(int degree) const {
  if (degree < 2 || degree > depth_) throw Error(Errc::DegreeOutOfRange, "no e_" + std::to_string(degree));
  return HomElement{degree, {tower_.one()}};
}

HomElement MaxClassAlgebra::basis(int ordinal) const {
  if (ordinal == 0) return y();
  if (ordinal == 1) return x();
  return e(ordinal);
}

HomElement MaxClassAlgebra::zero(int degree) const {
  if (degree < 1 || degree > depth_) throw Error(Errc::DegreeOutOfRange, "degree " + std::to_string(degree));
  return HomElement{degree, EPoint(degree == 1 ? 2 : 1, tower_.zero())};
}

// --- bracket ---------------------------------------------------------------

namespace {

void check_element(const MaxClassAlgebra& m, const HomElement& u) {
  if (u.degree < 1 || u.degree > m.depth()) throw Error(Errc::DegreeOutOfRange, "element of degree " + std::to_string(u.degree));
  if (u.coords.size() != (u.degree == 1 ? 2u : 1u)) throw Error(Errc::InvalidInput, "element has wrong number of coordinates");
  for (const auto& c : u.coords) m.tower().check(c);
}

}  // namespace

HomElement bracket(const MaxClassAlgebra& m, const HomElement& u, const HomElement& v) {
  check_element(m, u);
  check_element(m, v);
  const int deg = u.degree + v.degree;
  if (deg > m.depth()) throw Error(Errc::DegreeOverflow, "bracket lands in degree " + std::to_string(deg) + " > N");
  const auto& t = m.tower();
  if (u.degree == 1 && v.degree == 1) {
    // [a x + b y, a' x + b' y] = (b a' - a b') e_2
    const auto& [a, b] = std::tie(u.coords[0], u.coords[1]);
    const auto& [a2, b2] = std::tie(v.coords[0], v.coords[1]);
    return HomElement{2, {t.sub(t.mul(b, a2), t.mul(a, b2))}};
  }
  if (v.degree == 1) {
    const int i = u.degree;
    const EElement s = t.add(t.mul(v.coords[0], m.lambda(i)), t.mul(v.coords[1], m.mu(i)));
    return HomElement{deg, {t.mul(u.coords[0], s)}};
  }
  if (u.degree == 1) {
    HomElement r = bracket(m, v, u);
    r.coords[0] = t.neg(r.coords[0]);
    return r;
  }
  return HomElement{deg, {t.mul(t.mul(u.coords[0], v.coords[0]), m.product(u.degree, v.degree))}};
}

HomElement add(const MaxClassAlgebra& m, const HomElement& u, const HomElement& v) {
  check_element(m, u);
  check_element(m, v);
  if (u.degree != v.degree) throw Error(Errc::InvalidInput, "adding elements of different degrees");
  HomElement r = u;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = m.tower().add(u.coords[i], v.coords[i]);
  return r;
}

HomElement scale(const MaxClassAlgebra& m, const EElement& c, const HomElement& u) {
  check_element(m, u);
  HomElement r = u;
  for (auto& e : r.coords) e = m.tower().mul(c, e);
  return r;
}

bool is_zero(const MaxClassAlgebra& m, const HomElement& u) {
  return std::all_of(u.coords.begin(), u.coords.end(), [&](const EElement& e) { return m.tower().is_zero(e); });
}

// --- validation ------------------------------------------------------------

CentraliserLine two_step_centraliser(const MaxClassAlgebra& m, int degree) {
  if (degree < 2 || degree > m.depth() - 1) {
    throw Error(Errc::DegreeOutOfRange, "no centraliser at degree " + std::to_string(degree));
  }
  const auto& t = m.tower();
  const EElement& l = m.lambda(degree);
  const EElement& u = m.mu(degree);
  if (t.is_zero(l) && t.is_zero(u)) throw Error(Errc::NotMaximalClass, "[e_i, M_1] = 0 at degree " + std::to_string(degree));
  // a lambda + b mu = 0  <=>  (a, b) in E(-mu, lambda)
  return CentraliserLine::canonical(t, t.neg(u), l);
}

ValidationReport check(const MaxClassAlgebra& m, ValidateOptions options) {
  ValidationReport report;
  const int n = m.depth();
  const auto& t = m.tower();
  auto fail = [&](ValidationFailure f) {
    report.failures.push_back(std::move(f));
    return options.stop_at_first;
  };
  auto finish = [&] {
    report.ok = report.failures.empty();
    return report;
  };

  std::vector<bool> degenerate(n + 1, false);
  for (int i = 2; i <= n - 1; ++i) {
    if (t.is_zero(m.lambda(i)) && t.is_zero(m.mu(i))) {
      degenerate[i] = true;
      if (fail({FailureKind::MaximalClass, {}, i})) return finish();
    }
  }
  for (int i = 2; i <= n - 1; ++i) {
    if (!degenerate[i] && !(two_step_centraliser(m, i) == m.line(i)) && fail({FailureKind::CentraliserMismatch, {}, i})) {
      return finish();
    }
  }
  // Ascending total degree, so the first failure is the lowest-degree
  // contradiction. The Jacobi form is invariant under permuting (u, v, w)
  // once the bracket is alternating, so sorted ordinals u >= v >= w suffice.
  auto deg = [](int ordinal) { return ordinal >= 2 ? ordinal : 1; };
  for (int d = 2; d <= n; ++d) {
    for (int u = 0; u <= n; ++u) {
      for (int v = 0; v <= u; ++v) {
        for (int w = 0; w <= v; ++w) {
          if (deg(u) + deg(v) + deg(w) != d) continue;
          const HomElement bu = m.basis(u), bv = m.basis(v), bw = m.basis(w);
          const HomElement lhs = bracket(m, bu, bracket(m, bv, bw));
          const HomElement r1 = bracket(m, bracket(m, bu, bv), bw);
          const HomElement r2 = bracket(m, bracket(m, bu, bw), bv);
          if (!(lhs.coords[0] == t.sub(r1.coords[0], r2.coords[0])) && fail({FailureKind::Jacobi, {u, v, w}, 0})) {
            return finish();
          }
        }
      }
    }
    if (d % 2 == 0 && d >= 4 && !t.is_zero(m.derived_square(d / 2)) && fail({FailureKind::Alternating, {d / 2, d / 2}, 0})) {
      return finish();
    }
    for (int i = 2; 2 * i < d; ++i) {
      const int j = d - i;
      if (!t.is_zero(t.add(m.product(i, j), m.product(j, i))) && fail({FailureKind::Antisymmetry, {j, i}, 0})) return finish();
    }
  }
  if (options.window) {
    const WindowCheck wc = check_window(m.lines());
    if (!wc.ok) fail({FailureKind::Window, {}, wc.window_start});
  }
  return finish();
}

ValidationReport validate(MaxClassAlgebra& m, ValidateOptions options) {
  m.report_ = check(m, options);
  m.status_ = m.report_.ok ? AlgebraStatus::Validated : AlgebraStatus::Invalid;
  return m.report_;
}

WindowCheck check_window(const std::vector<CentraliserLine>& lines) {
  const int last = static_cast<int>(lines.size()) + 1;  // degree of the final line
  std::vector<CentraliserLine> seen;
  for (int first = 2; first <= last; ++first) {
    const auto& c = lines[first - 2];
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    const int t = first;
    for (int start = 2; start + t - 1 <= last; ++start) {
      bool hit = false;
      for (int j = start; j < start + t && !hit; ++j) hit = lines[j - 2] == c;
      if (!hit) return WindowCheck{false, t, start};
    }
  }
  return {};
}

WindowCheck check_window(const MaxClassAlgebra& m) { return check_window(m.lines()); }

std::vector<CentraliserLine> projective_points(const FieldTower& tower) {
  if (!tower.is_finite()) throw Error(Errc::UnsupportedInTranscendentalMode, "projective line over an infinite field");
  std::vector<CentraliserLine> points{CentraliserLine::y_line(tower)};
  for (std::uint64_t i = 0; i < tower.order(); ++i) points.push_back({tower.one(), tower.element_at(i)});
  std::sort(points.begin(), points.end(),
            [](const CentraliserLine& l, const CentraliserLine& r) { return l.encoding() < r.encoding(); });
  return points;
}

SearchResult search_sequences(const FieldTower& tower, int depth, int max_distinct, std::uint64_t budget) {
  if (!tower.is_finite()) throw Error(Errc::UnsupportedInTranscendentalMode, "search needs a finite tower");
  if (depth < 3) throw Error(Errc::TruncationTooSmall, "truncation depth must be at least 3");
  if (max_distinct < 1 || max_distinct > 2) throw Error(Errc::InvalidInput, "max_distinct must be 1 or 2");
  const auto points = projective_points(tower);
  SearchResult result;
  std::vector<CentraliserLine> prefix{CentraliserLine::y_line(tower)};

  auto distinct = [&] {
    std::vector<CentraliserLine> d;
    for (const auto& l : prefix) {
      if (std::find(d.begin(), d.end(), l) == d.end()) d.push_back(l);
    }
    return static_cast<int>(d.size());
  };

  std::function<void()> dfs = [&] {
    if (result.examined >= budget) {
      result.exhausted = true;
      return;
    }
    ++result.examined;
    const int n = static_cast<int>(prefix.size()) + 2;
    const MaxClassAlgebra m = build_from_centralisers(tower, prefix, n);
    if (!check(m, {.window = true, .stop_at_first = true}).ok) return;
    if (n == depth) {
      result.sequences.push_back(prefix);
      return;
    }
    for (const auto& p : points) {
      prefix.push_back(p);
      if (distinct() <= max_distinct) dfs();
      prefix.pop_back();
      if (result.exhausted) return;
    }
  };
  dfs();
  return result;
}

}  // namespace liemc
