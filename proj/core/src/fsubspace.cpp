#include "liemc/fsubspace.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace liemc {

FVec flatten(const EPoint& point) {
  FVec v;
  for (const auto& e : point) v.insert(v.end(), e.coeffs.begin(), e.coeffs.end());
  return v;
}

EPoint unflatten(const FieldTower& tower, const FVec& v, int k) {
  const int w = tower.width();
  if (static_cast<int>(v.size()) != k * w) throw Error(Errc::AmbientMismatch, "vector length does not match E^k");
  EPoint p;
  p.reserve(k);
  for (int i = 0; i < k; ++i) p.push_back(EElement{FVec(v.begin() + i * w, v.begin() + (i + 1) * w)});
  return p;
}

FVec scale_point(const FieldTower& tower, const EElement& beta, const FVec& v, int k) {
  EPoint p = unflatten(tower, v, k);
  for (auto& e : p) e = tower.mul(beta, e);
  return flatten(p);
}

std::vector<FVec> rref(std::vector<FVec> rows, const PrimeField& gf) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar inv = gf.inv(rows[rank][col]);
    for (auto& c : rows[rank]) c = gf.mul(c, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Scalar f = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] = gf.sub(rows[r][c], gf.mul(f, rows[rank][c]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<FVec> left_kernel(const std::vector<FVec>& rows, std::size_t ncols, const PrimeField& gf) {
  const std::size_t m = rows.size();
  std::vector<FVec> aug;
  aug.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    FVec r(ncols + m, 0);
    std::copy(rows[i].begin(), rows[i].end(), r.begin());
    r[ncols + i] = 1;
    aug.push_back(std::move(r));
  }
  aug = rref(std::move(aug), gf);
  std::vector<FVec> kernel;
  for (const auto& r : aug) {
    if (std::all_of(r.begin(), r.begin() + ncols, [](Scalar c) { return c == 0; })) {
      kernel.emplace_back(r.begin() + ncols, r.end());
    }
  }
  return rref(std::move(kernel), gf);
}

FSubspace::FSubspace(FieldTower tower, int k) : tower_(std::move(tower)), k_(k) {
  if (k < 1) throw Error(Errc::InvalidInput, "ambient E^k needs k >= 1");
}

void FSubspace::set_basis(std::vector<FVec> rows) {
  basis_ = rref(std::move(rows), tower_.gf());
  pivots_.clear();
  for (const auto& r : basis_) {
    pivots_.push_back(static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](Scalar c) { return c != 0; }) - r.begin()));
  }
}

FSubspace FSubspace::span(FieldTower tower, int k, const std::vector<FVec>& vectors) {
  FSubspace s(std::move(tower), k);
  for (const auto& v : vectors) s.check_vector(v);
  s.set_basis(vectors);
  return s;
}

FSubspace FSubspace::span_points(FieldTower tower, int k, const std::vector<EPoint>& points) {
  std::vector<FVec> vs;
  vs.reserve(points.size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != k) throw Error(Errc::AmbientMismatch, "point has wrong number of coordinates");
    for (const auto& e : p) tower.check(e);
    vs.push_back(flatten(p));
  }
  return span(std::move(tower), k, vs);
}

FSubspace FSubspace::full(FieldTower tower, int k) {
  const int n = k * tower.width();
  std::vector<FVec> id(n, FVec(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return span(std::move(tower), k, id);
}

void FSubspace::check_vector(const FVec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim()) {
    throw Error(Errc::AmbientMismatch, "vector of length " + std::to_string(v.size()) + " in ambient of dimension " +
                                           std::to_string(ambient_dim()));
  }
  for (auto c : v) {
    if (c >= tower_.p()) throw Error(Errc::TowerMismatch, "coordinate not reduced mod p");
  }
}

void FSubspace::check_same_ambient(const FSubspace& other) const {
  if (!(tower_ == other.tower_)) throw Error(Errc::TowerMismatch, "subspaces over different towers");
  if (k_ != other.k_) throw Error(Errc::AmbientMismatch, "subspaces of E^k for different k");
}

FVec FSubspace::reduce(FVec v) const {
  check_vector(v);
  const auto& gf = tower_.gf();
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Scalar f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t c = pivots_[r]; c < v.size(); ++c) v[c] = gf.sub(v[c], gf.mul(f, basis_[r][c]));
  }
  return v;
}

bool FSubspace::member(const FVec& v) const {
  const FVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Scalar c) { return c == 0; });
}

bool FSubspace::contains(const FSubspace& other) const {
  check_same_ambient(other);
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const FVec& v) { return member(v); });
}

FSubspace FSubspace::scaled(const EElement& beta) const {
  std::vector<FVec> rows;
  rows.reserve(basis_.size());
  for (const auto& v : basis_) rows.push_back(scale_point(tower_, beta, v, k_));
  return span(tower_, k_, rows);
}

bool FSubspace::operator==(const FSubspace& other) const {
  return tower_ == other.tower_ && k_ == other.k_ && basis_ == other.basis_;
}

FSubspace sum(const FSubspace& a, const FSubspace& b) {
  a.check_same_ambient(b);
  std::vector<FVec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return FSubspace::span(a.tower(), a.ambient_k(), rows);
}

// Zassenhaus: reduce [a | a] and [b | 0]; rows with zero left half carry A cap B.
FSubspace intersect(const FSubspace& a, const FSubspace& b) {
  a.check_same_ambient(b);
  const std::size_t n = static_cast<std::size_t>(a.ambient_dim());
  std::vector<FVec> rows;
  for (const auto& v : a.basis()) {
    FVec r(v);
    r.insert(r.end(), v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  for (const auto& v : b.basis()) {
    FVec r(v);
    r.resize(2 * n, 0);
    rows.push_back(std::move(r));
  }
  rows = rref(std::move(rows), a.tower().gf());
  std::vector<FVec> common;
  for (const auto& r : rows) {
    if (std::all_of(r.begin(), r.begin() + n, [](Scalar c) { return c == 0; })) common.emplace_back(r.begin() + n, r.end());
  }
  return FSubspace::span(a.tower(), a.ambient_k(), common);
}

FSubspace combine(CombineOp op, const FSubspace& a, const FSubspace& b) {
  return op == CombineOp::Sum ? sum(a, b) : intersect(a, b);
}

}  // namespace liemc
