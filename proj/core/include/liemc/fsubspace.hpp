#pragma once

#include <vector>

#include "liemc/field_tower.hpp"

namespace liemc {

/// A point of E^k, one EElement per E-coordinate.
using EPoint = std::vector<EElement>;

/// E^k -> F^{k*w}: the w F-coordinates of each E-coordinate, coordinate 0 first.
FVec flatten(const EPoint& point);
EPoint unflatten(const FieldTower& tower, const FVec& v, int k);

/// beta * v for v in E^k given in flattened form.
FVec scale_point(const FieldTower& tower, const EElement& beta, const FVec& v, int k);

/// Reduced row echelon form over GF(p): leftmost pivots, pivots equal to 1,
/// zero rows removed.
std::vector<FVec> rref(std::vector<FVec> rows, const PrimeField& gf);

/// Basis of {c in F^m : sum_i c_i rows_i = 0}, in RREF.
std::vector<FVec> left_kernel(const std::vector<FVec>& rows, std::size_t ncols, const PrimeField& gf);

/// An F-subspace of E^k in canonical form. Two subspaces are equal iff their
/// basis matrices are identical.
class FSubspace {
 public:
  /// The zero subspace of E^k.
  FSubspace(FieldTower tower, int k);

  static FSubspace span(FieldTower tower, int k, const std::vector<FVec>& vectors);
  static FSubspace span_points(FieldTower tower, int k, const std::vector<EPoint>& points);
  /// E^k itself, as an F-space (finite mode).
  static FSubspace full(FieldTower tower, int k);

  const FieldTower& tower() const noexcept { return tower_; }
  int ambient_k() const noexcept { return k_; }
  int ambient_dim() const noexcept { return k_ * tower_.width(); }
  int rank() const noexcept { return static_cast<int>(basis_.size()); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<FVec>& basis() const noexcept { return basis_; }
  EPoint basis_point(int row) const { return unflatten(tower_, basis_.at(row), k_); }

  /// Remainder of v modulo the subspace; zero iff v is a member.
  FVec reduce(FVec v) const;
  bool member(const FVec& v) const;
  bool member(const EPoint& p) const { return member(flatten(p)); }
  bool contains(const FSubspace& other) const;

  /// beta * U.
  FSubspace scaled(const EElement& beta) const;

  bool operator==(const FSubspace& other) const;

  /// Throws AmbientMismatch unless other lives in the same E^k.
  void check_same_ambient(const FSubspace& other) const;
  void check_vector(const FVec& v) const;

 private:
  FieldTower tower_;
  int k_;
  std::vector<FVec> basis_;
  std::vector<std::size_t> pivots_;

  void set_basis(std::vector<FVec> rows);
};

FSubspace sum(const FSubspace& a, const FSubspace& b);
FSubspace intersect(const FSubspace& a, const FSubspace& b);

enum class CombineOp { Sum, Intersect };
FSubspace combine(CombineOp op, const FSubspace& a, const FSubspace& b);

}  // namespace liemc
