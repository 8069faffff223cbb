#pragma once

#include <optional>
#include <vector>

#include "liemc/field_tower.hpp"
#include "liemc/fsubspace.hpp"

namespace liemc {

/// True when the F-subspace S of E (k = 1) contains 1 and is closed under
/// products of basis elements. Over a finite field that makes S a subfield.
bool is_subfield(const FSubspace& s);

/// An intermediate field F <= K <= E, held as its canonical F-basis inside E.
class Subfield {
 public:
  static Subfield prime(const FieldTower& tower);
  static Subfield whole(const FieldTower& tower);
  /// Throws InvalidInput when the space fails the subfield check.
  static Subfield from_space(FSubspace space);

  const FSubspace& space() const noexcept { return space_; }
  const FieldTower& tower() const noexcept { return space_.tower(); }
  /// [K:F].
  int degree() const noexcept { return space_.rank(); }
  std::vector<EElement> basis_elements() const;

  bool contains(const EElement& a) const { return space_.member(a.coeffs); }
  bool contains(const Subfield& other) const { return space_.contains(other.space_); }

  bool operator==(const Subfield& other) const { return space_ == other.space_; }

 private:
  explicit Subfield(FSubspace space) : space_(std::move(space)) {}
  FSubspace space_;
};

/// Smallest subfield of E containing S and 1: closes the F-span under
/// pairwise products until it stops growing.
Subfield subfield_generated(const FieldTower& tower, const std::vector<EElement>& generators);

Subfield compositum(const Subfield& a, const Subfield& b);

struct StabilizerReport {
  FSubspace ring;  // {beta in E : beta U <= U}, inside E (k = 1)
  bool is_field = false;
};

/// The ring of E-scalars preserving U. Solves beta * u_j in U for every
/// canonical basis vector u_j as one linear system in the F-coordinates of beta.
StabilizerReport stabilizer(const FSubspace& u);

struct KClosure {
  FSubspace closure;
  bool is_k_space = false;  // closure == input
};

/// Smallest K-invariant F-subspace containing U.
KClosure k_closure(const Subfield& k, const FSubspace& u);

/// dim_K U = dim_F U / [K:F]; throws NotKInvariant unless U is a K-space.
int dim_over(const Subfield& k, const FSubspace& u);

}  // namespace liemc
