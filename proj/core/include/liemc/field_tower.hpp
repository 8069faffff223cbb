#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "liemc/error.hpp"

namespace liemc {

using Scalar = std::uint32_t;

/// A vector over the prime field, stored as residues in [0, p).
using FVec = std::vector<Scalar>;

/// Arithmetic in GF(p).
class PrimeField {
 public:
  explicit PrimeField(Scalar p) : p_(p) {}

  Scalar p() const noexcept { return p_; }
  Scalar add(Scalar a, Scalar b) const noexcept {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(((v % m) + m) % m);
  }

 private:
  Scalar p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of E, as a polynomial in alpha with coefficients low-to-high.
/// The coefficient vector always has the tower's full width, so equality of
/// elements is equality of vectors.
struct EElement {
  FVec coeffs;

  bool operator==(const EElement&) const = default;
  auto operator<=>(const EElement&) const = default;
};

enum class TowerMode { Finite, Transcendental };

/// The extension E = GF(p)[alpha]/(m(alpha)) over its prime field, or the
/// polynomial ring GF(p)[alpha] truncated at a degree cap ("transcendental").
///
/// Towers are cheap handles to shared immutable data; copies compare equal.
class FieldTower {
 public:
  static FieldTower finite(Scalar p, FVec minpoly);
  static FieldTower transcendental(Scalar p, int cap);

  Scalar p() const noexcept;
  TowerMode mode() const noexcept;
  bool is_finite() const noexcept { return mode() == TowerMode::Finite; }

  /// [E:F] in finite mode.
  int degree() const;
  /// Maximum alpha-degree tracked in transcendental mode.
  int cap() const;
  /// Number of F-coordinates of an element: d (finite) or cap + 1.
  int width() const noexcept;
  /// Empty in transcendental mode.
  const FVec& minpoly() const noexcept;
  const PrimeField& gf() const noexcept;

  /// |E| in finite mode.
  std::uint64_t order() const;

  EElement zero() const;
  EElement one() const;
  EElement alpha() const;
  EElement constant(Scalar c) const;
  /// Builds an element from low-to-high coefficients. Shorter inputs are
  /// zero-padded; in finite mode longer inputs are reduced mod minpoly.
  EElement element(const FVec& coeffs) const;
  /// The index-th element in base-p digit order (finite mode).
  EElement element_at(std::uint64_t index) const;

  bool is_zero(const EElement& a) const;
  EElement add(const EElement& a, const EElement& b) const;
  EElement sub(const EElement& a, const EElement& b) const;
  EElement neg(const EElement& a) const;
  EElement mul(const EElement& a, const EElement& b) const;
  EElement scale(Scalar c, const EElement& a) const;
  EElement inv(const EElement& a) const;
  EElement pow(const EElement& a, std::uint64_t n) const;

  /// Throws TowerMismatch when the element does not have this tower's shape.
  void check(const EElement& a) const;

  bool operator==(const FieldTower& other) const noexcept;

 private:
  struct Data;
  explicit FieldTower(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

enum class ArithOp { Add, Mul, Neg, Inv };

/// Single entry point over the field operations; b is required for Add/Mul.
EElement arith(const FieldTower& tower, ArithOp op, const EElement& a,
               const std::optional<EElement>& b = std::nullopt);

}  // namespace liemc
