#include "liemc/field_tower.hpp"

#include <algorithm>
#include <string>

namespace liemc {

struct FieldTower::Data {
  PrimeField gf;
  TowerMode mode;
  FVec minpoly;  // monic, low-to-high; empty in transcendental mode
  int width;
};

namespace {

int poly_degree(const FVec& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

// Remainder of a modulo the monic polynomial m.
FVec poly_mod(FVec a, const FVec& m, const PrimeField& gf) {
  const int dm = poly_degree(m);
  for (int i = poly_degree(a); i >= dm; --i) {
    const Scalar c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = gf.sub(a[i - dm + j], gf.mul(c, m[j]));
    }
  }
  a.resize(std::max(dm, 0));
  return a;
}

// Every monic polynomial of degree k divides m only if m is reducible; we
// only need to try k <= deg(m) / 2.
bool is_irreducible(const FVec& m, const PrimeField& gf) {
  const int d = poly_degree(m);
  const Scalar p = gf.p();
  for (int k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    FVec g(k + 1, 0);
    g[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<Scalar>(v % p);
        v /= p;
      }
      const FVec r = poly_mod(m, g, gf);
      if (std::all_of(r.begin(), r.end(), [](Scalar c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(Errc::ZeroInverse, "inverse of 0 in GF(" + std::to_string(p_) + ")");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

FieldTower FieldTower::finite(Scalar p, FVec minpoly) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  for (auto& c : minpoly) {
    if (c >= p) throw Error(Errc::InvalidInput, "minpoly coefficient not reduced mod p");
  }
  while (!minpoly.empty() && minpoly.back() == 0) minpoly.pop_back();
  if (minpoly.size() < 2) throw Error(Errc::NonMonicPolynomial, "minpoly must have degree >= 1");
  if (minpoly.back() != 1) throw Error(Errc::NonMonicPolynomial, "leading coefficient must be 1");
  PrimeField gf(p);
  if (!is_irreducible(minpoly, gf)) throw Error(Errc::ReduciblePolynomial, "minpoly is reducible over GF(" + std::to_string(p) + ")");
  const int d = static_cast<int>(minpoly.size()) - 1;
  return FieldTower(std::make_shared<const Data>(Data{gf, TowerMode::Finite, std::move(minpoly), d}));
}

FieldTower FieldTower::transcendental(Scalar p, int cap) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (cap <= 0) throw Error(Errc::InvalidInput, "transcendental cap must be positive");
  return FieldTower(std::make_shared<const Data>(Data{PrimeField(p), TowerMode::Transcendental, {}, cap + 1}));
}

Scalar FieldTower::p() const noexcept { return data_->gf.p(); }
TowerMode FieldTower::mode() const noexcept { return data_->mode; }
int FieldTower::width() const noexcept { return data_->width; }
const FVec& FieldTower::minpoly() const noexcept { return data_->minpoly; }
const PrimeField& FieldTower::gf() const noexcept { return data_->gf; }

int FieldTower::degree() const {
  if (!is_finite()) throw Error(Errc::UnsupportedInTranscendentalMode, "[E:F] is infinite");
  return data_->width;
}

int FieldTower::cap() const {
  if (is_finite()) throw Error(Errc::InvalidInput, "finite tower has no degree cap");
  return data_->width - 1;
}

std::uint64_t FieldTower::order() const {
  std::uint64_t q = 1;
  for (int i = 0; i < degree(); ++i) q *= p();
  return q;
}

EElement FieldTower::zero() const { return EElement{FVec(width(), 0)}; }

EElement FieldTower::one() const { return constant(1); }

EElement FieldTower::constant(Scalar c) const {
  EElement e = zero();
  e.coeffs[0] = c % p();
  return e;
}

EElement FieldTower::alpha() const { return element(FVec{0, 1}); }

EElement FieldTower::element(const FVec& coeffs) const {
  FVec c(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), c.begin(), [&](Scalar v) { return v % p(); });
  if (static_cast<int>(c.size()) > width()) {
    if (is_finite()) {
      c = poly_mod(std::move(c), minpoly(), gf());
    } else if (poly_degree(c) >= width()) {
      throw Error(Errc::DegreeCapExceeded, "element degree exceeds cap");
    }
  }
  c.resize(width(), 0);
  return EElement{std::move(c)};
}

EElement FieldTower::element_at(std::uint64_t index) const {
  EElement e = zero();
  for (int i = 0; i < width(); ++i) {
    e.coeffs[i] = static_cast<Scalar>(index % p());
    index /= p();
  }
  return e;
}

void FieldTower::check(const EElement& a) const {
  if (static_cast<int>(a.coeffs.size()) != width() ||
      std::any_of(a.coeffs.begin(), a.coeffs.end(), [&](Scalar c) { return c >= p(); })) {
    throw Error(Errc::TowerMismatch, "element does not belong to this tower");
  }
}

bool FieldTower::is_zero(const EElement& a) const {
  check(a);
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](Scalar c) { return c == 0; });
}

EElement FieldTower::add(const EElement& a, const EElement& b) const {
  check(a);
  check(b);
  EElement r = zero();
  for (int i = 0; i < width(); ++i) r.coeffs[i] = gf().add(a.coeffs[i], b.coeffs[i]);
  return r;
}

EElement FieldTower::sub(const EElement& a, const EElement& b) const {
  check(a);
  check(b);
  EElement r = zero();
  for (int i = 0; i < width(); ++i) r.coeffs[i] = gf().sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

EElement FieldTower::neg(const EElement& a) const {
  check(a);
  EElement r = zero();
  for (int i = 0; i < width(); ++i) r.coeffs[i] = gf().neg(a.coeffs[i]);
  return r;
}

EElement FieldTower::scale(Scalar c, const EElement& a) const {
  check(a);
  EElement r = zero();
  for (int i = 0; i < width(); ++i) r.coeffs[i] = gf().mul(c % p(), a.coeffs[i]);
  return r;
}

EElement FieldTower::mul(const EElement& a, const EElement& b) const {
  check(a);
  check(b);
  const int w = width();
  FVec prod(2 * w - 1, 0);
  for (int i = 0; i < w; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < w; ++j) {
      if (b.coeffs[j] == 0) continue;
      prod[i + j] = gf().add(prod[i + j], gf().mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  if (is_finite()) return EElement{poly_mod(std::move(prod), minpoly(), gf())};
  if (poly_degree(prod) >= w) throw Error(Errc::DegreeCapExceeded, "product degree exceeds cap " + std::to_string(w - 1));
  prod.resize(w);
  return EElement{std::move(prod)};
}

EElement FieldTower::pow(const EElement& a, std::uint64_t n) const {
  EElement result = one(), base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

EElement FieldTower::inv(const EElement& a) const {
  if (!is_finite()) throw Error(Errc::UnsupportedInTranscendentalMode, "inverses need a finite tower");
  if (is_zero(a)) throw Error(Errc::ZeroInverse, "inverse of 0");
  return pow(a, order() - 2);
}

bool FieldTower::operator==(const FieldTower& other) const noexcept {
  if (data_ == other.data_) return true;
  return p() == other.p() && mode() == other.mode() && width() == other.width() &&
         minpoly() == other.minpoly();
}

EElement arith(const FieldTower& tower, ArithOp op, const EElement& a, const std::optional<EElement>& b) {
  auto need_b = [&]() -> const EElement& {
    if (!b) throw Error(Errc::InvalidInput, "binary operation needs two operands");
    return *b;
  };
  switch (op) {
    case ArithOp::Add: return tower.add(a, need_b());
    case ArithOp::Mul: return tower.mul(a, need_b());
    case ArithOp::Neg: return tower.neg(a);
    case ArithOp::Inv: return tower.inv(a);
  }
  throw Error(Errc::InvalidInput, "unknown arithmetic op");
}

}  // namespace liemc
