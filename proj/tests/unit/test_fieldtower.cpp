#include <doctest.h>

#include "common.hpp"
#include "liemc/fsubspace.hpp"
#include "liemc/subfield.hpp"

using namespace liemc;
using testing::el;

TEST_CASE("tower construction") {
  const auto t = testing::gf4();
  CHECK(t.p() == 2);
  CHECK(t.degree() == 2);
  CHECK(t.order() == 4);
  CHECK(t.minpoly() == FVec{1, 1, 1});

  CHECK_ERRC(FieldTower::finite(2, {1, 0, 1}), Errc::ReduciblePolynomial);
  CHECK_ERRC(FieldTower::finite(4, {1, 1, 1}), Errc::NonPrimeCharacteristic);
  CHECK_ERRC(FieldTower::finite(3, {1, 1, 2}), Errc::NonMonicPolynomial);
  CHECK_ERRC(FieldTower::finite(2, {0, 0, 1}), Errc::ReduciblePolynomial);

  const auto tr = FieldTower::transcendental(2, 16);
  CHECK_FALSE(tr.is_finite());
  CHECK(tr.cap() == 16);
  CHECK(tr.width() == 17);
  CHECK_ERRC(tr.degree(), Errc::UnsupportedInTranscendentalMode);
  CHECK_ERRC(FieldTower::transcendental(2, 0), Errc::InvalidInput);
}

TEST_CASE("irreducibility by degree") {
  // x^3 + x + 1 and x^4 + x + 1 are irreducible; x^4 + x^2 + 1 = (x^2 + x + 1)^2.
  CHECK_NOTHROW(FieldTower::finite(2, {1, 1, 0, 1}));
  CHECK_NOTHROW(FieldTower::finite(2, {1, 1, 0, 0, 1}));
  CHECK_ERRC(FieldTower::finite(2, {1, 0, 1, 0, 1}), Errc::ReduciblePolynomial);
  // x^2 + 1 over GF(3) is irreducible; x^2 + 2 = (x + 1)(x + 2) is not.
  CHECK_NOTHROW(FieldTower::finite(3, {1, 0, 1}));
  CHECK_ERRC(FieldTower::finite(3, {2, 0, 1}), Errc::ReduciblePolynomial);
  // Degree 1 gives E = F.
  CHECK(FieldTower::finite(5, {3, 1}).order() == 5);
}

TEST_CASE("GF(4) arithmetic") {
  const auto t = testing::gf4();
  const auto a = t.alpha();
  const auto a1 = el(t, {1, 1});
  CHECK(t.mul(a, a) == a1);
  CHECK(t.inv(a) == a1);
  CHECK(t.mul(a, a1) == t.one());
  CHECK(arith(t, ArithOp::Mul, a, a) == a1);
  CHECK(arith(t, ArithOp::Inv, a) == a1);
  CHECK(arith(t, ArithOp::Add, a, arith(t, ArithOp::Neg, a)) == t.zero());
  CHECK_ERRC(t.inv(t.zero()), Errc::ZeroInverse);
  CHECK_ERRC(arith(t, ArithOp::Add, a), Errc::InvalidInput);
}

TEST_CASE("add(a, neg(a)) = 0 in every element of small towers") {
  for (const auto& t : {testing::gf4(), testing::gf8(), FieldTower::finite(3, {1, 0, 1})}) {
    for (std::uint64_t i = 0; i < t.order(); ++i) {
      const auto a = t.element_at(i);
      CHECK(t.is_zero(t.add(a, t.neg(a))));
      if (!t.is_zero(a)) CHECK(t.mul(a, t.inv(a)) == t.one());
    }
  }
}

TEST_CASE("transcendental arithmetic respects the cap") {
  const auto t = FieldTower::transcendental(2, 4);
  const auto a2 = t.mul(t.alpha(), t.alpha());
  CHECK(a2 == t.element({0, 0, 1}));
  CHECK(t.mul(a2, a2) == t.element({0, 0, 0, 0, 1}));
  CHECK_ERRC(t.mul(a2, t.mul(a2, t.alpha())), Errc::DegreeCapExceeded);
  CHECK_ERRC(t.inv(t.alpha()), Errc::UnsupportedInTranscendentalMode);
}

TEST_CASE("mixing towers is rejected") {
  const auto a = testing::gf4();
  const auto b = testing::gf8();
  CHECK_ERRC(a.add(a.one(), b.alpha()), Errc::TowerMismatch);
  CHECK(a == testing::gf4());
  CHECK_FALSE(a == b);
}

TEST_CASE("stabilizer examples") {
  const auto t = testing::gf4();
  // F·1 inside E
  auto r = stabilizer(FSubspace::span(t, 1, {{1, 0}}));
  CHECK(r.is_field);
  CHECK(r.ring == Subfield::prime(t).space());
  // U = 0
  r = stabilizer(FSubspace(t, 1));
  CHECK(r.ring == FSubspace::full(t, 1));
  // F-span{(1,0),(0,1)} in E^2: alpha (1,0) = (alpha,0) is outside.
  r = stabilizer(FSubspace::span(t, 2, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  CHECK(r.ring.rank() == 1);
  CHECK(r.ring.member(FVec{1, 0}));
}

TEST_CASE("subfield generation") {
  const auto t4 = testing::gf4();
  CHECK(subfield_generated(t4, {t4.one()}).degree() == 1);
  CHECK(subfield_generated(t4, {t4.alpha()}).degree() == 2);

  const auto t16 = testing::gf16();
  const auto g = el(t16, {0, 1, 1, 0});  // a^2 + a
  const auto k = subfield_generated(t16, {g});
  CHECK(k.degree() == 2);
  for (const auto& e : {t16.zero(), t16.one(), g, el(t16, {1, 1, 1, 0})}) CHECK(k.contains(e));
  CHECK_FALSE(k.contains(t16.alpha()));
  CHECK(t16.pow(g, 3) == t16.one());
}

TEST_CASE("compositum") {
  const auto t4 = testing::gf4();
  const auto f = Subfield::prime(t4);
  CHECK(compositum(f, f) == f);
  CHECK(compositum(f, Subfield::whole(t4)) == Subfield::whole(t4));

  const auto t64 = testing::gf64();
  // a^21 has order 3 and generates GF(4); a^9 has order 7 and generates GF(8).
  const auto k2 = subfield_generated(t64, {t64.pow(t64.alpha(), 21)});
  const auto k3 = subfield_generated(t64, {t64.pow(t64.alpha(), 9)});
  CHECK(k2.degree() == 2);
  CHECK(k3.degree() == 3);
  CHECK(compositum(k2, k3).degree() == 6);
  CHECK(compositum(k2, k3) == Subfield::whole(t64));
}

TEST_CASE("subfield degrees divide d") {
  const auto t64 = testing::gf64();
  for (std::uint64_t i = 1; i < t64.order(); ++i) {
    const int deg = subfield_generated(t64, {t64.element_at(i)}).degree();
    CHECK(6 % deg == 0);
  }
}

TEST_CASE("from_space rejects non-fields") {
  const auto t = testing::gf4();
  CHECK_ERRC(Subfield::from_space(FSubspace::span(t, 1, {{0, 1}})), Errc::InvalidInput);
  CHECK(is_subfield(FSubspace::span(t, 1, {{1, 0}})));
  CHECK_FALSE(is_subfield(FSubspace::span(t, 1, {{0, 1}})));
}
