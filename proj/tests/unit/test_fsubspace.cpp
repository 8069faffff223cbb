#include <doctest.h>

#include "common.hpp"
#include "liemc/fsubspace.hpp"
#include "liemc/subfield.hpp"

using namespace liemc;

TEST_CASE("span") {
  const auto t = testing::gf4();
  CHECK(FSubspace::span(t, 2, {}).rank() == 0);
  CHECK(FSubspace::span(t, 2, {}).is_zero());
  // (1,0) and (alpha,0) flatten to [1,0,0,0] and [0,1,0,0].
  CHECK(FSubspace::span_points(t, 2, {{t.one(), t.zero()}, {t.alpha(), t.zero()}}).rank() == 2);
  CHECK(FSubspace::span_points(t, 2, {{t.one(), t.zero()}, {t.one(), t.zero()}}).rank() == 1);
  CHECK_ERRC(FSubspace::span(t, 2, {{1, 0, 0}}), Errc::AmbientMismatch);
  CHECK_ERRC(FSubspace(t, 0), Errc::InvalidInput);
}

TEST_CASE("basis is canonical RREF") {
  const auto t = testing::gf8();
  const auto a = FSubspace::span(t, 1, {{1, 1, 0}, {0, 1, 1}});
  const auto b = FSubspace::span(t, 1, {{1, 0, 1}, {1, 1, 0}});
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
  CHECK(a.basis() == std::vector<FVec>{{1, 0, 1}, {0, 1, 1}});
}

TEST_CASE("combine") {
  const auto t = testing::gf4();
  const auto a = FSubspace::span(t, 1, {{1, 0}, {0, 1}});
  const auto b = FSubspace::span(t, 1, {{0, 1}});
  CHECK(combine(CombineOp::Sum, a, FSubspace(t, 1)) == a);
  CHECK(combine(CombineOp::Intersect, a, a) == a);
  const auto i = combine(CombineOp::Intersect, a, b);
  CHECK(i.rank() == 1);
  CHECK(i == b);

  const auto t8 = testing::gf8();
  const auto u = FSubspace::span(t8, 1, {{1, 0, 0}, {0, 1, 0}});
  const auto v = FSubspace::span(t8, 1, {{0, 1, 0}, {0, 0, 1}});
  CHECK(intersect(u, v) == FSubspace::span(t8, 1, {{0, 1, 0}}));
  CHECK(sum(u, v).rank() == 3);
  CHECK_ERRC(sum(u, FSubspace(t8, 2)), Errc::AmbientMismatch);
  CHECK_ERRC(sum(u, FSubspace(t, 1)), Errc::TowerMismatch);
}

TEST_CASE("compare") {
  const auto t = testing::gf4();
  const auto a = FSubspace::span(t, 1, {{1, 0}, {0, 1}});
  CHECK(a.member(FVec{0, 0}));
  CHECK(FSubspace(t, 1).member(FVec{0, 0}));
  CHECK(a == a);
  CHECK(a.contains(FSubspace::span(t, 1, {{1, 1}})));
  CHECK_FALSE(FSubspace::span(t, 1, {{1, 0}}).contains(FSubspace::span(t, 1, {{1, 1}})));
}

TEST_CASE("scaled subspace") {
  const auto t = testing::gf4();
  const auto u = FSubspace::span(t, 1, {{1, 0}});
  CHECK(u.scaled(t.alpha()) == FSubspace::span(t, 1, {{0, 1}}));
  CHECK(u.scaled(t.zero()).is_zero());
}

TEST_CASE("k_closure") {
  const auto t = testing::gf4();
  const auto f = Subfield::prime(t);
  const auto e = Subfield::whole(t);
  const auto u = FSubspace::span(t, 1, {{1, 0}});

  auto c = k_closure(f, u);
  CHECK(c.closure == u);
  CHECK(c.is_k_space);

  c = k_closure(e, u);
  CHECK(c.closure.rank() == 2);
  CHECK_FALSE(c.is_k_space);

  c = k_closure(e, FSubspace::span(t, 1, {{1, 0}, {0, 1}}));
  CHECK(c.closure.rank() == 2);
  CHECK(c.is_k_space);
}

TEST_CASE("dim_over") {
  const auto t = testing::gf4();
  const auto f = Subfield::prime(t);
  const auto e = Subfield::whole(t);
  const auto u = FSubspace::span(t, 2, {{1, 0, 0, 0}, {0, 0, 1, 1}});
  CHECK(dim_over(f, u) == u.rank());
  CHECK(dim_over(e, FSubspace::full(t, 1)) == 1);
  CHECK(dim_over(e, FSubspace::span(t, 2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})) == 2);
  CHECK_ERRC(dim_over(e, u), Errc::NotKInvariant);
}

TEST_CASE("rref and left kernel over GF(3)") {
  const PrimeField f(3);
  const auto r = rref({{2, 1, 0}, {1, 2, 0}, {0, 0, 2}}, f);
  // Second row is twice the first: rank 2.
  CHECK(r == std::vector<FVec>{{1, 2, 0}, {0, 0, 1}});
  const auto k = left_kernel({{2, 1, 0}, {1, 2, 0}, {0, 0, 2}}, 3, f);
  REQUIRE(k.size() == 1);
  // 1·row0 + 1·row1 = (3, 3, 0) = 0.
  CHECK(k[0] == FVec{1, 1, 0});
}
