#include <doctest.h>

#include <algorithm>

#include "common.hpp"
#include "properties.hpp"

using namespace liemc;

namespace {

constexpr int kCases = 1000;

struct Tower {
  FieldTower t;
  oracle::GF f;
};

std::vector<Tower> towers() {
  return {{testing::gf4(), oracle::GF(2, {1, 1, 1})}, {testing::gf8(), oracle::GF(2, {1, 1, 0, 1})}};
}

Subfield rand_subfield(const FieldTower& t, props::Rng& rng) {
  return subfield_generated(t, {t.element_at(rng() % t.order())});
}

}  // namespace

TEST_CASE("span is canonical under recombination") {
  for (const auto& [t, f] : towers()) {
    props::Rng rng(1);
    for (int c = 0; c < kCases; ++c) {
      const int k = 1 + props::below(rng, 2);
      std::vector<FVec> rows;
      for (int r = props::below(rng, 2 * k * t.degree()) + 1; r > 0; --r) rows.push_back(props::rand_row(t, k, rng));
      const auto s = FSubspace::span(t, k, rows);
      // Add random combinations of rows, then shuffle.
      auto more = rows;
      for (int r = 0; r < 3; ++r) {
        FVec v(rows[0].size(), 0);
        for (const auto& row : rows)
          if (rng() & 1)
            for (std::size_t m = 0; m < v.size(); ++m) v[m] = t.gf().add(v[m], row[m]);
        more.push_back(v);
      }
      std::shuffle(more.begin(), more.end(), rng);
      const auto s2 = FSubspace::span(t, k, more);
      CHECK(s2 == s);
      CHECK(s2.basis() == s.basis());
      CHECK(oracle::log_p(f, props::to_set(f, s).size()) == s.rank());
    }
  }
}

TEST_CASE("sum and intersection agree with brute force") {
  for (const auto& [t, f] : towers()) {
    props::Rng rng(2);
    for (int c = 0; c < kCases; ++c) {
      const int k = 1 + props::below(rng, 2);
      const auto a = props::rand_space(t, k, rng, 1, k * t.degree());
      const auto b = props::rand_space(t, k, rng, 1, k * t.degree());
      const auto sa = props::to_set(f, a), sb = props::to_set(f, b);
      oracle::Set inter;
      for (const auto& v : sa)
        if (sb.count(v)) inter.insert(v);
      std::vector<oracle::Vec> gens(sa.begin(), sa.end());
      gens.insert(gens.end(), sb.begin(), sb.end());
      CHECK(props::to_set(f, intersect(a, b)) == inter);
      CHECK(props::to_set(f, sum(a, b)) == oracle::span(f, gens, static_cast<std::size_t>(k)));
      CHECK(sum(a, b).rank() + intersect(a, b).rank() == a.rank() + b.rank());
    }
  }
}

TEST_CASE("k_closure is the smallest K-space and is idempotent") {
  for (const auto& [t, f] : towers()) {
    props::Rng rng(3);
    for (int c = 0; c < kCases; ++c) {
      const auto k = rand_subfield(t, rng);
      const int amb = 1 + props::below(rng, 2);
      const auto u = props::rand_space(t, amb, rng, 1, amb * t.degree());
      const auto cl = k_closure(k, u);
      const auto kset = props::to_elems(f, k.space());
      const auto uset = props::to_set(f, u);
      CHECK(props::to_set(f, cl.closure) == props::scale_set(f, kset, uset, static_cast<std::size_t>(amb)));
      CHECK(cl.is_k_space == oracle::closed_under(f, uset, kset));
      const auto again = k_closure(k, cl.closure);
      CHECK(again.is_k_space);
      CHECK(again.closure == cl.closure);
      CHECK(dim_over(k, cl.closure) * k.degree() == cl.closure.rank());
    }
  }
}

TEST_CASE("stabilizer is the brute-force stabilizer and a subfield") {
  for (const auto& [t, f] : towers()) {
    props::Rng rng(4);
    for (int c = 0; c < kCases; ++c) {
      const int amb = 1 + props::below(rng, 2);
      const auto u = props::rand_space(t, amb, rng, 1, amb * t.degree());
      const auto s = stabilizer(u);
      CHECK(props::to_elems(f, s.ring) == oracle::stabilizer(f, props::to_set(f, u)));
      CHECK(s.is_field);
      CHECK(is_subfield(s.ring));
      CHECK(k_closure(Subfield::from_space(s.ring), u).is_k_space);
    }
  }
}

TEST_CASE("generated subfields and composita agree with brute-force closure") {
  for (const auto& [t, f] : towers()) {
    props::Rng rng(5);
    for (int c = 0; c < kCases; ++c) {
      std::vector<EElement> gens;
      std::set<int> ogens;
      for (int g = props::below(rng, 3); g >= 0; --g) {
        const auto e = t.element_at(rng() % t.order());
        gens.push_back(e);
        ogens.insert(f.from_lib(e));
      }
      const auto k = subfield_generated(t, gens);
      CHECK(props::to_elems(f, k.space()) == oracle::field_closure(f, ogens));
      CHECK(t.degree() % k.degree() == 0);

      const auto k2 = rand_subfield(t, rng);
      auto both = props::to_elems(f, k.space());
      for (int e : props::to_elems(f, k2.space())) both.insert(e);
      CHECK(props::to_elems(f, compositum(k, k2).space()) == oracle::field_closure(f, both));
    }
  }
}

TEST_CASE("a coset through 1 generates the same subfield") {
  for (const auto& [t, f] : towers()) {
    props::Rng rng(6);
    for (int c = 0; c < kCases; ++c) {
      std::vector<EElement> y{t.one()};
      for (int g = props::below(rng, 3); g >= 0; --g) y.push_back(t.element_at(rng() % t.order()));
      // u is the inverse of a nonzero element of Y, so 1 lies in X = Y u.
      EElement pick = y[rng() % y.size()];
      if (t.is_zero(pick)) pick = t.one();
      const auto u = t.inv(pick);
      std::vector<EElement> x;
      for (const auto& e : y) x.push_back(t.mul(e, u));
      CHECK(subfield_generated(t, x) == subfield_generated(t, y));
    }
  }
}
