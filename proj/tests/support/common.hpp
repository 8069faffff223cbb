#pragma once

#include <doctest.h>

#include "liemc/error.hpp"
#include "liemc/field_tower.hpp"

#define CHECK_ERRC(expr, errc)                                      \
  do {                                                              \
    bool thrown_ = false;                                           \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const liemc::Error& e_) {                              \
      thrown_ = true;                                               \
      CHECK_MESSAGE(e_.code() == (errc), "got " << e_.what());      \
    }                                                               \
    CHECK_MESSAGE(thrown_, "expected " << liemc::to_string(errc));  \
  } while (0)

namespace testing {

inline liemc::FieldTower gf2() { return liemc::FieldTower::finite(2, {1, 1}); }
inline liemc::FieldTower gf4() { return liemc::FieldTower::finite(2, {1, 1, 1}); }
inline liemc::FieldTower gf8() { return liemc::FieldTower::finite(2, {1, 1, 0, 1}); }
inline liemc::FieldTower gf16() { return liemc::FieldTower::finite(2, {1, 1, 0, 0, 1}); }
inline liemc::FieldTower gf64() { return liemc::FieldTower::finite(2, {1, 1, 0, 0, 0, 0, 1}); }

inline liemc::EElement el(const liemc::FieldTower& t, liemc::FVec c) { return t.element(c); }

}  // namespace testing
