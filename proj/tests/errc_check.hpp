#ifndef G9_TESTS_ERRC_CHECK_HPP
#define G9_TESTS_ERRC_CHECK_HPP

#include <doctest.h>

#include "g9/error.hpp"

// CHECK that expr throws g9::Error carrying the given code.
#define CHECK_ERRC(expr, errc)                                   \
  do {                                                           \
    bool g9_thrown_ = false;                                     \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const g9::Error& g9_e_) {                           \
      g9_thrown_ = true;                                         \
      CHECK_MESSAGE(g9_e_.code() == (errc), g9_e_.what());       \
    }                                                            \
    CHECK_MESSAGE(g9_thrown_, "expected g9::Error from " #expr); \
  } while (0)

#endif  // G9_TESTS_ERRC_CHECK_HPP
