#pragma once

#include <doctest.h>

#include "cheb/errors.hpp"
#include "cheb/fields.hpp"

namespace test {

inline const cheb::Catalog& catalog() {
  static const cheb::Catalog c = cheb::load_catalog(CHEB_TEST_CATALOG);
  return c;
}

inline const cheb::FieldDescriptor& field(const char* name) { return catalog().find(name); }

inline const cheb::PrimeSieve& sieve() {
  static const cheb::PrimeSieve s(1'100'000);
  return s;
}

template <class F>
cheb::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const cheb::Error& e) {
    return e.code();
  }
  FAIL("expected a cheb::Error");
  return cheb::ErrorCode::InvalidArgument;
}

}  // namespace test
