#include <doctest.h>

#include "property_suites.hpp"

TEST_CASE("property suites, 10^4 cases each") {
  for (const auto& o : properties::run_all(10000, 0x5eed2024ULL)) {
    INFO(o.name);
    CHECK(o.cases == 10000);
    CHECK(o.failures == 0);
  }
}

TEST_CASE("further identities") {
  for (const auto& o : properties::run_extra(2000, 77)) {
    INFO(o.name);
    CHECK(o.failures == 0);
  }
}
