#include <doctest.h>

#include "properties.hpp"

using namespace dreduce::testing;

TEST_CASE("kernel properties hold on a quick random sample") {
  for (const auto& p : kernel_properties(300, 7)) {
    INFO(p.name << ": " << p.first_failure);
    CHECK(p.ok());
  }
}
