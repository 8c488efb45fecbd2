#include "doctest.h"

#include "elspl/instance_io.hpp"
#include "support/test_instances.hpp"

using namespace elspl;

TEST_CASE("serialize then parse is the identity") {
  const Instance original = testing::standard_instance({3, 4});
  const Instance reparsed = parse_instance(serialize_instance(original));
  CHECK(reparsed == original);
}

TEST_CASE("round trip preserves concave tables") {
  InventoryModel inv;
  inv.hold_table = ConcaveCostTable{{5, 10}, {4, 3, 2}};
  inv.backlog_rate = 7;
  const Instance original(1, {0}, {100}, {{PieceCost{0, 0}}}, {inv});
  CHECK(parse_instance(serialize_instance(original)) == original);
}

TEST_CASE("parse rejects unknown fields by name") {
  const std::string text = R"({"horizon": 1, "demands": [1], "breakpoints": [5],
    "pieces": [[{"setup": 1, "unit": 1}]], "inventory": [{"hold": 1, "backlog": 1}],
    "horizont": 2})";
  CHECK_THROWS_WITH_AS((void)parse_instance(text),
                       doctest::Contains("horizont"), ParseError);
}

TEST_CASE("parse rejects malformed nested fields with location") {
  const std::string text = R"({"horizon": 1, "demands": [1], "breakpoints": [5],
    "pieces": [[{"setup": 1, "cost": 1}]], "inventory": [{"hold": 1, "backlog": 1}]})";
  CHECK_THROWS_WITH_AS((void)parse_instance(text),
                       doctest::Contains("pieces[0][0]"), ParseError);
}

TEST_CASE("parse rejects non-integer numbers") {
  const std::string text = R"({"horizon": 1, "demands": [1.5], "breakpoints": [5],
    "pieces": [[{"setup": 1, "unit": 1}]], "inventory": [{"hold": 1, "backlog": 1}]})";
  CHECK_THROWS_AS((void)parse_instance(text), ParseError);
}

TEST_CASE("a zero-horizon file parses but fails validation") {
  const std::string text = R"({"horizon": 0, "demands": [], "breakpoints": [5],
    "pieces": [], "inventory": []})";
  const Instance inst = parse_instance(text);
  CHECK(has_structural_violation(validate(inst)));
}

TEST_CASE("generator is deterministic and always valid") {
  for (int index = 0; index < 40; ++index) {
    const Instance a = testing::sweep_instance(11, index);
    const Instance b = testing::sweep_instance(11, index);
    CHECK(a == b);
    CHECK(validate(a).empty());
  }
}

TEST_CASE("generator handles the all-zero-demand corner") {
  GeneratorParams params;
  params.seed = 5;
  params.horizon = 4;
  params.breakpoints = 2;
  params.demand_max = 0;
  const Instance inst = generate_instance(params);
  CHECK(validate(inst).empty());
  CHECK(inst.total_demand() == 0);
  CHECK(inst.capacity() > inst.breakpoint(inst.breakpoint_count()));
}

TEST_CASE("digest is stable and content-sensitive") {
  const Instance a = testing::standard_instance({3, 4});
  const Instance b = testing::standard_instance({3, 5});
  CHECK(instance_digest(a) == instance_digest(a));
  CHECK(instance_digest(a) != instance_digest(b));
  CHECK(instance_digest(a).size() == 16);
}
