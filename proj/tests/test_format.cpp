#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "rootpart/enumerate.hpp"
#include "rootpart/format.hpp"

using namespace rootpart;

TEST_CASE("parsing plain partitions") {
  CHECK(parse_partition("4,4,3,2,2,1,1") == Partition({4, 4, 3, 2, 2, 1, 1}));
  CHECK(parse_partition(" 4 , 4 , 2 ") == Partition({4, 4, 2}));
  CHECK(parse_partition("") == Partition());
  CHECK(parse_partition("(empty)") == Partition());
  CHECK(parse_partition("7") == Partition({7}));
}

TEST_CASE("parsing rejects malformed part lists") {
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("4,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("4,"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("9999999999"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("4,^4"), std::invalid_argument);
}

TEST_CASE("parsing rooted partitions") {
  const RootedPartition rho = parse_rooted("4,4,2,1,1,^1,1,1");
  CHECK(rho.base() == Partition({4, 4, 2, 1, 1, 1, 1, 1}));
  CHECK(rho.root_value() == 1);
  CHECK(rho.root_ordinal() == 3);

  CHECK(parse_rooted("^5") == RootedPartition(Partition({5}), 5, 1));
  CHECK(parse_rooted("5,^5") == RootedPartition(Partition({5, 5}), 5, 2));
  CHECK_THROWS_AS(parse_rooted("5,5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rooted("^5,^5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rooted("^4,5"), std::invalid_argument);
}

TEST_CASE("parsing image pairs") {
  const TotientImage image = parse_image("4,4,2,^2,2,2 r=1");
  CHECK(image.rooted == RootedPartition(Partition({4, 4, 2, 2, 2, 2}), 2, 2));
  CHECK(image.residue == 1);
  CHECK_THROWS_AS(parse_image("4,^4,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_image("4,^4 r=x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_image("4,4 r=1"), std::invalid_argument);
}

TEST_CASE("parsing signed-union elements") {
  CHECK(parse_q_element("3,1") == QElement::plain(Partition({3, 1})));
  CHECK(parse_q_element("") == QElement::plain(Partition()));
  CHECK(parse_q_element("3,^3") ==
        QElement::rooted(RootedPartition(Partition({3, 3}), 3, 2)));
}

TEST_CASE("formatting") {
  CHECK(format_partition(Partition()) == "(empty)");
  CHECK(format_partition(Partition({4, 2, 1})) == "4,2,1");
  CHECK(format_rooted(RootedPartition(Partition({4, 4, 2, 2, 2, 2}), 2, 2)) ==
        "4,4,2,^2,2,2");
  CHECK(format_image({RootedPartition(Partition({3}), 3, 1), 1}) == "^3 r=1");
  CHECK(format_q_element(QElement::plain(Partition())) == "plain (empty)");
  CHECK(format_q_element(QElement::rooted(RootedPartition(Partition({2, 2}), 2, 1))) ==
        "rooted ^2,2");
}

TEST_CASE("format and parse are mutually inverse") {
  for (int n = 0; n <= 8; ++n)
    for (const Partition& lambda : PartitionRange(n)) {
      CHECK(parse_partition(format_partition(lambda)) == lambda);
      for (const auto& [value, mult] : runs(lambda))
        for (int ordinal = 1; ordinal <= mult; ++ordinal) {
          const RootedPartition rho(lambda, value, ordinal);
          CHECK(parse_rooted(format_rooted(rho)) == rho);
        }
    }
}
