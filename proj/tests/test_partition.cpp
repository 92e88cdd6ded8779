#include "doctest.h"

#include "jackkernel/partition.hpp"

using namespace jk;

TEST_CASE("partition statistics") {
    Partition p1 = Partition::of({1});
    CHECK(p1.z() == 1);
    CHECK(p1.conjugate() == p1);

    Partition p = Partition::of({2, 2, 1});
    CHECK(p.z() == 8); // 2! * 2^2 * 1! * 1
    CHECK(p.conjugate() == Partition::of({3, 2}));
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(2) == 2);

    Partition empty;
    CHECK(empty.z() == 1);
    CHECK(empty.conjugate() == empty);
    CHECK(empty.size() == 0);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition::of({1, 1}), Partition::of({2})));
    CHECK_FALSE(dominance_leq(Partition::of({2}), Partition::of({1, 1})));
    CHECK(dominance_leq(Partition::of({2, 1}), Partition::of({2, 1})));
    CHECK_FALSE(dominance_leq(Partition::of({2}), Partition::of({2, 1}))); // size mismatch
    CHECK(dominance_leq(Partition::of({2, 2}), Partition::of({3, 1})));
}

TEST_CASE("parsing follows the CLI grammar") {
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("2,1") == Partition::of({2, 1}));
    CHECK(Partition::parse("5") == Partition::of({5}));
    CHECK_THROWS_AS(Partition::parse("1,2"), Error);
    CHECK_THROWS_AS(Partition::parse("0"), Error);
    CHECK_THROWS_AS(Partition::parse("2,"), Error);
    CHECK_THROWS_AS(Partition::parse("a"), Error);
    CHECK_THROWS_AS(Partition::parse("2,,1"), Error);
}

TEST_CASE("enumeration counts match the partition numbers") {
    const unsigned expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (unsigned n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == expected[n]);
    CHECK(partitions_up_to(6).size() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
}

TEST_CASE("edit helpers") {
    Partition p = Partition::of({3, 2});
    CHECK(p.with_part(3) == Partition::of({3, 3, 2}));
    CHECK(p.without_part(2) == Partition::of({3}));
    CHECK(p.without_largest() == Partition::of({2}));
    CHECK(p.with_ones(2) == Partition::of({3, 2, 1, 1}));
    CHECK(Partition::of({2}).with_part(5) == Partition::of({5, 2}));
}
