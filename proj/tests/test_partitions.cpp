#include <gtest/gtest.h>

#include <winf/partition.hpp>

#include "oracles.hpp"

using namespace winf;
using oracle::P;

TEST(Partitions, CanonicalizeDropsZerosAndSorts) {
    EXPECT_EQ(Partition::canonicalize({1, 2, 0, 2}), P({2, 2, 1}));
    EXPECT_TRUE(Partition::canonicalize({}).empty());
    EXPECT_EQ(Partition::canonicalize({3}).parts(), std::vector<int>{3});
    EXPECT_THROW(Partition::canonicalize({2, -1}), invalid_input);
}

TEST(Partitions, DerivedQuantities) {
    const auto d = P({3, 2, 2, 1});
    EXPECT_EQ(d.size(), 8);
    EXPECT_EQ(d.length(), 4);
    EXPECT_EQ(d.product(), 12);
    EXPECT_EQ(d.multiplicity(2), 2);
    EXPECT_EQ(d.multiplicity(5), 0);
    EXPECT_EQ(d.centralizer(), 24);
    EXPECT_EQ(d.shifted_to(10), P({3, 2, 2, 1, 1, 1}));
    EXPECT_EQ(d.without_ones(), P({3, 2, 2}));
}

TEST(Partitions, AddAndSub) {
    EXPECT_EQ(add(P({2, 1}), P({1})), P({2, 1, 1}));
    EXPECT_EQ(sub(P({2, 1, 1}), P({1, 1})), P({2}));
    EXPECT_FALSE(sub(P({2}), P({1})).has_value());
    EXPECT_EQ(sub(P({}), P({})), P({}));
}

TEST(Partitions, CanonicalizeIdempotentAndAddSubInverse) {
    for(int n = 0; n <= 7; ++n) {
        for(const auto& a : partitions_of(n)) {
            EXPECT_EQ(Partition::canonicalize(a.parts()), a);
            for(int k = 0; k <= 4; ++k) {
                for(const auto& b : partitions_of(k)) {
                    EXPECT_EQ(sub(add(a, b), b), a);
                    if(auto s = sub(a, b)) {
                        EXPECT_EQ(add(*s, b), a);
                    }
                }
            }
        }
    }
}

TEST(Partitions, ParseAndPrint) {
    EXPECT_EQ(parse_partition("[2,1]"), P({2, 1}));
    EXPECT_EQ(parse_partition("[]"), P({}));
    EXPECT_EQ(parse_partition(" [ 1 , 3 ] "), P({3, 1}));
    EXPECT_EQ(to_string(P({2, 2, 1})), "[2,2,1]");
    EXPECT_EQ(to_string(P({})), "[]");
    for(const char* bad : {"", "2,1", "[2,", "[a]", "[2,-1]", "[2,,1]", "[1]x"}) {
        EXPECT_THROW(parse_partition(bad), invalid_input) << bad;
    }
}

TEST(Partitions, EnumerationMatchesBruteForce) {
    EXPECT_EQ(partitions_of(0), std::vector<Partition>{Partition{}});
    EXPECT_EQ(partitions_of(4).size(), 5u);
    EXPECT_EQ(partitions_of(10).size(), 42u);
    for(int n = 0; n <= 12; ++n) {
        auto ours = partitions_of(n);
        auto ref = oracle::partitions(n);
        std::sort(ref.begin(), ref.end());
        ASSERT_EQ(ours, ref) << n;
        EXPECT_TRUE(std::is_sorted(ours.begin(), ours.end()));
        for(std::size_t i = 0; i < ours.size(); ++i) {
            EXPECT_EQ(partition_basis(n).position(ours[i]), i);
        }
    }
    // lexicographic descending within a size
    EXPECT_EQ(partitions_of(3), (std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})}));
}

TEST(Partitions, ClassSizeExamples) {
    EXPECT_EQ(class_size(P({2, 1}), 4), 6);
    EXPECT_EQ(class_size(P({}), 5), 1);
    for(int a = 1; a <= 6; ++a) {
        EXPECT_EQ(class_size(P({a}), a), oracle::fact(a - 1));
    }
    EXPECT_THROW(class_size(P({3}), 2), invalid_input);
}

TEST(Partitions, ClassSizeMatchesBruteForce) {
    for(int n = 0; n <= 7; ++n) {
        for(int k = 0; k <= n; ++k) {
            for(const auto& d : partitions_of(k)) {
                EXPECT_EQ(class_size(d, n), oracle::class_size(d, n)) << to_string(d) << " n=" << n;
            }
        }
    }
}

TEST(Partitions, ClassSizesSumToFactorial) {
    for(int n = 0; n <= 12; ++n) {
        Integer s = 0;
        for(const auto& d : partitions_of(n)) {
            s += class_size(d, n);
        }
        EXPECT_EQ(s, oracle::fact(n)) << n;
    }
}

TEST(Partitions, FallingFactorialAndBinomial) {
    EXPECT_EQ(falling_factorial(5, 2), 20);
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(falling_factorial(7, 0), 1);
    EXPECT_EQ(falling_factorial(3, 5), 0);
    EXPECT_EQ(falling_factorial(3, -1), 0);
    EXPECT_EQ(binomial(3, -2), 0);
    for(int n = 0; n <= 10; ++n) {
        for(int k = 0; k <= n; ++k) {
            EXPECT_EQ(binomial(n, k), oracle::choose(n, k));
        }
    }
}

TEST(Partitions, ProperRepartitionExamples) {
    auto one = proper_repartitions(P({1}));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].blocks, std::vector<Partition>{P({1})});
    EXPECT_EQ(proper_repartitions(P({2, 1})).size(), 2u);
    EXPECT_EQ(proper_repartitions(P({1, 1})).size(), 2u);
}

TEST(Partitions, RepartitionCountsMatchMultisetSplittings) {
    for(int n = 1; n <= 8; ++n) {
        for(const auto& d : partitions_of(n)) {
            const auto rps = proper_repartitions(d);
            EXPECT_EQ(rps.size(), oracle::multiset_partition_count(d)) << to_string(d);
            for(const auto& rp : rps) {
                Partition sum;
                for(const auto& b : rp.blocks) {
                    EXPECT_FALSE(b.empty());
                    sum = add(sum, b);
                }
                EXPECT_EQ(sum, d);
            }
            std::set<int> distinct(d.parts().begin(), d.parts().end());
            if(static_cast<int>(distinct.size()) == d.length()) {
                EXPECT_EQ(Integer(static_cast<long>(rps.size())), oracle::bell(d.length())) << to_string(d);
            }
            if(d == Partition::ones(n)) {
                EXPECT_EQ(rps.size(), oracle::partitions(n).size());
            }
        }
    }
}

TEST(Partitions, AutCount) {
    const Triple t{P({1}), P({1}), P({1})};
    const Triple u{P({2}), P({1}), P({2})};
    EXPECT_EQ(aut_count({t, t}), 2);
    EXPECT_EQ(aut_count({u, t}), 1);
    EXPECT_EQ(aut_count({t, t, t}), 6);
    EXPECT_EQ(aut_count({t, u, t, u, t}), 12);
    EXPECT_EQ(aut_count({}), 1);
}
