#include <gtest/gtest.h>

#include <thread>

#include <winf/characters.hpp>

#include "oracles.hpp"

using namespace winf;
using oracle::P;

TEST(Characters, Examples) {
    EXPECT_EQ(character(P({1, 1}), P({2})), -1);
    EXPECT_EQ(character(P({2, 1}), P({2, 1})), 0);
    EXPECT_EQ(character(P({}), P({})), 1);
    for(int n = 1; n <= 6; ++n) {
        for(const auto& mu : partitions_of(n)) {
            EXPECT_EQ(character(P({n}), mu), 1);
        }
    }
    EXPECT_THROW(character(P({2}), P({1})), invalid_input);
}

TEST(Characters, MatchAlternantOracle) {
    for(int n = 0; n <= 6; ++n) {
        for(const auto& l : partitions_of(n)) {
            for(const auto& mu : partitions_of(n)) {
                EXPECT_EQ(character(l, mu), oracle::character(l, mu)) << to_string(l) << " " << to_string(mu);
            }
        }
    }
}

TEST(Characters, ColumnOrthogonality) {
    for(int n = 0; n <= 7; ++n) {
        const auto ps = partitions_of(n);
        for(const auto& mu : ps) {
            for(const auto& nu : ps) {
                Integer s = 0;
                for(const auto& l : ps) {
                    s += Integer(character(l, mu)) * Integer(character(l, nu));
                }
                const Integer expected = mu == nu ? Integer(oracle::fact(n) / oracle::class_size(mu, n)) : Integer(0);
                EXPECT_EQ(s, expected) << to_string(mu) << " " << to_string(nu);
            }
        }
    }
}

TEST(Characters, RowOrthogonality) {
    for(int n = 1; n <= 7; ++n) {
        const auto ps = partitions_of(n);
        for(const auto& a : ps) {
            for(const auto& b : ps) {
                Integer s = 0;
                for(const auto& mu : ps) {
                    s += class_size(mu, n) * Integer(character(a, mu)) * Integer(character(b, mu));
                }
                EXPECT_EQ(s, a == b ? oracle::fact(n) : Integer(0));
            }
        }
    }
}

TEST(Characters, DimensionByHooks) {
    EXPECT_EQ(dim(P({2, 1})), 2);
    EXPECT_EQ(dim(P({4})), 1);
    for(int n = 0; n <= 10; ++n) {
        Integer s = 0;
        for(const auto& l : partitions_of(n)) {
            EXPECT_EQ(dim(l), Integer(character(l, Partition::ones(n))));
            s += dim(l) * dim(l);
        }
        EXPECT_EQ(s, oracle::fact(n)) << n;
    }
}

TEST(Characters, PhiExamples) {
    EXPECT_EQ(phi(P({1, 1}), P({2})), -1);
    for(int n = 0; n <= 8; ++n) {
        for(const auto& l : partitions_of(n)) {
            EXPECT_EQ(phi(l, P({})), 1);
            if(n >= 1) {
                EXPECT_EQ(phi(l, P({1})), n) << to_string(l);
            }
        }
    }
}

TEST(Characters, PhiFromDefinitionAndVanishing) {
    for(int n = 0; n <= 6; ++n) {
        for(const auto& l : partitions_of(n)) {
            for(int k = 0; k <= n + 2; ++k) {
                for(const auto& d : partitions_of(k)) {
                    const Rational v = phi(l, d);
                    if(k > n) {
                        EXPECT_EQ(v, 0) << to_string(l) << " " << to_string(d);
                        continue;
                    }
                    Rational expected = Rational(oracle::shift(d, n) * oracle::class_size(d, n) *
                                                 oracle::character(l, d.shifted_to(n))) /
                                        Rational(Integer(oracle::character(l, Partition::ones(n))));
                    expected.canonicalize();
                    EXPECT_EQ(v, expected) << to_string(l) << " " << to_string(d);
                }
            }
        }
    }
}

TEST(Characters, SchurPolyExamples) {
    const auto s1 = schur_poly(P({1}));
    EXPECT_EQ(s1.terms().size(), 1u);
    EXPECT_EQ(s1.coefficient(P({1})), LaurentScalar(1));
    const auto s2 = schur_poly(P({2}));
    EXPECT_EQ(s2.coefficient(P({1, 1})), LaurentScalar(ratio(1, 2)));
    EXPECT_EQ(s2.coefficient(P({2})), LaurentScalar(ratio(1, 2)));
    const auto s11 = schur_poly(P({1, 1}));
    EXPECT_EQ(s11.coefficient(P({1, 1})), LaurentScalar(ratio(1, 2)));
    EXPECT_EQ(s11.coefficient(P({2})), LaurentScalar(ratio(-1, 2)));
}

TEST(Characters, SchurPolyMatchesJacobiTrudi) {
    for(int n = 0; n <= 5; ++n) {
        for(const auto& l : partitions_of(n)) {
            const auto ours = schur_poly(l);
            const auto ref = oracle::schur_jacobi_trudi(l);
            ASSERT_EQ(ours.terms().size(), ref.size()) << to_string(l);
            for(const auto& [p, c] : ref) {
                EXPECT_EQ(ours.coefficient(p), LaurentScalar(c)) << to_string(l) << " at " << to_string(p);
            }
        }
    }
}

TEST(Characters, ConcurrentCallersSeeSameValues) {
    std::vector<std::int64_t> expected;
    const auto ps = partitions_of(9);
    for(const auto& l : ps) {
        expected.push_back(character(l, P({3, 3, 2, 1})));
    }
    std::vector<std::vector<std::int64_t>> seen(4);
    {
        std::vector<std::jthread> pool;
        for(std::size_t t = 0; t < seen.size(); ++t) {
            pool.emplace_back([&, t] {
                for(const auto& l : ps) {
                    for(const auto& mu : partitions_of(9)) {
                        (void)character(l, mu);
                    }
                    seen[t].push_back(character(l, P({3, 3, 2, 1})));
                }
            });
        }
    }
    for(const auto& s : seen) {
        EXPECT_EQ(s, expected);
    }
}
