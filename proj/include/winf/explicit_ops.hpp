#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cutjoin.hpp"

namespace winf {

/// One summand c(a,b,..) z^e p_{M(a,b,..)} ∂/∂p_{D(a,b,..)}, summed over all
/// ordered tuples of positive integers (a,b,..) of the given arity.
struct ExplicitTerm {
    int arity = 1;
    int z_exp = 0;
    std::function<Rational(std::span<const int>)> coeff;
    std::function<std::vector<int>(std::span<const int>)> mul;
    std::function<std::vector<int>(std::span<const int>)> diff;
};

struct ExplicitOperator {
    std::string name;
    Partition delta;
    std::vector<ExplicitTerm> terms;
};

namespace detail {

template<typename F>
void for_each_tuple(int arity, int max_value, F&& f) {
    std::vector<int> v(static_cast<std::size_t>(arity), 1);
    if(max_value < 1) {
        return;
    }
    while(true) {
        f(std::span<const int>(v));
        int i = 0;
        while(i < arity && ++v[static_cast<std::size_t>(i)] > max_value) {
            v[static_cast<std::size_t>(i)] = 1;
            ++i;
        }
        if(i == arity) {
            return;
        }
    }
}

} // namespace detail

/// Matrix of an explicit differential operator on blocks n <= bound.
inline BlockOperator to_blocks(const ExplicitOperator& op, int bound) {
    BlockOperator out(bound, op.delta, false);
    for(int n = 1; n <= bound; ++n) {
        const auto& basis = partition_basis(n);
        auto& blk = out.block(n);
        for(std::size_t j = 0; j < basis.dim(); ++j) {
            const auto& from = basis.items[j];
            for(const auto& t : op.terms) {
                detail::for_each_tuple(t.arity, n, [&](std::span<const int> v) {
                    const Partition d = Partition::canonicalize(t.diff(v));
                    auto rest = sub(from, d);
                    if(!rest) {
                        return;
                    }
                    Integer factor = 1;
                    for(auto [part, m] : d.multiplicities()) {
                        factor *= falling_factorial(from.multiplicity(part), m);
                    }
                    const Partition to = winf::add(*rest, Partition::canonicalize(t.mul(v)));
                    if(to.size() != n) {
                        return;
                    }
                    blk.at(basis.position(to), j) += LaurentScalar::monomial(Rational(t.coeff(v) * Rational(factor)), t.z_exp);
                });
            }
        }
    }
    return out;
}

/// The five low-degree operators written out as differential operators.
inline std::vector<ExplicitOperator> explicit_low_degree_operators() {
    using V = std::span<const int>;
    auto r = [](long a, long b = 1) { return ratio(a, b); };
    std::vector<ExplicitOperator> ops;

    ops.push_back({"W((1))", Partition::canonicalize({1}),
                   {{1, 0, [](V v) { return Rational(v[0]); }, [](V v) { return std::vector<int>{v[0]}; },
                     [](V v) { return std::vector<int>{v[0]}; }}}});

    ops.push_back({"W((1,1))", Partition::canonicalize({1, 1}),
                   {{1, 0, [r](V v) { return Rational(r(1, 2) * v[0] * (v[0] - 1)); },
                     [](V v) { return std::vector<int>{v[0]}; }, [](V v) { return std::vector<int>{v[0]}; }},
                    {2, 0, [r](V v) { return Rational(r(1, 2) * v[0] * v[1]); },
                     [](V v) { return std::vector<int>{v[0], v[1]}; }, [](V v) { return std::vector<int>{v[0], v[1]}; }}}});

    ops.push_back({"W((1,1,1))", Partition::canonicalize({1, 1, 1}),
                   {{1, 0, [r](V v) { return Rational(r(1, 6) * v[0] * (v[0] - 1) * (v[0] - 2)); },
                     [](V v) { return std::vector<int>{v[0]}; }, [](V v) { return std::vector<int>{v[0]}; }},
                    {2, 0, [r](V v) { return Rational(r(1, 2) * v[0] * (v[0] - 1) * v[1]); },
                     [](V v) { return std::vector<int>{v[0], v[1]}; }, [](V v) { return std::vector<int>{v[0], v[1]}; }},
                    {3, 0, [r](V v) { return Rational(r(1, 6) * v[0] * v[1] * v[2]); },
                     [](V v) { return std::vector<int>{v[0], v[1], v[2]}; },
                     [](V v) { return std::vector<int>{v[0], v[1], v[2]}; }}}});

    ops.push_back({"W((2))", Partition::canonicalize({2}),
                   {{2, 0, [r](V v) { return Rational(r(1, 2) * (v[0] + v[1])); },
                     [](V v) { return std::vector<int>{v[0], v[1]}; }, [](V v) { return std::vector<int>{v[0] + v[1]}; }},
                    {2, 2, [r](V v) { return Rational(r(1, 2) * v[0] * v[1]); },
                     [](V v) { return std::vector<int>{v[0] + v[1]}; }, [](V v) { return std::vector<int>{v[0], v[1]}; }}}});

    ops.push_back({"W((2,1))", Partition::canonicalize({2, 1}),
                   {{2, 0, [r](V v) { return Rational(r(1, 2) * (v[0] + v[1]) * (v[0] + v[1] - 2)); },
                     [](V v) { return std::vector<int>{v[0], v[1]}; }, [](V v) { return std::vector<int>{v[0] + v[1]}; }},
                    {3, 0, [r](V v) { return Rational(r(1, 2) * (v[0] + v[1]) * v[2]); },
                     [](V v) { return std::vector<int>{v[0], v[1], v[2]}; },
                     [](V v) { return std::vector<int>{v[0] + v[1], v[2]}; }},
                    {3, 2, [r](V v) { return Rational(r(1, 2) * v[0] * v[1] * v[2]); },
                     [](V v) { return std::vector<int>{v[0], v[1] + v[2]}; },
                     [](V v) { return std::vector<int>{v[0], v[1], v[2]}; }},
                    {2, 2, [r](V v) { return Rational(r(1, 2) * v[0] * v[1] * (v[0] + v[1] - 2)); },
                     [](V v) { return std::vector<int>{v[0] + v[1]}; }, [](V v) { return std::vector<int>{v[0], v[1]}; }}}});
    return ops;
}

} // namespace winf
