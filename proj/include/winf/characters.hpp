#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "memo.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace winf {

namespace detail {

// Beta-set (first column hook lengths) of λ padded to `len` rows.
inline std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> beta(static_cast<std::size_t>(len));
    for(int i = 0; i < len; ++i) {
        int part = i < lambda.length() ? lambda.parts()[static_cast<std::size_t>(i)] : 0;
        beta[static_cast<std::size_t>(i)] = part + (len - 1 - i);
    }
    return beta;
}

inline Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for(int i = 0; i < len; ++i) {
        parts.push_back(beta[static_cast<std::size_t>(i)] - (len - 1 - i));
    }
    return Partition::canonicalize(parts);
}

class CharacterCache {
public:
    static CharacterCache& instance() {
        static CharacterCache cache;
        return cache;
    }

    std::int64_t get(const Partition& lambda, const Partition& mu) {
        auto key = std::make_pair(lambda, mu);
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if(it != table_.end()) {
                return it->second;
            }
        }
        std::int64_t value = compute(lambda, mu);
        std::unique_lock lock(mutex_);
        table_.emplace(std::move(key), value);
        return value;
    }

private:
    // Murnaghan–Nakayama: strip a rim hook of length μ_1 in every possible way.
    std::int64_t compute(const Partition& lambda, const Partition& mu) {
        if(mu.empty()) {
            return lambda.empty() ? 1 : 0;
        }
        const int k = mu.largest();
        Partition rest = *sub(mu, Partition::canonicalize({k}));
        auto beta = beta_set(lambda, lambda.length());
        std::int64_t total = 0;
        for(std::size_t i = 0; i < beta.size(); ++i) {
            const int from = beta[i];
            const int to = from - k;
            if(to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) {
                continue;
            }
            int height = 0;
            for(int b : beta) {
                if(b > to && b < from) {
                    ++height;
                }
            }
            auto next = beta;
            next[i] = to;
            std::int64_t chi = get(from_beta_set(next), rest);
            total += (height % 2 == 0) ? chi : -chi;
        }
        return total;
    }

    std::shared_mutex mutex_;
    std::map<std::pair<Partition, Partition>, std::int64_t> table_;
};

} // namespace detail

/// Irreducible character χ_λ(μ) of S_{|λ|}. Requires |λ| = |μ|.
inline std::int64_t character(const Partition& lambda, const Partition& mu) {
    if(lambda.size() != mu.size()) {
        throw invalid_input("character: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
    }
    return detail::CharacterCache::instance().get(lambda, mu);
}

/// dim λ by the hook-length formula.
inline Integer dim(const Partition& lambda) {
    const auto& rows = lambda.parts();
    Integer hooks = 1;
    for(std::size_t i = 0; i < rows.size(); ++i) {
        for(int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = 0;
            for(std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) {
                ++leg;
            }
            hooks *= arm + leg + 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

/// Normalized shifted character
///   φ_λ(Δ) = binom(|λ|-|Δ|+m_1, m_1) |C_{Δ;|λ|}| χ_λ([Δ,1^{|λ|-|Δ|}]) / dim λ,
/// zero when |Δ| > |λ|.
inline Rational phi(const Partition& lambda, const Partition& delta) {
    static detail::SyncMemo<std::pair<Partition, Partition>, Rational> memo;
    const int n = lambda.size();
    if(delta.size() > n) {
        return 0;
    }
    return memo.get_or_compute({lambda, delta}, [&] {
        Rational r(shift_factor(delta, n) * class_size(delta, n) *
                   Integer(static_cast<long>(character(lambda, delta.shifted_to(n)))));
        r /= Rational(dim(lambda));
        r.canonicalize();
        return r;
    });
}

/// Schur function in power sums: Σ_{Γ ⊢ |λ|} (dim λ/|λ|!) φ_λ(Γ) p_Γ.
inline TruncatedSeries schur_poly(const Partition& lambda) {
    const int n = lambda.size();
    TruncatedSeries s(n);
    const Rational weight = Rational(dim(lambda)) / Rational(factorial(static_cast<unsigned>(n)));
    for(const auto& gamma : partition_basis(n).items) {
        s.add(gamma, Rational(weight * phi(lambda, gamma)));
    }
    return s;
}

} // namespace winf
