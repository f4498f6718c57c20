#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace winf {

inline constexpr int kMaxAmbient = 16;

/// A partial permutation (E, f) of {0..n-1}: a support E and a bijection f of E.
/// Points outside the support are stored as fixed points.
class PartialPermutation {
public:
    PartialPermutation() = default;

    explicit PartialPermutation(int n) : n_(n) {
        if(n < 0 || n > kMaxAmbient) {
            throw invalid_input("ambient size must be in [0, " + std::to_string(kMaxAmbient) + "]");
        }
        for(int i = 0; i < kMaxAmbient; ++i) {
            map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        }
    }

    /// Builds (E, f) from the support and the images of the support points.
    static PartialPermutation from_map(int n, std::uint32_t support, std::span<const int> images) {
        PartialPermutation x(n);
        x.support_ = support;
        for(int i = 0; i < n; ++i) {
            int img = images[static_cast<std::size_t>(i)];
            bool in = (support >> i) & 1u;
            if(!in && img != i) {
                throw invalid_input("partial permutation moves a point outside its support");
            }
            if(in && !((support >> img) & 1u)) {
                throw invalid_input("partial permutation maps out of its support");
            }
            x.map_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(img);
        }
        return x;
    }

    int ambient() const noexcept { return n_; }
    std::uint32_t support() const noexcept { return support_; }
    int degree() const noexcept { return std::popcount(support_); }
    int operator()(int i) const noexcept { return map_[static_cast<std::size_t>(i)]; }

    /// (E1,f1)(E2,f2) = (E1 ∪ E2, f1 ∘ f2).
    friend PartialPermutation operator*(const PartialPermutation& a, const PartialPermutation& b) {
        PartialPermutation r(a.n_);
        r.support_ = a.support_ | b.support_;
        for(int i = 0; i < a.n_; ++i) {
            r.map_[static_cast<std::size_t>(i)] = a.map_[b.map_[static_cast<std::size_t>(i)]];
        }
        return r;
    }

    bool operator==(const PartialPermutation& o) const {
        if(n_ != o.n_ || support_ != o.support_) {
            return false;
        }
        return std::equal(map_.begin(), map_.begin() + n_, o.map_.begin());
    }

private:
    int n_ = 0;
    std::uint32_t support_ = 0;
    std::array<std::uint8_t, kMaxAmbient> map_{};
};

inline PartialPermutation pp_multiply(const PartialPermutation& a, const PartialPermutation& b) { return a * b; }

/// Cycle type of f on its support, fixed support points included.
inline Partition class_of(const PartialPermutation& x) {
    std::vector<int> cycles;
    std::uint32_t seen = 0;
    for(int i = 0; i < x.ambient(); ++i) {
        if(!((x.support() >> i) & 1u) || ((seen >> i) & 1u)) {
            continue;
        }
        int len = 0;
        int j = i;
        do {
            seen |= 1u << j;
            j = x(j);
            ++len;
        } while(j != i);
        cycles.push_back(len);
    }
    return Partition::canonicalize(cycles);
}

/// |P_n| = Σ_k binom(n,k) k!.
inline Integer count_Pn(int n) {
    Integer total = 0;
    for(int k = 0; k <= n; ++k) {
        total += falling_factorial(n, k);
    }
    return total;
}

namespace detail {

// Calls f on every partial permutation whose support is `support`.
template<typename F>
void for_each_on_support(int n, std::uint32_t support, F&& f) {
    std::vector<int> points;
    for(int i = 0; i < n; ++i) {
        if((support >> i) & 1u) {
            points.push_back(i);
        }
    }
    std::vector<int> images = points;
    std::vector<int> full(static_cast<std::size_t>(n));
    do {
        std::iota(full.begin(), full.end(), 0);
        for(std::size_t j = 0; j < points.size(); ++j) {
            full[static_cast<std::size_t>(points[j])] = images[j];
        }
        f(PartialPermutation::from_map(n, support, full));
    } while(std::next_permutation(images.begin(), images.end()));
}

inline std::vector<std::uint32_t> subsets_of_size(int n, int r) {
    std::vector<std::uint32_t> out;
    for(std::uint32_t s = 0; s < (1u << n); ++s) {
        if(std::popcount(s) == r) {
            out.push_back(s);
        }
    }
    return out;
}

} // namespace detail

/// Every element of P_n (2^n supports, all bijections of each).
inline std::vector<PartialPermutation> enumerate_Pn(int n) {
    std::vector<PartialPermutation> out;
    for(std::uint32_t s = 0; s < (1u << n); ++s) {
        detail::for_each_on_support(n, s, [&](const PartialPermutation& x) { out.push_back(x); });
    }
    return out;
}

/// Members of the conjugacy class A_{Δ;n}.
inline std::vector<PartialPermutation> class_members(const Partition& delta, int n) {
    std::vector<PartialPermutation> out;
    if(delta.size() > n) {
        return out;
    }
    for(auto s : detail::subsets_of_size(n, delta.size())) {
        detail::for_each_on_support(n, s, [&](const PartialPermutation& x) {
            if(class_of(x) == delta) {
                out.push_back(x);
            }
        });
    }
    return out;
}

/// |A_{Δ;n}| = binom(n,|Δ|) |C_Δ|; zero when |Δ| > n.
inline Integer class_count(const Partition& delta, int n) {
    if(delta.size() > n) {
        return 0;
    }
    return binomial(n, delta.size()) * class_size(delta, delta.size());
}

/// Canonical member of A_{Δ;n}: cycles laid out on consecutive points 0,1,2,...
inline PartialPermutation class_representative(const Partition& delta, int n) {
    if(delta.size() > n) {
        throw invalid_input("class_representative: |" + to_string(delta) + "| > " + std::to_string(n));
    }
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    int start = 0;
    for(int len : delta.parts()) {
        for(int j = 0; j < len; ++j) {
            images[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
        }
        start += len;
    }
    std::uint32_t support = delta.size() == 0 ? 0u : ((1u << delta.size()) - 1u);
    return PartialPermutation::from_map(n, support, images);
}

/// Formal rational combination Σ c_Δ A_Δ.
struct ClassVector {
    std::map<Partition, Rational> coefficients;

    Rational operator[](const Partition& p) const {
        auto it = coefficients.find(p);
        return it == coefficients.end() ? Rational(0) : it->second;
    }

    void add(const Partition& p, const Rational& c) {
        if(c == 0) {
            return;
        }
        auto [it, inserted] = coefficients.try_emplace(p, c);
        if(!inserted) {
            it->second += c;
            if(it->second == 0) {
                coefficients.erase(it);
            }
        }
    }

    bool operator==(const ClassVector&) const = default;
};

/// θ_m: keeps only the A_Δ with |Δ| <= m.
inline ClassVector theta_project(const ClassVector& v, int m) {
    ClassVector out;
    for(const auto& [p, c] : v.coefficients) {
        if(p.size() <= m) {
            out.coefficients.emplace(p, c);
        }
    }
    return out;
}

/// ψ(A_{Δ;n}) = binom(n-|Δ|+m_1(Δ), m_1(Δ)) C_{Δ;n}; zero when |Δ| > n.
inline Integer psi_coefficient(const Partition& delta, int n) {
    return shift_factor(delta, n);
}

/// Structure constants of A_∞: A_{Δ1} A_{Δ2} = Σ Ĉ^{Δ3} A_{Δ3}, by brute force in B_n.
///
/// One representative r of A_{Δ2;n} is fixed and x runs over A_{Δ1;n};
/// conjugation invariance gives #{(x,y) : xy ∈ A_{Δ3}} = |A_{Δ2}| #{x : xr ∈ A_{Δ3}}.
/// The default ambient degree |Δ1|+|Δ2| is the least one that truncates nothing.
inline ClassVector structure_constants(const Partition& d1, const Partition& d2, int ambient = -1, int threads = 1) {
    const int n = ambient < 0 ? d1.size() + d2.size() : ambient;
    if(n > kMaxAmbient) {
        throw invalid_input("structure_constants: ambient degree too large");
    }
    if(d1.size() > n || d2.size() > n) {
        return {};
    }
    const auto rep = class_representative(d2, n);
    const auto supports = detail::subsets_of_size(n, d1.size());
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(supports.size())));
    std::vector<std::map<Partition, Integer>> partial(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        auto& counts = partial[static_cast<std::size_t>(w)];
        for(std::size_t i = static_cast<std::size_t>(w); i < supports.size(); i += static_cast<std::size_t>(workers)) {
            detail::for_each_on_support(n, supports[i], [&](const PartialPermutation& x) {
                if(class_of(x) == d1) {
                    counts[class_of(x * rep)] += 1;
                }
            });
        }
    };
    if(workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for(int w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    std::map<Partition, Integer> counts;
    for(const auto& m : partial) {
        for(const auto& [p, c] : m) {
            counts[p] += c;
        }
    }
    ClassVector out;
    const Integer a2 = class_count(d2, n);
    for(const auto& [p, c] : counts) {
        Integer num = a2 * c;
        Integer den = class_count(p, n);
        ensure(num % den == 0, "structure constant is not an integer for " + to_string(p));
        out.add(p, Rational(num / den));
    }
    return out;
}

} // namespace winf
