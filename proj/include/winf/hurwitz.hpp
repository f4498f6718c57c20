#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "characters.hpp"
#include "memo.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace winf {

/// Covering data: target genus g, degree n, ramification profiles Δ_1..Δ_k
/// (each completed by ones to a partition of n).
struct HurwitzQuery {
    int g = 0;
    int n = 0;
    std::vector<Partition> ramification;

    auto operator<=>(const HurwitzQuery&) const = default;
    bool operator==(const HurwitzQuery&) const = default;
};

struct HurwitzValue {
    Rational value;
    /// Source genus from the Hurwitz formula; nullopt when it is not an integer
    /// (no cover exists and the value is zero).
    std::optional<int> source_genus;
};

inline int total_weight(const std::vector<Partition>& ramification) {
    int s = 0;
    for(const auto& d : ramification) {
        s += d.weight();
    }
    return s;
}

/// h solving (2-2g)n - (2-2h) = Σ(|Δ_i| - l(Δ_i)); nullopt when h is half-integral.
inline std::optional<int> derived_genus(const HurwitzQuery& q) {
    const int s = total_weight(q.ramification);
    if(s % 2 != 0) {
        return std::nullopt;
    }
    return 1 - (1 - q.g) * q.n + s / 2;
}

namespace detail {

inline Rational frobenius_sum(const HurwitzQuery& q) {
    static SyncMemo<HurwitzQuery, Rational> memo;
    if(q.g < 0 || q.n < 0) {
        throw invalid_input("hurwitz: g and n must be nonnegative");
    }
    for(const auto& d : q.ramification) {
        if(d.size() > q.n) {
            return 0;
        }
    }
    return memo.get_or_compute(q, [&] {
        const Rational nfact(factorial(static_cast<unsigned>(q.n)));
        Rational total = 0;
        for(const auto& lambda : partition_basis(q.n).items) {
            Rational term = pow(Rational(Rational(dim(lambda)) / nfact), 2 - 2 * q.g);
            for(const auto& d : q.ramification) {
                if(term == 0) {
                    break;
                }
                term *= phi(lambda, d);
            }
            total += term;
        }
        total.canonicalize();
        return total;
    });
}

inline bool fits(const HurwitzQuery& q) {
    return std::all_of(q.ramification.begin(), q.ramification.end(),
                       [&](const Partition& d) { return d.size() <= q.n; });
}

} // namespace detail

/// Disconnected shifted Hurwitz number U_g^{h,n}(Δ_1..Δ_k) by the Frobenius
/// character sum Σ_{λ⊢n} (dim λ/n!)^{2-2g} Π φ_λ(Δ_i).
inline HurwitzValue disconnected_U(const HurwitzQuery& q) {
    return {detail::frobenius_sum(q), derived_genus(q)};
}

/// Connected shifted Hurwitz number CU_g^{h,n}(Δ_1..Δ_k).
///
/// The disconnected numbers are the exponential of the connected ones, with
/// degrees adding and each profile splitting additively (ones included) over
/// the components. Inverting through the pointed form of that relation:
///   n U(K) = Σ_{K' ≤ K, n' ≥ 1} n' CU(K') U(K - K').
inline HurwitzValue connected_CU(const HurwitzQuery& q) {
    static detail::SyncMemo<HurwitzQuery, Rational> memo;
    auto compute = [&](auto&& self, const HurwitzQuery& key) -> Rational {
        if(key.n <= 0 || !detail::fits(key)) {
            return 0;
        }
        if(auto v = memo.find(key)) {
            return *v;
        }
        std::vector<std::vector<Partition>> subs;
        subs.reserve(key.ramification.size());
        for(const auto& d : key.ramification) {
            subs.push_back(sub_partitions(d));
        }
        Rational correction = 0;
        const std::size_t k = key.ramification.size();
        std::vector<std::size_t> pick(k, 0);
        HurwitzQuery part{key.g, 0, std::vector<Partition>(k)};
        HurwitzQuery rest{key.g, 0, std::vector<Partition>(k)};
        for(int np = 1; np <= key.n; ++np) {
            part.n = np;
            rest.n = key.n - np;
            std::fill(pick.begin(), pick.end(), 0);
            while(true) {
                bool whole = (np == key.n);
                for(std::size_t i = 0; i < k; ++i) {
                    part.ramification[i] = subs[i][pick[i]];
                    rest.ramification[i] = *sub(key.ramification[i], part.ramification[i]);
                    whole = whole && rest.ramification[i].empty();
                }
                if(!whole && detail::fits(part) && detail::fits(rest)) {
                    Rational u = detail::frobenius_sum(rest);
                    if(u != 0) {
                        Rational c = self(self, part);
                        correction += Rational(np) * c * u;
                    }
                }
                std::size_t i = 0;
                while(i < k && ++pick[i] == subs[i].size()) {
                    pick[i] = 0;
                    ++i;
                }
                if(i == k) {
                    break;
                }
            }
        }
        Rational value = detail::frobenius_sum(key) - correction / Rational(key.n);
        value.canonicalize();
        return memo.insert(key, value);
    };
    return {compute(compute, q), derived_genus(q)};
}

/// Disconnected number rebuilt from connected ones through the exponential,
/// U(K) = Σ_k (1/k!) Σ_{K_1+..+K_k = K} Π CU(K_j), over ordered k-tuples of
/// components with n_j >= 1 (so k <= n).
inline Rational exponentiate_connected(const HurwitzQuery& q) {
    if(!detail::fits(q)) {
        return 0;
    }
    const std::size_t k = q.ramification.size();
    std::vector<std::vector<Partition>> subs;
    for(const auto& d : q.ramification) {
        subs.push_back(sub_partitions(d));
    }
    // Every sub-key of q with n' >= 1; components are the ones with nonzero CU.
    std::vector<HurwitzQuery> keys;
    std::vector<std::size_t> pick(k, 0);
    for(int np = 1; np <= q.n; ++np) {
        std::fill(pick.begin(), pick.end(), 0);
        while(true) {
            HurwitzQuery c{q.g, np, std::vector<Partition>(k)};
            for(std::size_t i = 0; i < k; ++i) {
                c.ramification[i] = subs[i][pick[i]];
            }
            if(detail::fits(c)) {
                keys.push_back(std::move(c));
            }
            std::size_t i = 0;
            while(i < k && ++pick[i] == subs[i].size()) {
                pick[i] = 0;
                ++i;
            }
            if(i == k) {
                break;
            }
        }
    }
    std::map<HurwitzQuery, Rational> comps;
    for(const auto& c : keys) {
        Rational v = connected_CU(c).value;
        if(v != 0) {
            comps.emplace(c, v);
        }
    }

    auto plus = [&](const HurwitzQuery& a, const HurwitzQuery& b) -> std::optional<HurwitzQuery> {
        HurwitzQuery r{q.g, a.n + b.n, {}};
        if(r.n > q.n) {
            return std::nullopt;
        }
        for(std::size_t i = 0; i < k; ++i) {
            Partition d = add(a.ramification[i], b.ramification[i]);
            if(!contains(q.ramification[i], d)) {
                return std::nullopt;
            }
            r.ramification.push_back(std::move(d));
        }
        if(!detail::fits(r)) {
            return std::nullopt;
        }
        return r;
    };

    Rational total = q.n == 0 && std::all_of(q.ramification.begin(), q.ramification.end(),
                                             [](const Partition& d) { return d.empty(); })
                         ? Rational(1)
                         : Rational(0);
    std::map<HurwitzQuery, Rational> power = comps;
    Rational kfact = 1;
    for(int j = 1; j <= q.n && !power.empty(); ++j) {
        kfact *= j;
        if(auto it = power.find(q); it != power.end()) {
            total += it->second / kfact;
        }
        std::map<HurwitzQuery, Rational> next;
        for(const auto& [a, va] : power) {
            for(const auto& [c, vc] : comps) {
                if(auto s = plus(a, c)) {
                    next[*s] += va * vc;
                }
            }
        }
        power = std::move(next);
    }
    total.canonicalize();
    return total;
}

/// Classical Hurwitz number μ = U / Π binom(n-|Δ_i|+m_1(Δ_i), m_1(Δ_i)).
inline Rational classical_mu(const HurwitzQuery& q) {
    Rational r = disconnected_U(q).value;
    for(const auto& d : q.ramification) {
        if(d.size() > q.n) {
            throw invalid_input("classical_mu: |" + to_string(d) + "| > n = " + std::to_string(q.n));
        }
        r /= Rational(shift_factor(d, q.n));
    }
    r.canonicalize();
    return r;
}

} // namespace winf
