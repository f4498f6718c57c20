#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace winf {

/// Integer partition stored as a nonincreasing sequence of positive parts.
///
/// Partitions index cycle types, Young diagrams and the monomials p_Γ of the
/// time-variable ring. The empty partition is the unit (no ramification,
/// constant monomial).
class Partition {
public:
    Partition() = default;

    /// Drops zeros and sorts. Throws invalid_input on a negative entry.
    static Partition canonicalize(std::span<const int> parts) {
        std::vector<int> v;
        v.reserve(parts.size());
        for(int x : parts) {
            if(x < 0) {
                throw invalid_input("negative partition part " + std::to_string(x));
            }
            if(x > 0) {
                v.push_back(x);
            }
        }
        std::sort(v.begin(), v.end(), std::greater<>());
        Partition p;
        p.parts_ = std::move(v);
        return p;
    }

    static Partition canonicalize(std::initializer_list<int> parts) {
        return canonicalize(std::span<const int>(parts.begin(), parts.size()));
    }

    /// (1^k)
    static Partition ones(int k) {
        Partition p;
        p.parts_.assign(static_cast<std::size_t>(std::max(k, 0)), 1);
        return p;
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// |Δ|
    int size() const noexcept {
        int s = 0;
        for(int x : parts_) {
            s += x;
        }
        return s;
    }

    /// l(Δ)
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// |Δ| - l(Δ), the ramification weight (also the z-weight of W(Δ,z)).
    int weight() const noexcept { return size() - length(); }

    /// m_i(Δ)
    int multiplicity(int i) const noexcept {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }

    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// ||Δ|| = product of the parts.
    Integer product() const {
        Integer r = 1;
        for(int x : parts_) {
            r *= x;
        }
        return r;
    }

    /// z_Δ = ||Δ|| * prod_i m_i(Δ)!, the centralizer order of a permutation of type Δ.
    Integer centralizer() const {
        Integer r = product();
        for(auto [part, mult] : multiplicities()) {
            (void)part;
            r *= factorial(static_cast<unsigned>(mult));
        }
        return r;
    }

    /// (part, multiplicity) pairs, parts descending.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> out;
        for(int x : parts_) {
            if(!out.empty() && out.back().first == x) {
                ++out.back().second;
            } else {
                out.emplace_back(x, 1);
            }
        }
        return out;
    }

    /// [Δ, 1^{n-|Δ|}]
    Partition shifted_to(int n) const {
        Partition p = *this;
        for(int i = size(); i < n; ++i) {
            p.parts_.push_back(1);
        }
        return p;
    }

    /// Δ with all parts equal to one removed.
    Partition without_ones() const {
        Partition p;
        for(int x : parts_) {
            if(x > 1) {
                p.parts_.push_back(x);
            }
        }
        return p;
    }

    bool operator==(const Partition&) const = default;

    // Canonical order: by size, then lexicographically descending within a size.
    // This makes partitions_of(n) an increasing sequence.
    std::strong_ordering operator<=>(const Partition& o) const {
        if(auto c = size() <=> o.size(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(o.parts_.begin(), o.parts_.end(),
                                                      parts_.begin(), parts_.end());
    }

private:
    std::vector<int> parts_;
};

/// Δ1 + Δ2 (multiplicity-wise).
inline Partition add(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition::canonicalize(v);
}

/// Δ1 - Δ2, or nullopt when some multiplicity would go negative.
inline std::optional<Partition> sub(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    for(int x : b.parts()) {
        auto it = std::find(v.begin(), v.end(), x);
        if(it == v.end()) {
            return std::nullopt;
        }
        v.erase(it);
    }
    return Partition::canonicalize(v);
}

/// True when m_i(b) <= m_i(a) for every i.
inline bool contains(const Partition& a, const Partition& b) {
    return sub(a, b).has_value();
}

inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for(std::size_t i = 0; i < p.parts().size(); ++i) {
        if(i) {
            s += ',';
        }
        s += std::to_string(p.parts()[i]);
    }
    return s + "]";
}

/// Parses "[2,1]" / "[]"; whitespace is ignored.
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for(char c : text) {
        if(c != ' ' && c != '\t') {
            s += c;
        }
    }
    if(s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw invalid_input("malformed partition '" + text + "'; expected e.g. [2,1]");
    }
    std::string body = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if(!body.empty()) {
        std::size_t pos = 0;
        while(true) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if(tok.empty()) {
                throw invalid_input("malformed partition '" + text + "': empty part");
            }
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &used);
            } catch(const std::exception&) {
                throw invalid_input("malformed partition '" + text + "': bad part '" + tok + "'");
            }
            if(used != tok.size()) {
                throw invalid_input("malformed partition '" + text + "': bad part '" + tok + "'");
            }
            parts.push_back(value);
            if(comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    }
    return Partition::canonicalize(parts);
}

/// All partitions of n in lexicographically descending order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if(n < 0) {
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if(remaining == 0) {
            out.push_back(Partition::canonicalize(cur));
            return;
        }
        for(int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, remaining - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Partitions of n with a position lookup. Cached per n and never freed,
/// so references stay valid for the life of the process.
struct PartitionBasis {
    int n = 0;
    std::vector<Partition> items;
    std::map<Partition, std::size_t> index;

    std::size_t dim() const noexcept { return items.size(); }

    std::size_t position(const Partition& p) const {
        auto it = index.find(p);
        if(it == index.end()) {
            throw invalid_input("partition " + to_string(p) + " is not in the basis of degree " + std::to_string(n));
        }
        return it->second;
    }
};

inline const PartitionBasis& partition_basis(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<PartitionBasis>> cache;
    std::scoped_lock lock(mutex);
    auto& slot = cache[n];
    if(!slot) {
        slot = std::make_unique<PartitionBasis>();
        slot->n = n;
        slot->items = partitions_of(n);
        for(std::size_t i = 0; i < slot->items.size(); ++i) {
            slot->index.emplace(slot->items[i], i);
        }
    }
    return *slot;
}

/// All partitions Γ with |Γ| <= n, in canonical order.
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for(int k = 0; k <= n; ++k) {
        const auto& b = partition_basis(k);
        out.insert(out.end(), b.items.begin(), b.items.end());
    }
    return out;
}

/// Every Γ with m_i(Γ) <= m_i(Δ) for all i (including ∅ and Δ itself), canonical order.
inline std::vector<Partition> sub_partitions(const Partition& delta) {
    auto mult = delta.multiplicities();
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if(i == mult.size()) {
            out.push_back(Partition::canonicalize(cur));
            return;
        }
        auto [part, m] = mult[i];
        for(int k = 0; k <= m; ++k) {
            self(self, i + 1);
            cur.push_back(part);
        }
        cur.resize(cur.size() - static_cast<std::size_t>(m) - 1);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// (n↓k) = n(n-1)...(n-k+1); zero for k < 0.
inline Integer falling_factorial(long n, long k) {
    if(k < 0) {
        return 0;
    }
    Integer r = 1;
    for(long i = 0; i < k; ++i) {
        r *= (n - i);
    }
    return r;
}

/// (n↓k)/k!; zero for k < 0.
inline Integer binomial(long n, long k) {
    if(k < 0) {
        return 0;
    }
    Integer num = falling_factorial(n, k);
    return num / factorial(static_cast<unsigned>(k));
}

/// |C_{Δ;n}|, the number of permutations of cycle type [Δ,1^{n-|Δ|}] in S_n.
inline Integer class_size(const Partition& delta, int n) {
    if(delta.size() > n) {
        throw invalid_input("class_size: |" + to_string(delta) + "| > " + std::to_string(n));
    }
    return factorial(static_cast<unsigned>(n)) / delta.shifted_to(n).centralizer();
}

/// Binomial shift factor binom(n-|Δ|+m_1(Δ), m_1(Δ)); zero when |Δ| > n.
inline Integer shift_factor(const Partition& delta, int n) {
    if(delta.size() > n) {
        return 0;
    }
    int m1 = delta.multiplicity(1);
    return binomial(n - delta.size() + m1, m1);
}

/// An unordered splitting of a partition into nonempty blocks, stored sorted.
struct RePartition {
    std::vector<Partition> blocks;

    bool operator==(const RePartition&) const = default;
    auto operator<=>(const RePartition&) const = default;
};

/// All proper re-partitions of Δ: multisets of nonempty partitions whose sum is Δ.
inline std::vector<RePartition> proper_repartitions(const Partition& delta) {
    const auto& parts = delta.parts();
    const std::size_t l = parts.size();
    std::set<RePartition> seen;
    if(l == 0) {
        return {};
    }
    // Restricted growth strings enumerate set partitions of the part indices.
    std::vector<int> label(l, 0);
    auto rec = [&](auto&& self, std::size_t i, int blocks) -> void {
        if(i == l) {
            std::vector<std::vector<int>> raw(static_cast<std::size_t>(blocks));
            for(std::size_t j = 0; j < l; ++j) {
                raw[static_cast<std::size_t>(label[j])].push_back(parts[j]);
            }
            RePartition rp;
            for(auto& r : raw) {
                rp.blocks.push_back(Partition::canonicalize(r));
            }
            std::sort(rp.blocks.begin(), rp.blocks.end());
            seen.insert(std::move(rp));
            return;
        }
        for(int b = 0; b <= blocks; ++b) {
            label[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
    return {seen.begin(), seen.end()};
}

using Triple = std::tuple<Partition, Partition, Partition>;

/// Order of the group permuting the list while fixing every triple:
/// product over distinct values of multiplicity!.
inline Integer aut_count(std::vector<Triple> triples) {
    std::sort(triples.begin(), triples.end());
    Integer r = 1;
    std::size_t i = 0;
    while(i < triples.size()) {
        std::size_t j = i;
        while(j < triples.size() && triples[j] == triples[i]) {
            ++j;
        }
        r *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return r;
}

} // namespace winf
