#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "hurwitz.hpp"
#include "laurent.hpp"
#include "linsolve.hpp"
#include "memo.hpp"
#include "partial_perm.hpp"
#include "partition.hpp"
#include "series.hpp"

namespace winf {

/// Square matrix over the partitions of n. Rows are targets (Δ''), columns sources (Δ').
struct Block {
    int n = 0;
    std::size_t dim = 0;
    std::vector<LaurentScalar> entries;

    Block() = default;
    explicit Block(int degree) : n(degree), dim(partition_basis(degree).dim()), entries(dim * dim) {}

    LaurentScalar& at(std::size_t to, std::size_t from) { return entries[to * dim + from]; }
    const LaurentScalar& at(std::size_t to, std::size_t from) const { return entries[to * dim + from]; }

    bool operator==(const Block&) const = default;
};

/// Linear operator on the time-variable ring truncated at weighted degree N,
/// stored as one dense block per degree n <= N.
class BlockOperator {
public:
    BlockOperator() = default;
    BlockOperator(int bound, std::optional<Partition> label, bool normalized)
        : bound_(bound), label_(std::move(label)), normalized_(normalized) {
        if(bound < 0) {
            throw invalid_input("truncation bound must be nonnegative");
        }
        for(int n = 0; n <= bound; ++n) {
            blocks_.emplace_back(n);
        }
    }

    static BlockOperator identity(int bound, bool normalized = false) {
        BlockOperator op(bound, Partition{}, normalized);
        for(auto& b : op.blocks_) {
            for(std::size_t i = 0; i < b.dim; ++i) {
                b.at(i, i) = Rational(1);
            }
        }
        return op;
    }

    int bound() const noexcept { return bound_; }
    const std::optional<Partition>& label() const noexcept { return label_; }
    bool normalized() const noexcept { return normalized_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    Block& block(int n) { return blocks_.at(static_cast<std::size_t>(n)); }
    const Block& block(int n) const { return blocks_.at(static_cast<std::size_t>(n)); }

    /// Coefficient of p_to in W p_from.
    const LaurentScalar& entry(const Partition& to, const Partition& from) const {
        if(to.size() != from.size()) {
            static const LaurentScalar zero;
            return zero;
        }
        const auto& basis = partition_basis(from.size());
        return block(from.size()).at(basis.position(to), basis.position(from));
    }

    void set_label(std::optional<Partition> label) { label_ = std::move(label); }
    void set_normalized(bool v) { normalized_ = v; }

    /// this += c * other.
    BlockOperator& add_scaled(const BlockOperator& other, const LaurentScalar& c) {
        check_compatible(other, "add_scaled");
        for(std::size_t k = 0; k < blocks_.size(); ++k) {
            auto& dst = blocks_[k].entries;
            const auto& src = other.blocks_[k].entries;
            for(std::size_t i = 0; i < dst.size(); ++i) {
                if(!src[i].is_zero()) {
                    dst[i] += src[i] * c;
                }
            }
        }
        label_.reset();
        return *this;
    }

    /// Same degree bound, normalization and matrices (labels are not compared).
    friend bool operator==(const BlockOperator& a, const BlockOperator& b) {
        return a.bound_ == b.bound_ && a.normalized_ == b.normalized_ && a.blocks_ == b.blocks_;
    }

    void check_compatible(const BlockOperator& o, const char* what) const {
        if(o.bound_ != bound_) {
            throw invalid_input(std::string(what) + ": truncation mismatch");
        }
        if(o.normalized_ != normalized_) {
            throw invalid_input(std::string(what) + ": mixed normalization");
        }
    }

private:
    int bound_ = 0;
    std::optional<Partition> label_;
    bool normalized_ = false;
    std::vector<Block> blocks_;
};

namespace detail {

inline bool has_integral_genus(std::initializer_list<const Partition*> profiles) {
    int s = 0;
    for(const Partition* p : profiles) {
        s += p->weight();
    }
    return s % 2 == 0;
}

template<typename F>
void for_each_degree(int bound, int threads, F&& fill) {
    if(threads <= 1 || bound == 0) {
        for(int n = 0; n <= bound; ++n) {
            fill(n);
        }
        return;
    }
    std::vector<std::jthread> pool;
    const int workers = std::min(threads, bound + 1);
    for(int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for(int n = w; n <= bound; n += workers) {
                fill(n);
            }
        });
    }
}

} // namespace detail

/// W(Δ,z) from its action on monomials:
///   W(Δ,z) p_{Δ'} = Σ_{Δ''} z^{|Δ|-l(Δ)+l(Δ')-l(Δ'')} z_{Δ'} U_0(Δ', Δ, Δ'') p_{Δ''},
/// with z_{Δ'} = ||Δ'|| Π m_i(Δ')! and U_0 the genus-zero Frobenius sum in degree |Δ'|.
/// W(∅,z) is the identity.
inline BlockOperator build_w_action(const Partition& delta, int bound, int threads = 1) {
    static detail::SyncMemo<std::pair<Partition, int>, BlockOperator> memo;
    if(bound < 0) {
        throw invalid_input("build_w_action: N must be nonnegative");
    }
    return memo.get_or_compute({delta, bound}, [&] {
        BlockOperator op(bound, delta, false);
        if(delta.empty()) {
            return BlockOperator::identity(bound);
        }
        detail::for_each_degree(bound, threads, [&](int n) {
            if(delta.size() > n) {
                return;
            }
            const auto& basis = partition_basis(n);
            auto& blk = op.block(n);
            for(std::size_t j = 0; j < basis.dim(); ++j) {
                const auto& from = basis.items[j];
                const Rational zfrom(from.centralizer());
                for(std::size_t i = 0; i < basis.dim(); ++i) {
                    const auto& to = basis.items[i];
                    if(!detail::has_integral_genus({&from, &delta, &to})) {
                        continue;
                    }
                    Rational u = disconnected_U({0, n, {from, delta, to}}).value;
                    if(u == 0) {
                        continue;
                    }
                    blk.at(i, j) = LaurentScalar::monomial(Rational(zfrom * u), delta.weight() + from.length() - to.length());
                }
            }
        });
        return op;
    });
}

/// A differential operator written in normal order, Σ c · p_Γ ∂/∂p_{Γ'}.
/// Keys are (Γ, Γ') = (multiplied monomial, differentiated monomial).
struct NormalOrderedOperator {
    int bound = 0;
    std::map<std::pair<Partition, Partition>, LaurentScalar> terms;

    void add(const Partition& mul, const Partition& diff, const LaurentScalar& c) {
        if(c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms.try_emplace({mul, diff}, c);
        if(!inserted) {
            it->second += c;
            if(it->second.is_zero()) {
                terms.erase(it);
            }
        }
    }

    /// Matrix of the operator on the monomial basis:
    ///   p_Γ ∂_{Γ'} p_{Δ'} = Π_i (m_i(Δ') ↓ m_i(Γ')) p_{Δ'-Γ'+Γ}.
    BlockOperator to_blocks(std::optional<Partition> label) const {
        BlockOperator op(bound, std::move(label), false);
        for(int n = 0; n <= bound; ++n) {
            const auto& basis = partition_basis(n);
            auto& blk = op.block(n);
            for(std::size_t j = 0; j < basis.dim(); ++j) {
                const auto& from = basis.items[j];
                for(const auto& [key, c] : terms) {
                    const auto& [mul, diff] = key;
                    if(mul.size() != diff.size() || diff.size() > n) {
                        continue;
                    }
                    auto rest = sub(from, diff);
                    if(!rest) {
                        continue;
                    }
                    Integer factor = 1;
                    for(auto [part, m] : diff.multiplicities()) {
                        factor *= falling_factorial(from.multiplicity(part), m);
                    }
                    Partition to = winf::add(*rest, mul);
                    blk.at(basis.position(to), j) += c * Rational(factor);
                }
            }
        }
        return op;
    }
};

/// One connected factor ||Γ'|| CU_0(Γ', D, Γ) p_Γ ∂_{Γ'} attached to a block D.
struct CutJoinComponent {
    Partition diff;
    Partition mul;
    Rational coefficient;
};

/// All nonzero connected components for the block D acting in degrees <= bound.
/// A genus-zero connected factor needs 2h-2 = |D|-l(D)-l(Γ')-l(Γ) with h >= 0.
inline std::vector<CutJoinComponent> connected_components(const Partition& block, int bound) {
    std::vector<CutJoinComponent> out;
    for(int m = std::max(1, block.size()); m <= bound; ++m) {
        const auto& basis = partition_basis(m);
        for(const auto& diff : basis.items) {
            for(const auto& mul : basis.items) {
                int slack = block.weight() - diff.length() - mul.length();
                if(slack < -2 || slack % 2 != 0) {
                    continue;
                }
                Rational cu = connected_CU({0, m, {diff, block, mul}}).value;
                if(cu != 0) {
                    out.push_back({diff, mul, Rational(Rational(diff.product()) * cu)});
                }
            }
        }
    }
    return out;
}

/// W(Δ,z) in normal-ordered form: a sum over proper re-partitions Δ̃ of Δ and
/// over multisets of connected components, one per block of Δ̃, weighted
/// z^{|Δ|-l(Δ)+l(Γ')-l(Γ)} / |Aut|.
inline NormalOrderedOperator normal_ordered_terms(const Partition& delta, int bound) {
    NormalOrderedOperator op;
    op.bound = bound;
    if(delta.empty()) {
        op.add(Partition{}, Partition{}, Rational(1));
        return op;
    }
    std::map<Partition, std::vector<CutJoinComponent>> candidates;
    for(const auto& rp : proper_repartitions(delta)) {
        for(const auto& blk : rp.blocks) {
            if(!candidates.contains(blk)) {
                candidates.emplace(blk, connected_components(blk, bound));
            }
        }
    }
    for(const auto& rp : proper_repartitions(delta)) {
        // Identical blocks take a multiset of components: nondecreasing indices.
        std::vector<std::pair<Partition, int>> groups;
        for(const auto& b : rp.blocks) {
            if(!groups.empty() && groups.back().first == b) {
                ++groups.back().second;
            } else {
                groups.emplace_back(b, 1);
            }
        }
        std::vector<Triple> triples;
        auto rec = [&](auto&& self, std::size_t g, int left, std::size_t min_index, int degree,
                       Partition diff, Partition mul, Rational coeff) -> void {
            if(g == groups.size()) {
                Rational c = coeff / Rational(aut_count(triples));
                int e = delta.weight() + diff.length() - mul.length();
                op.add(mul, diff, LaurentScalar::monomial(c, e));
                return;
            }
            if(left == 0) {
                std::size_t next = g + 1;
                int next_left = next < groups.size() ? groups[next].second : 0;
                self(self, next, next_left, 0, degree, std::move(diff), std::move(mul), std::move(coeff));
                return;
            }
            const auto& comps = candidates.at(groups[g].first);
            for(std::size_t i = min_index; i < comps.size(); ++i) {
                const auto& c = comps[i];
                if(degree + c.diff.size() > bound) {
                    continue;
                }
                triples.emplace_back(c.diff, groups[g].first, c.mul);
                self(self, g, left - 1, i, degree + c.diff.size(), add(diff, c.diff), add(mul, c.mul),
                     Rational(coeff * c.coefficient));
                triples.pop_back();
            }
        };
        rec(rec, 0, groups.front().second, 0, 0, Partition{}, Partition{}, Rational(1));
    }
    return op;
}

inline BlockOperator build_w_normal_ordered(const Partition& delta, int bound) {
    if(bound < 0) {
        throw invalid_input("build_w_normal_ordered: N must be nonnegative");
    }
    return normal_ordered_terms(delta, bound).to_blocks(delta);
}

/// Ŵ(Δ,z) = z^{-|Δ|+l(Δ)} W(Δ,z).
inline BlockOperator normalize(const BlockOperator& w) {
    if(w.normalized()) {
        throw invalid_state("operator is already normalized");
    }
    if(!w.label()) {
        throw invalid_state("only a labelled W(Δ,z) can be normalized");
    }
    const int shift = -w.label()->weight();
    BlockOperator out = w;
    for(int n = 0; n <= out.bound(); ++n) {
        for(auto& e : out.block(n).entries) {
            e = e.shifted(shift);
        }
    }
    out.set_normalized(true);
    return out;
}

inline TruncatedSeries apply(const BlockOperator& w, const TruncatedSeries& s) {
    if(s.bound() != w.bound()) {
        throw invalid_input("apply: truncation mismatch (" + std::to_string(w.bound()) + " vs " +
                            std::to_string(s.bound()) + ")");
    }
    TruncatedSeries out(s.bound());
    for(const auto& [p, c] : s.terms()) {
        const auto& basis = partition_basis(p.size());
        const auto& blk = w.block(p.size());
        const std::size_t j = basis.position(p);
        for(std::size_t i = 0; i < basis.dim(); ++i) {
            const auto& e = blk.at(i, j);
            if(!e.is_zero()) {
                out.add(basis.items[i], e * c);
            }
        }
    }
    return out;
}

/// w1 ∘ w2 (w2 acts first).
inline BlockOperator compose(const BlockOperator& w1, const BlockOperator& w2) {
    w1.check_compatible(w2, "compose");
    BlockOperator out(w1.bound(), std::nullopt, w1.normalized());
    for(int n = 0; n <= w1.bound(); ++n) {
        const auto& a = w1.block(n);
        const auto& b = w2.block(n);
        auto& c = out.block(n);
        for(std::size_t i = 0; i < a.dim; ++i) {
            for(std::size_t j = 0; j < a.dim; ++j) {
                const auto& aij = a.at(i, j);
                if(aij.is_zero()) {
                    continue;
                }
                for(std::size_t k = 0; k < a.dim; ++k) {
                    const auto& bjk = b.at(j, k);
                    if(!bjk.is_zero()) {
                        c.at(i, k) += aij * bjk;
                    }
                }
            }
        }
    }
    return out;
}

/// S_λ{p,z} = Σ_{Γ' ⊢ |λ|} z^{-|Γ'|-l(Γ')} (dim λ/|λ|!) φ_λ(Γ') p_{Γ'}.
inline TruncatedSeries genus_schur(const Partition& lambda, int bound) {
    if(lambda.size() > bound) {
        throw invalid_input("genus_schur: |" + to_string(lambda) + "| exceeds N = " + std::to_string(bound));
    }
    const int n = lambda.size();
    TruncatedSeries s(bound);
    const Rational weight = Rational(dim(lambda)) / Rational(factorial(static_cast<unsigned>(n)));
    for(const auto& gamma : partition_basis(n).items) {
        s.add(gamma, LaurentScalar::monomial(Rational(weight * phi(lambda, gamma)), -gamma.size() - gamma.length()));
    }
    return s;
}

struct EigenResult {
    bool holds = false;
    LaurentScalar eigenvalue;
};

inline LaurentScalar eigenvalue(const Partition& delta, const Partition& lambda, bool normalized = false) {
    return LaurentScalar::monomial(phi(lambda, delta), normalized ? 0 : delta.weight());
}

/// Checks W S_λ = z^{|Δ|-l(Δ)} φ_λ(Δ) S_λ for an already built W(Δ,z) (or Ŵ).
inline EigenResult eigencheck(const BlockOperator& w, const Partition& lambda) {
    if(!w.label()) {
        throw invalid_input("eigencheck needs a labelled operator");
    }
    auto s = genus_schur(lambda, w.bound());
    EigenResult r;
    r.eigenvalue = eigenvalue(*w.label(), lambda, w.normalized());
    r.holds = (apply(w, s) == s * r.eigenvalue);
    return r;
}

inline EigenResult eigencheck(const Partition& delta, const Partition& lambda, int bound) {
    if(lambda.size() > bound) {
        throw invalid_input("eigencheck: |λ| exceeds N");
    }
    return eigencheck(build_w_action(delta, bound), lambda);
}

/// Σ_{Δ3} z^{w(Δ1)+w(Δ2)-w(Δ3)} Ĉ^{Δ3} W(Δ3,z), or the same in the Ŵ basis without z factors.
inline BlockOperator combine(const ClassVector& c, int weight_sum, int bound, bool normalized) {
    BlockOperator out(bound, std::nullopt, normalized);
    for(const auto& [d3, coeff] : c.coefficients) {
        BlockOperator w = build_w_action(d3, bound);
        if(normalized) {
            out.add_scaled(normalize(w), LaurentScalar(coeff));
        } else {
            out.add_scaled(w, LaurentScalar::monomial(coeff, weight_sum - d3.weight()));
        }
    }
    return out;
}

/// W(Δ1)W(Δ2) = Σ z^{...} Ĉ W(Δ3), checked block by block; with `normalized`,
/// Ŵ(Δ1)Ŵ(Δ2) = Σ Ĉ Ŵ(Δ3).
inline bool verify_theorem(const Partition& d1, const Partition& d2, int bound, const ClassVector& c,
                           bool normalized = false) {
    BlockOperator w1 = build_w_action(d1, bound);
    BlockOperator w2 = build_w_action(d2, bound);
    if(normalized) {
        w1 = normalize(w1);
        w2 = normalize(w2);
    }
    return compose(w1, w2) == combine(c, d1.weight() + d2.weight(), bound, normalized);
}

struct Expansion {
    bool unique = false;
    bool consistent = false;
    std::map<Partition, LaurentScalar> coefficients;

    bool z_free() const {
        return std::all_of(coefficients.begin(), coefficients.end(),
                           [](const auto& kv) { return kv.second.z_free(); });
    }
};

/// Expands a normalized operator in the basis {Ŵ(Δ3) : Δ3 ∈ labels}, allowing
/// Laurent coefficients in z.
///
/// Every entry (Δ'',Δ') of Ŵ(Δ3) is r·z^{l(Δ')-l(Δ'')} with the exponent
/// independent of Δ3, so the system splits into one rational system per
/// z-power e of the coefficients, all sharing the matrix [r].
inline Expansion expand_normalized(const BlockOperator& target, const std::vector<Partition>& labels) {
    if(!target.normalized()) {
        throw invalid_input("expand_normalized: target must be normalized");
    }
    const int bound = target.bound();
    std::vector<BlockOperator> basis;
    for(const auto& l : labels) {
        basis.push_back(normalize(build_w_action(l, bound)));
    }
    struct Slot {
        int n;
        std::size_t i, j;
        int shift;
    };
    std::vector<Slot> slots;
    for(int n = 0; n <= bound; ++n) {
        const auto& pb = partition_basis(n);
        for(std::size_t i = 0; i < pb.dim(); ++i) {
            for(std::size_t j = 0; j < pb.dim(); ++j) {
                slots.push_back({n, i, j, pb.items[j].length() - pb.items[i].length()});
            }
        }
    }
    RationalMatrix a(slots.size(), labels.size());
    for(std::size_t r = 0; r < slots.size(); ++r) {
        const auto& s = slots[r];
        for(std::size_t k = 0; k < labels.size(); ++k) {
            const auto& e = basis[k].block(s.n).at(s.i, s.j);
            ensure(e.is_zero() || (e.is_monomial() && e.terms().begin()->first == s.shift),
                   "normalized entry is not the expected z-monomial");
            a(r, k) = e.coefficient(s.shift);
        }
    }
    std::set<int> powers;
    for(const auto& s : slots) {
        for(const auto& [d, c] : target.block(s.n).at(s.i, s.j).terms()) {
            (void)c;
            powers.insert(d - s.shift);
        }
    }
    std::vector<int> order(powers.begin(), powers.end());
    RationalMatrix b(slots.size(), order.size());
    for(std::size_t r = 0; r < slots.size(); ++r) {
        const auto& s = slots[r];
        const auto& e = target.block(s.n).at(s.i, s.j);
        for(std::size_t k = 0; k < order.size(); ++k) {
            b(r, k) = e.coefficient(order[k] + s.shift);
        }
    }
    auto sol = solve(a, b);
    Expansion out;
    out.unique = sol.unique;
    out.consistent = std::all_of(sol.solutions.begin(), sol.solutions.end(), [](const auto& x) { return x.has_value(); });
    if(!out.consistent) {
        return out;
    }
    for(std::size_t k = 0; k < order.size(); ++k) {
        const auto& x = *sol.solutions[k];
        for(std::size_t l = 0; l < labels.size(); ++l) {
            if(x[l] != 0) {
                out.coefficients[labels[l]].add_term(order[k], x[l]);
            }
        }
    }
    return out;
}

} // namespace winf
