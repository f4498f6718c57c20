#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "cutjoin.hpp"
#include "hurwitz.hpp"
#include "laurent.hpp"
#include "partition.hpp"

namespace winf {

/// Monomial Π u_j^{e_j} Π_f p^{(f)}_{Γ_f}. The last family is p itself.
struct MonomialKey {
    std::vector<int> u_exps;
    std::vector<Partition> families;

    auto operator<=>(const MonomialKey&) const = default;
    bool operator==(const MonomialKey&) const = default;

    int u_order() const {
        int s = 0;
        for(int e : u_exps) {
            s += e;
        }
        return s;
    }
};

/// Truncated series in insertion variables u_1..u_m and one or two families of
/// time-variables, with Laurent coefficients in z. Truncation: every family
/// degree <= `bound` and total u-order <= `u_max`.
class MultiSeries {
public:
    MultiSeries() = default;
    MultiSeries(int families, int insertions, int bound, int u_max)
        : families_(families), insertions_(insertions), bound_(bound), u_max_(u_max) {
        if(families < 1 || families > 2) {
            throw invalid_input("MultiSeries supports one or two time-variable families");
        }
        if(bound < 0 || u_max < 0 || insertions < 0) {
            throw invalid_input("MultiSeries: negative truncation");
        }
    }

    int families() const noexcept { return families_; }
    int insertions() const noexcept { return insertions_; }
    int bound() const noexcept { return bound_; }
    int u_max() const noexcept { return u_max_; }
    const std::map<MonomialKey, LaurentScalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool admits(const MonomialKey& k) const {
        if(static_cast<int>(k.u_exps.size()) != insertions_ || static_cast<int>(k.families.size()) != families_) {
            return false;
        }
        if(k.u_order() > u_max_) {
            return false;
        }
        for(const auto& p : k.families) {
            if(p.size() > bound_) {
                return false;
            }
        }
        return true;
    }

    /// Adds a term; terms outside the truncation are dropped when `truncate`,
    /// otherwise rejected.
    void add(const MonomialKey& k, const LaurentScalar& c, bool truncate = false) {
        if(!admits(k)) {
            if(truncate) {
                return;
            }
            throw invalid_input("MultiSeries: key outside truncation");
        }
        if(c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if(!inserted) {
            it->second += c;
            if(it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    LaurentScalar coefficient(const MonomialKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? LaurentScalar{} : it->second;
    }

    MonomialKey key(std::vector<int> u, std::vector<Partition> fams) const {
        if(u.empty()) {
            u.assign(static_cast<std::size_t>(insertions_), 0);
        }
        return {std::move(u), std::move(fams)};
    }

    MultiSeries& operator+=(const MultiSeries& o) {
        check_shape(o);
        for(const auto& [k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }

    MultiSeries& operator-=(const MultiSeries& o) {
        check_shape(o);
        for(const auto& [k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }

    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }

    /// Truncated product.
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        a.check_shape(b);
        MultiSeries out(a.families_, a.insertions_, a.bound_, a.u_max_);
        for(const auto& [ka, ca] : a.terms_) {
            for(const auto& [kb, cb] : b.terms_) {
                MonomialKey k;
                k.u_exps.resize(ka.u_exps.size());
                for(std::size_t i = 0; i < ka.u_exps.size(); ++i) {
                    k.u_exps[i] = ka.u_exps[i] + kb.u_exps[i];
                }
                for(std::size_t f = 0; f < ka.families.size(); ++f) {
                    k.families.push_back(winf::add(ka.families[f], kb.families[f]));
                }
                out.add(k, ca * cb, true);
            }
        }
        return out;
    }

    MultiSeries& operator*=(const LaurentScalar& s) {
        std::map<MonomialKey, LaurentScalar> out;
        for(const auto& [k, c] : terms_) {
            auto v = c * s;
            if(!v.is_zero()) {
                out.emplace(k, std::move(v));
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.families_ == b.families_ && a.insertions_ == b.insertions_ && a.bound_ == b.bound_ &&
               a.u_max_ == b.u_max_ && a.terms_ == b.terms_;
    }

    void check_shape(const MultiSeries& o) const {
        if(o.families_ != families_ || o.insertions_ != insertions_ || o.bound_ != bound_ || o.u_max_ != u_max_) {
            throw invalid_input("MultiSeries: shape mismatch");
        }
    }

private:
    int families_ = 1;
    int insertions_ = 0;
    int bound_ = 0;
    int u_max_ = 0;
    std::map<MonomialKey, LaurentScalar> terms_;
};

struct Insertion {
    std::string name;
    Partition delta;
};

using InsertionSpec = std::vector<Insertion>;

inline void validate(const InsertionSpec& spec) {
    for(const auto& ins : spec) {
        if(ins.delta.empty()) {
            throw invalid_input("insertion '" + ins.name + "' has an empty partition");
        }
    }
}

namespace detail {

// Calls f(l) for every exponent vector l of length m with Σ l <= u_max.
template<typename F>
void for_each_u_vector(std::size_t m, int u_max, F&& f) {
    std::vector<int> l(m, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if(i == m) {
            f(l);
            return;
        }
        for(int k = 0; k <= left; ++k) {
            l[i] = k;
            self(self, i + 1, left - k);
        }
        l[i] = 0;
    };
    rec(rec, 0, u_max);
}

// p^{a} with p_1 -> p_1 + sign: Σ_j binom(m_1, j) sign^{m_1-j} p_1^j p_rest.
inline std::vector<std::pair<Partition, Rational>> shift_ones(const Partition& p, int sign) {
    const int m1 = p.multiplicity(1);
    const Partition rest = p.without_ones();
    std::vector<std::pair<Partition, Rational>> out;
    for(int j = 0; j <= m1; ++j) {
        Rational c(binomial(m1, j));
        if(sign < 0 && (m1 - j) % 2 != 0) {
            c = -c;
        }
        out.emplace_back(winf::add(rest, Partition::ones(j)), c);
    }
    return out;
}

} // namespace detail

/// Substitutes p_1 -> p_1 + sign (sign = ±1) in the given family.
inline MultiSeries shift_family(const MultiSeries& s, std::size_t family, int sign) {
    MultiSeries out(s.families(), s.insertions(), s.bound(), s.u_max());
    for(const auto& [k, c] : s.terms()) {
        for(const auto& [p, w] : detail::shift_ones(k.families.at(family), sign)) {
            MonomialKey nk = k;
            nk.families[family] = p;
            out.add(nk, c * w);
        }
    }
    return out;
}

/// W acting on the last family p, coefficient-wise in all other variables.
inline MultiSeries apply_on_p(const BlockOperator& w, const MultiSeries& s) {
    if(w.bound() != s.bound()) {
        throw invalid_input("apply_on_p: truncation mismatch");
    }
    MultiSeries out(s.families(), s.insertions(), s.bound(), s.u_max());
    const std::size_t f = static_cast<std::size_t>(s.families() - 1);
    for(const auto& [k, c] : s.terms()) {
        const auto& p = k.families[f];
        const auto& basis = partition_basis(p.size());
        const auto& blk = w.block(p.size());
        const std::size_t j = basis.position(p);
        for(std::size_t i = 0; i < basis.dim(); ++i) {
            const auto& e = blk.at(i, j);
            if(!e.is_zero()) {
                MonomialKey nk = k;
                nk.families[f] = basis.items[i];
                out.add(nk, e * c);
            }
        }
    }
    return out;
}

/// W conjugated by the shift p_1 -> p_1 + 1, i.e. W written in the variables
/// (p_1 + 1, p_2, ...) in which the shifted generating functions are eigen-expansions.
inline MultiSeries apply_shifted(const BlockOperator& w, const MultiSeries& s) {
    const std::size_t f = static_cast<std::size_t>(s.families() - 1);
    return shift_family(apply_on_p(w, shift_family(s, f, -1)), f, +1);
}

/// ∂/∂u_i.
inline MultiSeries u_derivative(const MultiSeries& s, std::size_t i) {
    MultiSeries out(s.families(), s.insertions(), s.bound(), s.u_max());
    for(const auto& [k, c] : s.terms()) {
        if(k.u_exps.at(i) == 0) {
            continue;
        }
        MonomialKey nk = k;
        nk.u_exps[i] -= 1;
        out.add(nk, c * Rational(k.u_exps[i]));
    }
    return out;
}

/// Drops every term of total u-order >= `order`.
inline MultiSeries below_u_order(const MultiSeries& s, int order) {
    MultiSeries out(s.families(), s.insertions(), s.bound(), s.u_max());
    for(const auto& [k, c] : s.terms()) {
        if(k.u_order() < order) {
            out.add(k, c);
        }
    }
    return out;
}

/// Φ_g by its defining sum over covering degrees n <= bound:
///   Σ z^{2h-2} U_g^{h,n}(Δ_1^{l_1},..,Δ_m^{l_m}, [Γ_1,] Γ) Π u_j^{l_j}/l_j! [p^{(1)}_{Γ_1}] p_Γ,
/// with h from the Hurwitz formula and U evaluated as a character sum.
inline MultiSeries phi_direct(int g, const InsertionSpec& ins, int bound, int u_max, bool two_family = false) {
    validate(ins);
    if(g < 0) {
        throw invalid_input("phi_direct: g must be nonnegative");
    }
    const int fams = two_family ? 2 : 1;
    MultiSeries out(fams, static_cast<int>(ins.size()), bound, u_max);
    for(int n = 0; n <= bound; ++n) {
        const auto gammas = partitions_up_to(n);
        const std::vector<Partition> firsts = two_family ? gammas : std::vector<Partition>{Partition{}};
        detail::for_each_u_vector(ins.size(), u_max, [&](const std::vector<int>& l) {
            std::vector<Partition> ram;
            Rational weight = 1;
            for(std::size_t j = 0; j < ins.size(); ++j) {
                for(int r = 0; r < l[j]; ++r) {
                    ram.push_back(ins[j].delta);
                }
                weight /= Rational(factorial(static_cast<unsigned>(l[j])));
            }
            const std::size_t base = ram.size();
            for(const auto& g1 : firsts) {
                for(const auto& gamma : gammas) {
                    ram.resize(base);
                    if(two_family) {
                        ram.push_back(g1);
                    }
                    ram.push_back(gamma);
                    const int s = total_weight(ram);
                    if(s % 2 != 0) {
                        continue;
                    }
                    Rational u = disconnected_U({g, n, ram}).value;
                    if(u == 0) {
                        continue;
                    }
                    const int exponent = -(2 - 2 * g) * n + s;
                    std::vector<Partition> fam = two_family ? std::vector<Partition>{g1, gamma} : std::vector<Partition>{gamma};
                    out.add(MonomialKey{l, std::move(fam)}, LaurentScalar::monomial(Rational(u * weight), exponent));
                }
            }
        });
    }
    return out;
}

/// Π_i exp(u_i W(Δ_i,z)) applied to an insertion-free base. The operators act
/// in the shifted variables (see apply_shifted); exponentials are cut at total
/// u-order u_max, so each is a finite sum.
inline MultiSeries phi_exp_action(int g, const InsertionSpec& ins, const MultiSeries& base, int bound, int u_max) {
    (void)g;
    validate(ins);
    if(base.insertions() != 0) {
        throw invalid_input("phi_exp_action: base must carry no insertion variables");
    }
    if(base.bound() != bound) {
        throw invalid_input("phi_exp_action: base truncation differs from N");
    }
    const std::size_t f = static_cast<std::size_t>(base.families() - 1);
    MultiSeries cur(base.families(), static_cast<int>(ins.size()), bound, u_max);
    const MultiSeries unshifted = shift_family(base, f, -1);
    for(const auto& [k, c] : unshifted.terms()) {
        cur.add(MonomialKey{std::vector<int>(ins.size(), 0), k.families}, c);
    }
    for(std::size_t i = 0; i < ins.size(); ++i) {
        const BlockOperator w = build_w_action(ins[i].delta, bound);
        MultiSeries total = cur;
        MultiSeries power = cur;
        for(int j = 1; j <= u_max; ++j) {
            MultiSeries next(cur.families(), cur.insertions(), bound, u_max);
            const MultiSeries applied = apply_on_p(w, power);
            for(const auto& [k, c] : applied.terms()) {
                MonomialKey nk = k;
                nk.u_exps[i] += 1;
                next.add(nk, c * Rational(Rational(1) / j), true);
            }
            if(next.is_zero()) {
                break;
            }
            total += next;
            power = std::move(next);
        }
        cur = std::move(total);
    }
    return shift_family(cur, f, +1);
}

/// exp(A) where A = Σ_{k>=1} A_k is graded by covering degree; keeps degrees <= bound.
/// `graded[k]` holds A_k (graded[0] is ignored).
inline MultiSeries exp_graded(const std::vector<MultiSeries>& graded, int bound) {
    const auto& shape = graded.at(0);
    std::vector<MultiSeries> e;
    MultiSeries one(shape.families(), shape.insertions(), shape.bound(), shape.u_max());
    one.add(one.key({}, std::vector<Partition>(static_cast<std::size_t>(shape.families()))), Rational(1));
    e.push_back(one);
    MultiSeries total = one;
    for(int n = 1; n <= bound; ++n) {
        MultiSeries en(shape.families(), shape.insertions(), shape.bound(), shape.u_max());
        for(int k = 1; k <= n && k < static_cast<int>(graded.size()); ++k) {
            MultiSeries t = graded[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)];
            t *= LaurentScalar(ratio(k, n));
            en += t;
        }
        e.push_back(en);
        total += en;
    }
    return total;
}

/// Φ_0{z||p} = Σ_λ (dim λ/|λ|!) S_λ{p_m + δ_{m,1}, z}, |λ| <= bound.
inline MultiSeries phi0_closed(int bound) {
    MultiSeries out(1, 0, bound, 0);
    for(int n = 0; n <= bound; ++n) {
        for(const auto& lambda : partition_basis(n).items) {
            const Rational w = Rational(dim(lambda)) / Rational(factorial(static_cast<unsigned>(n)));
            const auto schur = genus_schur(lambda, bound);
            for(const auto& [p, c] : schur.terms()) {
                MultiSeries t(1, 0, bound, 0);
                t.add(t.key({}, {p}), c * w);
                out += t;
            }
        }
    }
    return shift_family(out, 0, +1);
}

/// exp((p_1 + 1)/z^2) truncated at covering degree <= bound.
inline MultiSeries phi0_exponential(int bound) {
    std::vector<MultiSeries> graded(2, MultiSeries(1, 0, bound, 0));
    graded[1].add(graded[1].key({}, {Partition::ones(1)}), LaurentScalar::monomial(1, -2), true);
    graded[1].add(graded[1].key({}, {Partition{}}), LaurentScalar::monomial(1, -2));
    return exp_graded(graded, bound);
}

/// Σ_λ Σ_{|Δ| <= |λ|} z^{-|Δ|-l(Δ)} (dim λ/|λ|!)^2 φ_λ(Δ) p_Δ, read literally. With
/// `completed_exponent` the z-power is taken from Δ completed by ones to |λ|.
inline MultiSeries phi0_first_line(int bound, bool completed_exponent = false) {
    MultiSeries out(1, 0, bound, 0);
    for(int n = 0; n <= bound; ++n) {
        const Rational nf(factorial(static_cast<unsigned>(n)));
        for(const auto& lambda : partition_basis(n).items) {
            const Rational w = pow(Rational(Rational(dim(lambda)) / nf), 2);
            for(const auto& d : partitions_up_to(n)) {
                const Partition e = completed_exponent ? d.shifted_to(n) : d;
                out.add(out.key({}, {d}), LaurentScalar::monomial(Rational(w * phi(lambda, d)), -e.size() - e.length()));
            }
        }
    }
    return out;
}

/// Φ_0{z||p^{(1)},p} = Σ_λ z^{2|λ|} S_λ{p^{(1)}_m + δ_{m,1}, z} S_λ{p_m + δ_{m,1}, z}, |λ| <= bound.
inline MultiSeries phi0_two_family(int bound) {
    MultiSeries out(2, 0, bound, 0);
    for(int n = 0; n <= bound; ++n) {
        for(const auto& lambda : partition_basis(n).items) {
            const auto s = genus_schur(lambda, bound);
            for(const auto& [p1, c1] : s.terms()) {
                for(const auto& [p2, c2] : s.terms()) {
                    out.add(out.key({}, {p1, p2}), (c1 * c2).shifted(2 * n));
                }
            }
        }
    }
    return shift_family(shift_family(out, 0, +1), 1, +1);
}

/// exp(Σ_{m>=1} (p^{(1)}_m + δ_{m,1})(p_m + δ_{m,1}) / (c_m z^2)) with c_m = m
/// (`with_inverse_m`) or c_m = 1, graded by covering degree m, truncated at bound.
inline MultiSeries phi0_two_family_exponential(int bound, bool with_inverse_m) {
    std::vector<MultiSeries> graded(static_cast<std::size_t>(bound) + 1, MultiSeries(2, 0, bound, 0));
    for(int m = 1; m <= bound; ++m) {
        auto& a = graded[static_cast<std::size_t>(m)];
        const Partition pm = Partition::canonicalize({m});
        const Rational c = with_inverse_m ? ratio(1, m) : Rational(1);
        a.add(a.key({}, {pm, pm}), LaurentScalar::monomial(c, -2));
        if(m == 1) {
            a.add(a.key({}, {pm, Partition{}}), LaurentScalar::monomial(c, -2));
            a.add(a.key({}, {Partition{}, pm}), LaurentScalar::monomial(c, -2));
            a.add(a.key({}, {Partition{}, Partition{}}), LaurentScalar::monomial(c, -2));
        }
    }
    return exp_graded(graded, bound);
}

/// Σ_λ Σ_{Δ1,Δ2} z^{2|λ|-|Δ1|-|Δ2|-l(Δ1)-l(Δ2)} (dim λ/|λ|!)^2 φ_λ(Δ1) φ_λ(Δ2) p^{(1)}_{Δ1} p_{Δ2},
/// read literally or (`completed_exponent`) with exponents of the completed partitions.
inline MultiSeries phi0_two_family_first_line(int bound, bool completed_exponent = false) {
    MultiSeries out(2, 0, bound, 0);
    for(int n = 0; n <= bound; ++n) {
        const Rational nf(factorial(static_cast<unsigned>(n)));
        const auto ds = partitions_up_to(n);
        for(const auto& lambda : partition_basis(n).items) {
            const Rational w = pow(Rational(Rational(dim(lambda)) / nf), 2);
            for(const auto& d1 : ds) {
                Rational f1 = phi(lambda, d1);
                if(f1 == 0) {
                    continue;
                }
                for(const auto& d2 : ds) {
                    Rational c = w * f1 * phi(lambda, d2);
                    const Partition e1 = completed_exponent ? d1.shifted_to(n) : d1;
                    const Partition e2 = completed_exponent ? d2.shifted_to(n) : d2;
                    int e = 2 * n - e1.size() - e2.size() - e1.length() - e2.length();
                    out.add(out.key({}, {d1, d2}), LaurentScalar::monomial(c, e));
                }
            }
        }
    }
    return out;
}

/// One displayed term c · u^{l} (p_1 + 1)^{a} p_rest z^{e}, expanded.
struct DisplayedTerm {
    Rational coefficient;
    int u_exp;
    int shifted_ones;
    Partition rest;
    int z_exp;
    std::string text;
};

struct TermComparison {
    std::string text;
    Partition monomial;
    int u_exp;
    int z_exp;
    Rational expected;
    Rational computed;
    bool matches() const { return expected == computed; }
};

/// Compares the low-order terms of Φ_0{z|(u,(2,1))|p} displayed in the literature
/// with a computed single-insertion, single-family series.
inline std::vector<TermComparison> compare_displayed_terms(const MultiSeries& computed) {
    const std::vector<DisplayedTerm> displayed = {
        {ratio(1, 6), 0, 3, Partition{}, -6, "(1/6)(p1+1)^3 z^-6"},
        {ratio(1, 2), 1, 1, Partition::canonicalize({2}), -4, "(1/2)u(p1+1)p2 z^-4"},
        {ratio(1, 2), 2, 0, Partition::canonicalize({3}), -2, "(1/2)u^2 p3 z^-2"},
        {ratio(1, 4), 2, 3, Partition{}, -4, "(1/4)u^2(p1+1)^3 z^-4"},
        {ratio(3, 4), 3, 1, Partition::canonicalize({2}), -2, "(3/4)u^3(p1+1)p2 z^-2"},
    };
    std::vector<TermComparison> out;
    for(const auto& t : displayed) {
        for(int j = 0; j <= t.shifted_ones; ++j) {
            Partition mono = winf::add(t.rest, Partition::ones(j));
            if(mono.size() > computed.bound() || t.u_exp > computed.u_max()) {
                continue;
            }
            Rational expected = t.coefficient * Rational(binomial(t.shifted_ones, j));
            Rational got = computed.coefficient(MonomialKey{{t.u_exp}, {mono}}).coefficient(t.z_exp);
            out.push_back({t.text, mono, t.u_exp, t.z_exp, expected, got});
        }
    }
    return out;
}

} // namespace winf
