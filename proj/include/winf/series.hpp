#pragma once

#include <map>
#include <string>

#include "laurent.hpp"
#include "partition.hpp"

namespace winf {

/// Polynomial in the time-variables p_1, p_2, ... truncated at weighted degree N.
/// The monomial p_Γ is keyed by Γ; deg p_Γ = |Γ|.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int bound) : bound_(bound) {
        if(bound < 0) {
            throw invalid_input("truncation bound must be nonnegative");
        }
    }

    static TruncatedSeries monomial(const Partition& p, int bound, const LaurentScalar& c = Rational(1)) {
        TruncatedSeries s(bound);
        s.add(p, c);
        return s;
    }

    int bound() const noexcept { return bound_; }
    const std::map<Partition, LaurentScalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    LaurentScalar coefficient(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? LaurentScalar{} : it->second;
    }

    void add(const Partition& p, const LaurentScalar& c) {
        if(p.size() > bound_) {
            throw invalid_input("monomial " + to_string(p) + " exceeds truncation bound " + std::to_string(bound_));
        }
        if(c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(p, c);
        if(!inserted) {
            it->second += c;
            if(it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    /// Homogeneous part of weighted degree n.
    TruncatedSeries degree_part(int n) const {
        TruncatedSeries s(bound_);
        for(const auto& [p, c] : terms_) {
            if(p.size() == n) {
                s.terms_.emplace(p, c);
            }
        }
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_bound(o);
        for(const auto& [p, c] : o.terms_) {
            add(p, c);
        }
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_bound(o);
        for(const auto& [p, c] : o.terms_) {
            add(p, -c);
        }
        return *this;
    }

    TruncatedSeries& operator*=(const LaurentScalar& s) {
        std::map<Partition, LaurentScalar> out;
        for(const auto& [p, c] : terms_) {
            auto v = c * s;
            if(!v.is_zero()) {
                out.emplace(p, std::move(v));
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const LaurentScalar& s) { return a *= s; }
    friend TruncatedSeries operator*(const LaurentScalar& s, TruncatedSeries a) { return a *= s; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.bound_ == b.bound_ && a.terms_ == b.terms_;
    }

private:
    void check_bound(const TruncatedSeries& o) const {
        if(o.bound_ != bound_) {
            throw invalid_input("truncation mismatch: " + std::to_string(bound_) + " vs " + std::to_string(o.bound_));
        }
    }

    int bound_ = 0;
    std::map<Partition, LaurentScalar> terms_;
};

inline std::string to_string(const TruncatedSeries& s) {
    if(s.is_zero()) {
        return "0";
    }
    std::string out;
    for(const auto& [p, c] : s.terms()) {
        if(!out.empty()) {
            out += " + ";
        }
        out += "[" + to_string(c) + "]*p" + to_string(p);
    }
    return out;
}

} // namespace winf
