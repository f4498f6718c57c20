#pragma once

#include <map>
#include <string>

#include "rational.hpp"

namespace winf {

/// Finite Laurent polynomial in the genus parameter z with exact rational
/// coefficients. Zero coefficients are never stored.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(const Rational& c) { add_term(0, c); }

    static LaurentScalar monomial(const Rational& c, int exponent) {
        LaurentScalar s;
        s.add_term(exponent, c);
        return s;
    }

    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool z_free() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    Rational coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int exponent, const Rational& c) {
        if(c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if(!inserted) {
            it->second += c;
            if(it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Multiplies by z^k.
    LaurentScalar shifted(int k) const {
        LaurentScalar s;
        for(const auto& [e, c] : terms_) {
            s.terms_.emplace(e + k, c);
        }
        return s;
    }

    LaurentScalar& operator+=(const LaurentScalar& o) {
        for(const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    LaurentScalar& operator-=(const LaurentScalar& o) {
        for(const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    LaurentScalar& operator*=(const Rational& r) {
        if(r == 0) {
            terms_.clear();
            return *this;
        }
        for(auto& [e, c] : terms_) {
            c *= r;
        }
        return *this;
    }

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(LaurentScalar a, const Rational& r) { return a *= r; }
    friend LaurentScalar operator*(const Rational& r, LaurentScalar a) { return a *= r; }

    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
        LaurentScalar s;
        for(const auto& [ea, ca] : a.terms_) {
            for(const auto& [eb, cb] : b.terms_) {
                s.add_term(ea + eb, ca * cb);
            }
        }
        return s;
    }

    LaurentScalar operator-() const { return *this * Rational(-1); }

    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

private:
    std::map<int, Rational> terms_;
};

inline std::string to_string(const LaurentScalar& s) {
    if(s.is_zero()) {
        return "0";
    }
    std::string out;
    for(const auto& [e, c] : s.terms()) {
        if(!out.empty()) {
            out += " + ";
        }
        out += "(" + to_string(c) + ")";
        if(e != 0) {
            out += "*z^" + std::to_string(e);
        }
    }
    return out;
}

} // namespace winf
