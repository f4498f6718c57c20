#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace winf {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Row-reduces in place; returns the pivot column of each pivot row.
/// Only the first `pivot_cols` columns are eligible as pivots.
inline std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for(std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while(sel < m.rows() && m(sel, col) == 0) {
            ++sel;
        }
        if(sel == m.rows()) {
            continue;
        }
        if(sel != row) {
            for(std::size_t c = 0; c < m.cols(); ++c) {
                std::swap(m(sel, c), m(row, c));
            }
        }
        Rational inv = Rational(1) / m(row, col);
        for(std::size_t c = col; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        for(std::size_t r = 0; r < m.rows(); ++r) {
            if(r == row || m(r, col) == 0) {
                continue;
            }
            Rational f = m(r, col);
            for(std::size_t c = col; c < m.cols(); ++c) {
                if(m(row, c) != 0) {
                    m(r, c) -= f * m(row, c);
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RationalMatrix m) {
    return row_reduce(m, m.cols()).size();
}

struct LinearSolution {
    std::size_t rank = 0;
    bool unique = false;
    /// One entry per right-hand side; nullopt when that system is inconsistent.
    std::vector<std::optional<std::vector<Rational>>> solutions;
};

/// Solves A x = b for every column b of B (free variables set to zero).
inline LinearSolution solve(const RationalMatrix& a, const RationalMatrix& b) {
    if(a.rows() != b.rows()) {
        throw invalid_input("solve: row count mismatch");
    }
    const std::size_t n = a.cols();
    RationalMatrix aug(a.rows(), n + b.cols());
    for(std::size_t r = 0; r < a.rows(); ++r) {
        for(std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        for(std::size_t c = 0; c < b.cols(); ++c) {
            aug(r, n + c) = b(r, c);
        }
    }
    auto pivots = row_reduce(aug, n);
    LinearSolution out;
    out.rank = pivots.size();
    out.unique = (out.rank == n);
    for(std::size_t k = 0; k < b.cols(); ++k) {
        bool ok = true;
        for(std::size_t r = pivots.size(); r < aug.rows(); ++r) {
            if(aug(r, n + k) != 0) {
                ok = false;
                break;
            }
        }
        if(!ok) {
            out.solutions.emplace_back(std::nullopt);
            continue;
        }
        std::vector<Rational> x(n);
        for(std::size_t r = 0; r < pivots.size(); ++r) {
            x[pivots[r]] = aug(r, n + k);
        }
        out.solutions.emplace_back(std::move(x));
    }
    return out;
}

} // namespace winf
