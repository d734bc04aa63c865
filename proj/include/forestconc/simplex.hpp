#pragma once

#include <stdexcept>
#include <vector>

#include "forestconc/rational.hpp"

namespace forestconc {

/// Exact two-phase primal simplex for covering programs
///     min c.x   s.t.  A x >= b,  x >= 0,  b >= 0,
/// with Bland's pivoting rule (no epsilon, termination guaranteed).
/// Tableau form: A x - s + a = b with surplus s and artificial a variables;
/// phase 1 drives sum(a) to zero, phase 2 optimizes c.
class ExactCoveringLp {
public:
    ExactCoveringLp(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                    std::vector<Rational> c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        rows_ = a_.size();
        cols_ = c_.size();
        for (const auto& row : a_)
            if (row.size() != cols_) throw std::invalid_argument("lp: ragged matrix");
        if (b_.size() != rows_) throw std::invalid_argument("lp: rhs size mismatch");
        for (const auto& bi : b_)
            if (bi < 0) throw std::invalid_argument("lp: rhs must be non-negative");
    }

    /// Returns the optimal objective; solution() gives the optimal x.
    Rational solve() {
        build_tableau();
        // phase 1: minimize the artificial total
        set_objective_phase1();
        run();
        if (tab_.back().back() != 0) throw std::runtime_error("lp: infeasible");
        // phase 2
        set_objective_phase2();
        run();
        x_.assign(cols_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] < cols_) x_[basis_[r]] = tab_[r].back();
        Rational obj = 0;
        for (std::size_t j = 0; j < cols_; ++j) obj += c_[j] * x_[j];
        return obj;
    }

    const std::vector<Rational>& solution() const { return x_; }

private:
    // columns: [0, cols_) structural, [cols_, cols_+rows_) surplus,
    // [cols_+rows_, cols_+2rows_) artificial, last column rhs
    void build_tableau() {
        total_ = cols_ + 2 * rows_;
        tab_.assign(rows_ + 1, std::vector<Rational>(total_ + 1, Rational(0)));
        basis_.assign(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t j = 0; j < cols_; ++j) tab_[r][j] = a_[r][j];
            tab_[r][cols_ + r] = -1;            // surplus
            tab_[r][cols_ + rows_ + r] = 1;     // artificial
            tab_[r][total_] = b_[r];
            basis_[r] = cols_ + rows_ + r;
        }
    }

    void set_objective_phase1() {
        phase1_ = true;
        auto& z = tab_.back();
        std::fill(z.begin(), z.end(), Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            // z-row = sum of artificial rows, expressed in non-basic terms
            for (std::size_t j = 0; j <= total_; ++j) z[j] += tab_[r][j];
        }
        for (std::size_t r = 0; r < rows_; ++r) z[cols_ + rows_ + r] = 0;
    }

    void set_objective_phase2() {
        phase1_ = false;
        auto& z = tab_.back();
        std::fill(z.begin(), z.end(), Rational(0));
        for (std::size_t j = 0; j < cols_; ++j) z[j] = -c_[j];
        // price out the current basis
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] >= cols_) continue;
            Rational coef = z[basis_[r]];
            if (coef == 0) continue;
            for (std::size_t j = 0; j <= total_; ++j) z[j] -= coef * tab_[r][j];
        }
    }

    bool column_allowed(std::size_t j) const {
        if (phase1_) return true;
        return j < cols_ + rows_;  // artificials stay out in phase 2
    }

    void run() {
        for (;;) {
            // Bland: entering = lowest-index column with positive reduced profit
            std::size_t pivot_col = total_;
            for (std::size_t j = 0; j < total_; ++j) {
                if (!column_allowed(j)) continue;
                if (tab_.back()[j] > 0) {
                    pivot_col = j;
                    break;
                }
            }
            if (pivot_col == total_) return;  // optimal
            // ratio test, ties by lowest basis index (Bland)
            std::size_t pivot_row = rows_;
            Rational best_ratio = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (tab_[r][pivot_col] <= 0) continue;
                Rational ratio = tab_[r][total_] / tab_[r][pivot_col];
                if (pivot_row == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[pivot_row])) {
                    pivot_row = r;
                    best_ratio = ratio;
                }
            }
            if (pivot_row == rows_) throw std::runtime_error("lp: unbounded");
            pivot(pivot_row, pivot_col);
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        auto& prow = tab_[pr];
        const Rational inv = Rational(1) / prow[pc];
        for (auto& v : prow) v *= inv;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == pr) continue;
            Rational factor = tab_[r][pc];
            if (factor == 0) continue;
            for (std::size_t j = 0; j <= total_; ++j) tab_[r][j] -= factor * prow[j];
        }
        basis_[pr] = pc;
    }

    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_, c_, x_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<std::size_t> basis_;
    std::size_t rows_ = 0, cols_ = 0, total_ = 0;
    bool phase1_ = true;
};

}  // namespace forestconc
