#ifndef PARABEL_LINEAR_PROGRAM_HPP
#define PARABEL_LINEAR_PROGRAM_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parabel/rational.hpp"

namespace parabel {

enum class Rel : unsigned char { Le, Ge, Eq };

struct LinearConstraint {
    std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
    Rel rel;
    Rational rhs;
};

// Affine expression over LP variables; lets unary connectives stay
// variable-free in piecewise-linear encodings.
struct LinExpr {
    std::vector<std::pair<int, Rational>> terms;
    Rational constant = Rational(0);

    static LinExpr of_var(int v) { return {{{v, Rational(1)}}, Rational(0)}; }
    static LinExpr of_const(Rational c) { return {{}, std::move(c)}; }

    LinExpr operator+(const LinExpr& o) const {
        LinExpr r = *this;
        r.constant += o.constant;
        r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
        return r;
    }
    LinExpr operator-(const LinExpr& o) const { return *this + o.negated(); }
    LinExpr operator+(const Rational& c) const {
        LinExpr r = *this;
        r.constant += c;
        return r;
    }
    LinExpr operator-(const Rational& c) const { return *this + (-c); }
    LinExpr negated() const {
        LinExpr r = *this;
        for (auto& [v, c] : r.terms) c = -c;
        r.constant = -r.constant;
        return r;
    }
    bool is_constant() const { return terms.empty(); }
};

// lhs REL rhs as a LinearConstraint (constants folded into the right side).
inline LinearConstraint make_row(const LinExpr& lhs, Rel rel, const LinExpr& rhs) {
    LinExpr diff = lhs - rhs;
    return LinearConstraint{std::move(diff.terms), rel, -diff.constant};
}

struct LPResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rational objective;
    std::vector<Rational> point;  // one value per original variable
};

// Dense two-phase primal simplex over exact rationals. Variables are
// nonnegative; upper bounds arrive as ordinary rows. Pivoting uses Dantzig's
// rule with deterministic tie-breaks and falls back to Bland's rule after a
// degenerate stall, so the solver terminates and the reported vertex is
// reproducible.
class SimplexSolver {
public:
    LPResult minimize(int num_vars, const std::vector<LinearConstraint>& rows,
                      const std::vector<std::pair<int, Rational>>& objective) {
        const std::size_t m = rows.size();
        const std::size_t n0 = static_cast<std::size_t>(num_vars);

        // Column layout: [original | slack/surplus | artificial], then rhs.
        std::size_t n_slack = 0, n_art = 0;
        for (const auto& r : rows) {
            const bool flip = r.rhs < 0;
            if (r.rel == Rel::Eq) {
                ++n_art;
            } else {
                const Rel rel = flip ? (r.rel == Rel::Le ? Rel::Ge : Rel::Le) : r.rel;
                ++n_slack;
                if (rel == Rel::Ge) ++n_art;
            }
        }
        const std::size_t n = n0 + n_slack + n_art;
        tableau_.assign(m + 1, std::vector<Rational>(n + 1, Rational(0)));
        basis_.assign(m, 0);
        art_col_begin_ = n0 + n_slack;

        std::size_t slack_at = n0, art_at = n0 + n_slack;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& r = rows[i];
            const bool flip = r.rhs < 0;
            Rel rel = r.rel;
            if (flip && rel != Rel::Eq) rel = (rel == Rel::Le) ? Rel::Ge : Rel::Le;
            for (const auto& [v, c] : r.terms)
                tableau_[i][static_cast<std::size_t>(v)] += flip ? -c : c;
            tableau_[i][n] = flip ? -r.rhs : r.rhs;
            if (r.rel == Rel::Eq) {
                tableau_[i][art_at] = 1;
                basis_[i] = art_at++;
            } else if (rel == Rel::Le) {
                tableau_[i][slack_at] = 1;
                basis_[i] = slack_at++;
            } else {  // Ge
                tableau_[i][slack_at] = -1;
                ++slack_at;
                tableau_[i][art_at] = 1;
                basis_[i] = art_at++;
            }
        }

        // Phase 1: minimize the sum of artificials.
        if (n_art > 0) {
            auto& obj = tableau_[m];
            for (std::size_t j = 0; j <= n; ++j) obj[j] = 0;
            for (std::size_t j = art_col_begin_; j < n; ++j) obj[j] = 1;
            for (std::size_t i = 0; i < m; ++i)
                if (basis_[i] >= art_col_begin_)
                    for (std::size_t j = 0; j <= n; ++j) obj[j] -= tableau_[i][j];
            if (!run_simplex(/*ban_artificials=*/false)) return {LPResult::Status::Unbounded, 0, {}};
            if (tableau_[m][n] != 0) return {LPResult::Status::Infeasible, 0, {}};
            // Pivot lingering artificials out of the basis where possible.
            for (std::size_t i = 0; i < m; ++i) {
                if (basis_[i] < art_col_begin_) continue;
                std::size_t enter = n;
                for (std::size_t j = 0; j < art_col_begin_; ++j)
                    if (tableau_[i][j] != 0) { enter = j; break; }
                if (enter < n) pivot(i, enter);
                // otherwise the row is redundant; its artificial stays basic at 0
            }
        }

        // Phase 2: the real objective, expressed in the current basis.
        {
            auto& obj = tableau_[m];
            const std::size_t rhs = n;
            for (std::size_t j = 0; j <= rhs; ++j) obj[j] = 0;
            for (const auto& [v, c] : objective) obj[static_cast<std::size_t>(v)] += c;
            for (std::size_t i = 0; i < m; ++i) {
                const Rational c = obj[basis_[i]];
                if (c != 0)
                    for (std::size_t j = 0; j <= rhs; ++j) obj[j] -= c * tableau_[i][j];
            }
        }
        if (!run_simplex(/*ban_artificials=*/true)) return {LPResult::Status::Unbounded, 0, {}};

        LPResult res;
        res.status = LPResult::Status::Optimal;
        res.objective = -tableau_[m][n];
        res.point.assign(n0, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis_[i] < n0) res.point[basis_[i]] = tableau_[i][n];
        return res;
    }

private:
    std::vector<std::vector<Rational>> tableau_;
    std::vector<std::size_t> basis_;
    std::size_t art_col_begin_ = 0;

    void pivot(std::size_t row, std::size_t col) {
        const std::size_t n = tableau_[0].size() - 1;
        auto& prow = tableau_[row];
        const Rational inv = 1 / prow[col];
        if (inv != 1)
            for (std::size_t j = 0; j <= n; ++j)
                if (prow[j] != 0) prow[j] *= inv;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == row) continue;
            const Rational f = tableau_[i][col];
            if (f == 0) continue;
            auto& irow = tableau_[i];
            for (std::size_t j = 0; j <= n; ++j)
                if (prow[j] != 0) irow[j] -= f * prow[j];
        }
        basis_[row] = col;
    }

    // Returns false on unboundedness.
    bool run_simplex(bool ban_artificials) {
        const std::size_t m = tableau_.size() - 1;
        const std::size_t n = tableau_[0].size() - 1;
        const std::size_t col_limit = ban_artificials ? art_col_begin_ : n;
        bool bland = false;
        int stall = 0;
        for (;;) {
            const auto& obj = tableau_[m];
            std::size_t enter = n;
            if (!bland) {
                Rational best(0);
                for (std::size_t j = 0; j < col_limit; ++j)
                    if (obj[j] < best) { best = obj[j]; enter = j; }
            } else {
                for (std::size_t j = 0; j < col_limit; ++j)
                    if (obj[j] < 0) { enter = j; break; }
            }
            if (enter == n) return true;  // optimal

            std::size_t leave = m;
            Rational best_ratio(0);
            for (std::size_t i = 0; i < m; ++i) {
                const Rational& a = tableau_[i][enter];
                if (a <= 0) continue;
                const Rational ratio = tableau_[i][n] / a;
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return false;  // unbounded

            const Rational before = tableau_[m][n];
            pivot(leave, enter);
            if (!bland) {
                if (tableau_[m][n] == before) {
                    if (++stall > 200) bland = true;
                } else {
                    stall = 0;
                }
            }
        }
    }
};

inline LPResult lp_minimize(int num_vars, const std::vector<LinearConstraint>& rows,
                            const std::vector<std::pair<int, Rational>>& objective) {
    SimplexSolver solver;
    return solver.minimize(num_vars, rows, objective);
}

}  // namespace parabel

#endif  // PARABEL_LINEAR_PROGRAM_HPP
