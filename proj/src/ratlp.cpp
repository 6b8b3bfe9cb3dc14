#include "tangledec/ratlp.hpp"

#include <exception>

#include "tangledec/parallel.hpp"

namespace tangledec {

std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) {
            throw MalformedInput("rational has zero denominator: " + s);
        }
        return Rational(num, den);
    } catch (const MalformedInput&) {
        throw;
    } catch (const std::exception&) {
        throw MalformedInput("cannot parse rational: " + s);
    }
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw MalformedInput("ragged matrix rows");
        }
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
    if (v.size() != m.cols()) {
        throw MalformedInput("matrix-vector dimension mismatch");
    }
    RatVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational sum = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            sum += m(i, j) * v[j];
        }
        out[i] = sum;
    }
    return out;
}

bool is_skew_symmetric(const RatMatrix& m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (m(i, j) != -m(j, i)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Phase-1 tableau for min sum(z) s.t. [sA | -sD | I] (x,s,z)^T = s*b, all
// variables >= 0, where s flips rows with negative right-hand side. Column
// order (x, then surplus, then artificial) fixes Bland's variable order.
class Phase1Simplex {
public:
    Phase1Simplex(const RatMatrix& a, const RatVec& b)
        : m_(a.rows()), n_(a.cols()), total_(n_ + 2 * m_) {
        sigma_.resize(m_);
        tab_.assign(m_, RatVec(total_ + 1));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            int s = b[i] >= 0 ? 1 : -1;
            sigma_[i] = s;
            for (std::size_t j = 0; j < n_; ++j) {
                tab_[i][j] = s * a(i, j);
            }
            tab_[i][n_ + i] = -s;
            tab_[i][n_ + m_ + i] = 1;
            tab_[i][total_] = s * b[i];
            basis_[i] = n_ + m_ + i;
        }
        // Reduced costs with the all-artificial basis: r_j = c_j - sum_i T[i][j].
        red_.assign(total_ + 1, Rational(0));
        for (std::size_t j = 0; j <= total_; ++j) {
            Rational colsum = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                colsum += tab_[i][j];
            }
            Rational cost = j >= n_ + m_ && j < total_ ? 1 : 0;
            red_[j] = cost - colsum;
        }
    }

    // Runs Bland pivots to optimality; returns the optimal phase-1 objective.
    Rational solve() {
        for (;;) {
            std::size_t enter = total_;
            for (std::size_t j = 0; j < total_; ++j) {
                if (red_[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == total_) {
                return -red_[total_];
            }
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) {
                    continue;
                }
                Rational ratio = tab_[i][total_] / tab_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m_) {
                throw InternalError("phase-1 simplex reported an unbounded direction");
            }
            pivot(leave, enter);
        }
    }

    RatVec primal_x() const {
        RatVec x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                x[basis_[i]] = tab_[i][total_];
            }
        }
        return x;
    }

    // Dual multipliers in the original row orientation: y = sigma * pi with
    // pi_i = 1 - (reduced cost of artificial i).
    RatVec farkas_y() const {
        RatVec y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            y[i] = sigma_[i] * (1 - red_[n_ + m_ + i]);
        }
        return y;
    }

private:
    void pivot(std::size_t row, std::size_t col) {
        Rational p = tab_[row][col];
        for (std::size_t j = 0; j <= total_; ++j) {
            tab_[row][j] /= p;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) {
                continue;
            }
            Rational f = tab_[i][col];
            for (std::size_t j = 0; j <= total_; ++j) {
                tab_[i][j] -= f * tab_[row][j];
            }
        }
        if (red_[col] != 0) {
            Rational f = red_[col];
            for (std::size_t j = 0; j <= total_; ++j) {
                red_[j] -= f * tab_[row][j];
            }
        }
        basis_[row] = col;
    }

    std::size_t m_, n_, total_;
    std::vector<int> sigma_;
    std::vector<RatVec> tab_;
    std::vector<std::size_t> basis_;
    RatVec red_;
};

} // namespace

LpResult lp_feasible(const RatMatrix& a, const RatVec& b) {
    if (b.size() != a.rows()) {
        throw MalformedInput("lp_feasible: matrix has " + std::to_string(a.rows()) +
                             " rows but right-hand side has " + std::to_string(b.size()));
    }
    LpResult res;
    if (a.rows() == 0) {
        res.feasible = true;
        res.x.assign(a.cols(), Rational(0));
        return res;
    }

    Phase1Simplex simplex(a, b);
    Rational obj = simplex.solve();

    if (obj == 0) {
        res.feasible = true;
        res.x = simplex.primal_x();
        for (const Rational& v : res.x) {
            if (v < 0) {
                throw InternalError("simplex produced a negative basic value");
            }
        }
        RatVec ax = mat_vec(a, res.x);
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (ax[i] < b[i]) {
                throw InternalError("simplex solution fails A x >= b");
            }
        }
        return res;
    }

    res.feasible = false;
    res.farkas_y = simplex.farkas_y();
    Rational yb = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (res.farkas_y[i] < 0) {
            throw InternalError("Farkas certificate has a negative multiplier");
        }
        yb += res.farkas_y[i] * b[i];
    }
    if (yb <= 0) {
        throw InternalError("Farkas certificate fails y^T b > 0");
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            col += res.farkas_y[i] * a(i, j);
        }
        if (col > 0) {
            throw InternalError("Farkas certificate fails y^T A <= 0");
        }
    }
    return res;
}

namespace {

RatVec tucker_subproblem(const RatMatrix& k, std::size_t i) {
    std::size_t n = k.rows();
    RatMatrix a(n + 1, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = k(r, c);
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        a(n, c) = k(i, c);
    }
    a(n, i) += 1;
    RatVec b(n + 1, Rational(0));
    b[n] = 1;

    LpResult res = lp_feasible(a, b);
    if (!res.feasible) {
        throw InternalError("Tucker subsystem " + std::to_string(i) +
                            " infeasible for a skew-symmetric matrix");
    }
    return res.x;
}

TuckerSolution tucker_finish(const RatMatrix& k, std::vector<RatVec> parts) {
    std::size_t n = k.rows();
    TuckerSolution sol;
    sol.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sol.x[j] += parts[i][j];
        }
    }
    RatVec kx = mat_vec(k, sol.x);
    for (std::size_t j = 0; j < n; ++j) {
        if (sol.x[j] < 0 || kx[j] < 0 || sol.x[j] + kx[j] <= 0) {
            throw InternalError("Tucker vector fails its defining conditions");
        }
    }
    return sol;
}

void require_skew(const RatMatrix& k) {
    if (k.rows() != k.cols()) {
        throw MalformedInput("tucker_solve: matrix is not square");
    }
    if (!is_skew_symmetric(k)) {
        throw MalformedInput("tucker_solve: matrix is not skew-symmetric");
    }
}

} // namespace

TuckerSolution tucker_solve(const RatMatrix& k) {
    require_skew(k);
    std::size_t n = k.rows();
    std::vector<RatVec> parts(n);
    std::exception_ptr fail;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            parts[i] = tucker_subproblem(k, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!fail) {
                fail = std::current_exception();
            }
        }
    }
    if (fail) {
        std::rethrow_exception(fail);
    }
    return tucker_finish(k, std::move(parts));
}

TuckerSolution tucker_solve_serial(const RatMatrix& k) {
    require_skew(k);
    std::size_t n = k.rows();
    std::vector<RatVec> parts(n);
    for (std::size_t i = 0; i < n; ++i) {
        parts[i] = tucker_subproblem(k, i);
    }
    return tucker_finish(k, std::move(parts));
}

std::vector<Int> scale_to_integers(const RatVec& x) {
    Int l = 1;
    for (const Rational& v : x) {
        if (v < 0) {
            throw MalformedInput("scale_to_integers: negative entry");
        }
        l = lcm(l, denominator(v));
    }
    std::vector<Int> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = numerator(x[i]) * (l / denominator(x[i]));
    }
    return out;
}

} // namespace tangledec
