#ifndef TANGLEDEC_RATLP_HPP
#define TANGLEDEC_RATLP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tangledec/errors.hpp"

namespace tangledec {

// Exact arbitrary-precision arithmetic. No floating point appears anywhere
// in the pipeline; every comparison below is decided exactly.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;

// Canonical "p/q" form, e.g. "3/2", "-1/3", "0/1".
std::string rational_to_string(const Rational& r);
// Accepts "p/q" or a bare integer "p".
Rational rational_from_string(const std::string& s);

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RatMatrix transposed() const;

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatVec mat_vec(const RatMatrix& m, const RatVec& v);
bool is_skew_symmetric(const RatMatrix& m);

struct LpResult {
    bool feasible = false;
    // Valid when feasible: x >= 0 with A x >= b.
    RatVec x;
    // Valid when infeasible: y >= 0 with y^T A <= 0 and y^T b > 0.
    RatVec farkas_y;
};

// Decides feasibility of { x >= 0 : A x >= b } by a phase-1 simplex with
// Bland's anti-cycling rule, in exact rational arithmetic. The returned
// point or Farkas certificate is re-verified by substitution before return.
LpResult lp_feasible(const RatMatrix& a, const RatVec& b);

// x >= 0, Kx >= 0, x + Kx > 0 componentwise; checked exactly against the
// matrix it was produced for.
struct TuckerSolution {
    RatVec x;
};

// For an exactly skew-symmetric K, constructs a Tucker vector by solving,
// for each coordinate i, the feasibility system
//   { x >= 0, Kx >= 0, x_i + (Kx)_i >= 1 }
// and summing the per-coordinate solutions. Each subsystem is feasible for
// skew-symmetric K; an infeasible subsystem indicates broken arithmetic and
// raises InternalError. Subsystems are solved concurrently; the sum is taken
// in index order, so the result is deterministic.
TuckerSolution tucker_solve(const RatMatrix& k);
// Reference implementation: identical result, one subsystem at a time.
TuckerSolution tucker_solve_serial(const RatMatrix& k);

// Multiplies the vector by the least common multiple of all denominators.
// Zeros stay zero, positives stay positive, all ratios are preserved.
std::vector<Int> scale_to_integers(const RatVec& x);

} // namespace tangledec

#endif // TANGLEDEC_RATLP_HPP
