#pragma once

#include "specdom/charpoly.hpp"
#include "specdom/matrix.hpp"
#include "specdom/rational.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace specdom {

/// Candidate dominant eigendata: eigenvalue lambda with right column vector v
/// and left row vector u. Residuals are max-norm defects of A*v - lambda*v
/// (resp. u*A - lambda*u) relative to max|a_ij| * max|v_i|, so they are
/// attainable at machine precision for matrices of any magnitude.
template <class T>
struct EigenPair {
    T lambda{};
    Matrix<T> v;  // n x 1
    Matrix<T> u;  // 1 x n
    double residual_right = 0.0;
    double residual_left = 0.0;
    bool normalized = false;
};

template <class T>
double right_residual(const Matrix<T>& a, const T& lambda, const Matrix<T>& v) {
    const double scale = to_double(a.max_abs());
    const double vmax = to_double(v.max_abs());
    if (vmax == 0.0) return std::numeric_limits<double>::infinity();
    const double defect = to_double((a * v - v * lambda).max_abs());
    return defect / (std::max(scale, 1e-300) * vmax);
}

template <class T>
double left_residual(const Matrix<T>& a, const T& lambda, const Matrix<T>& u) {
    const double scale = to_double(a.max_abs());
    const double umax = to_double(u.max_abs());
    if (umax == 0.0) return std::numeric_limits<double>::infinity();
    const double defect = to_double((u * a - u * lambda).max_abs());
    return defect / (std::max(scale, 1e-300) * umax);
}

struct PowerIterationOptions {
    double tol = 1e-12;
    int max_iter = 100000;
    int restarts = 3;  // seeded random restarts after the all-ones start
    std::uint64_t seed = 0;
};

/// Outcome of the two-sided power iteration. When `converged` is false the
/// candidate eigenvalue estimates and the norm-growth estimate of the
/// spectral radius are still reported; the exact-regime recovery path and
/// diagnostics use them.
struct PowerIterationResult {
    bool converged = false;
    EigenPair<double> pair;
    std::vector<double> lambda_estimates;
    double growth_estimate = 0.0;
    int iterations = 0;
    int restarts_used = 0;
    std::string note;
};

namespace detail {

inline double norm2(const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

inline void record_estimate(std::vector<double>& estimates, double value) {
    if (!std::isfinite(value)) return;
    for (double e : estimates)
        if (std::fabs(e - value) <= 1e-9 * std::max(1.0, std::fabs(value))) return;
    estimates.push_back(value);
}

}  // namespace detail

/// Two-sided power iteration from the all-ones start vector with seeded
/// random restarts. Converges only when the right iteration on A and the left
/// iteration on A^T settle on the same eigenvalue; an exactly-invariant start
/// vector can otherwise lock one side onto a non-dominant eigenvector (the
/// all-ones vector does exactly that for several of the golden matrices).
inline PowerIterationResult dominant_eigenpair(const Matrix<double>& a,
                                               const PowerIterationOptions& opts = {}) {
    a.require_square("dominant_eigenpair");
    if (opts.tol <= 0) throw std::invalid_argument("tol must be positive");
    const std::size_t n = a.rows();
    const double scale = a.max_abs();
    PowerIterationResult result;

    if (scale == 0.0) {
        result.converged = true;
        result.pair.lambda = 0.0;
        result.pair.v = Matrix<double>(n, 1);
        result.pair.u = Matrix<double>(1, n);
        result.pair.v(0, 0) = 1.0;
        result.pair.u(0, 0) = 1.0;
        result.note = "zero matrix";
        result.lambda_estimates = {0.0};
        return result;
    }

    const Matrix<double> at = a.transpose();
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    const auto normalize = [](Matrix<double>& x) {
        double nrm = 0;
        for (std::size_t i = 0; i < x.rows(); ++i) nrm += x(i, 0) * x(i, 0);
        nrm = std::sqrt(nrm);
        if (nrm == 0) return false;
        for (std::size_t i = 0; i < x.rows(); ++i) x(i, 0) /= nrm;
        return true;
    };

    for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
        Matrix<double> x(n, 1), y(n, 1);
        if (attempt == 0) {
            for (std::size_t i = 0; i < n; ++i) x(i, 0) = y(i, 0) = 1.0;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                x(i, 0) = unit(rng);
                y(i, 0) = unit(rng);
            }
        }
        if (!normalize(x) || !normalize(y)) continue;
        result.restarts_used = attempt;

        double lambda_r = 0, lambda_l = 0;
        double log_growth_sum = 0;
        int growth_samples = 0;
        bool broke_down = false;

        for (int it = 0; it < opts.max_iter; ++it) {
            ++result.iterations;
            Matrix<double> ax = a * x;
            Matrix<double> ay = at * y;
            double ax_dot = 0, ay_dot = 0, ax_nrm = 0, ay_nrm = 0;
            for (std::size_t i = 0; i < n; ++i) {
                ax_dot += x(i, 0) * ax(i, 0);
                ay_dot += y(i, 0) * ay(i, 0);
                ax_nrm += ax(i, 0) * ax(i, 0);
                ay_nrm += ay(i, 0) * ay(i, 0);
            }
            ax_nrm = std::sqrt(ax_nrm);
            ay_nrm = std::sqrt(ay_nrm);
            if (ax_nrm <= 1e-100 * scale || ay_nrm <= 1e-100 * scale) {
                broke_down = true;
                break;
            }
            lambda_r = ax_dot;  // Rayleigh quotient, x is unit
            lambda_l = ay_dot;
            if (it >= 10) {
                log_growth_sum += std::log(ax_nrm);
                ++growth_samples;
            }

            // The success gate measures both residuals against the right
            // eigenvalue estimate, which is the lambda the returned pair
            // carries; the left side's own estimate is kept separately to
            // notice when the two iterations settle on different eigenvalues.
            double rr = 0, rl = 0, rl_own = 0;
            for (std::size_t i = 0; i < n; ++i) {
                rr = std::max(rr, std::fabs(ax(i, 0) - lambda_r * x(i, 0)));
                rl = std::max(rl, std::fabs(ay(i, 0) - lambda_r * y(i, 0)));
                rl_own = std::max(rl_own, std::fabs(ay(i, 0) - lambda_l * y(i, 0)));
            }
            double xmax = 0, ymax = 0;
            for (std::size_t i = 0; i < n; ++i) {
                xmax = std::max(xmax, std::fabs(x(i, 0)));
                ymax = std::max(ymax, std::fabs(y(i, 0)));
            }
            rr /= scale * xmax;
            rl /= scale * ymax;
            rl_own /= scale * ymax;

            const bool agree =
                std::fabs(lambda_r - lambda_l) <=
                1e-6 * std::max({1.0, std::fabs(lambda_r), std::fabs(lambda_l)});
            if (rr <= opts.tol && rl <= opts.tol && agree) {
                result.converged = true;
                result.pair.lambda = lambda_r;
                result.pair.v = x;
                result.pair.u = y.transpose();
                result.pair.residual_right = right_residual(a, lambda_r, x);
                result.pair.residual_left = left_residual(a, lambda_r, result.pair.u);
                detail::record_estimate(result.lambda_estimates, lambda_r);
                if (growth_samples > 0)
                    result.growth_estimate = std::max(
                        result.growth_estimate, std::exp(log_growth_sum / growth_samples));
                return result;
            }
            if (rr <= opts.tol && rl_own <= opts.tol && !agree) {
                // Both sides are stuck on different eigenvalues; restarting is
                // the only way out of an exactly-invariant start vector.
                break;
            }
            for (std::size_t i = 0; i < n; ++i) {
                x(i, 0) = ax(i, 0) / ax_nrm;
                y(i, 0) = ay(i, 0) / ay_nrm;
            }
        }

        if (!broke_down) {
            detail::record_estimate(result.lambda_estimates, lambda_r);
            detail::record_estimate(result.lambda_estimates, lambda_l);
            if (growth_samples > 0)
                result.growth_estimate = std::max(
                    result.growth_estimate, std::exp(log_growth_sum / growth_samples));
        }
    }

    result.note =
        "power iteration did not converge on both sides; dominant eigenvalue may be "
        "complex, tied in modulus, or defective";
    return result;
}

enum class NormalizeStatus { Ok, MultiplicityAtLeastTwo, VHasZeroEntry };

template <class T>
struct NormalizeResult {
    NormalizeStatus status = NormalizeStatus::Ok;
    EigenPair<T> pair;
    /// u.v after unit-normalizing both vectors; the multiplicity certificate.
    T unit_uv{};
};

/// Scales v so that 1^T (S v) = 1 for the signature S orienting v positive,
/// and u so that u v = 1. Reports MultiplicityAtLeastTwo when u v vanishes
/// (exactly, or below tol_orth after unit normalization in the float regime)
/// and VHasZeroEntry when v cannot be sign-oriented.
template <class T>
NormalizeResult<T> normalize_pair(const EigenPair<T>& input, double tol_orth = 1e-9,
                                  double tol_zero = 1e-9) {
    NormalizeResult<T> out;
    out.pair = input;
    Matrix<T>& v = out.pair.v;
    Matrix<T>& u = out.pair.u;
    if (!v.is_column() || !u.is_row() || v.rows() != u.cols())
        throw std::invalid_argument("normalize_pair expects a column v and row u");
    const std::size_t n = v.rows();

    T uv(0);
    for (std::size_t i = 0; i < n; ++i) uv += u.vec(i) * v.vec(i);

    if constexpr (is_exact_scalar_v<T>) {
        out.unit_uv = uv;  // exact zero test is scale-free
        if (uv == 0) {
            out.status = NormalizeStatus::MultiplicityAtLeastTwo;
            return out;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (v.vec(i) == 0) {
                out.status = NormalizeStatus::VHasZeroEntry;
                return out;
            }
        }
    } else {
        double vn = 0, un = 0;
        for (std::size_t i = 0; i < n; ++i) {
            vn += to_double(v.vec(i)) * to_double(v.vec(i));
            un += to_double(u.vec(i)) * to_double(u.vec(i));
        }
        vn = std::sqrt(vn);
        un = std::sqrt(un);
        if (vn == 0 || un == 0)
            throw std::invalid_argument("normalize_pair requires nonzero vectors");
        out.unit_uv = to_double(uv) / (vn * un);
        if (std::fabs(to_double(out.unit_uv)) < tol_orth) {
            out.status = NormalizeStatus::MultiplicityAtLeastTwo;
            return out;
        }
        const double vmax = to_double(v.max_abs());
        for (std::size_t i = 0; i < n; ++i) {
            if (std::fabs(to_double(v.vec(i))) < tol_zero * vmax) {
                out.status = NormalizeStatus::VHasZeroEntry;
                return out;
            }
        }
    }

    // 1^T (S v) = sum |v_i| since S flips v positive.
    T alpha(0);
    for (std::size_t i = 0; i < n; ++i) alpha += abs_value(v.vec(i));
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = v(i, 0) / alpha;

    T t(0);
    for (std::size_t i = 0; i < n; ++i) t += u.vec(i) * v.vec(i);
    for (std::size_t i = 0; i < n; ++i) u(0, i) = u(0, i) / t;

    out.pair.normalized = true;
    return out;
}

enum class ProbeStatus { Converged, Diverged, Undetermined };

template <class T>
struct ProbeResult {
    ProbeStatus status = ProbeStatus::Undetermined;
    Matrix<T> limit;
    T limit_trace{};
    double multiplicity_estimate = 0.0;
    int steps = 0;
};

/// Iterates M_{k+1} = (1/rho) A M_k from M_0 = I. Convergence of the sequence
/// is equivalent to rho being a semisimple dominant eigenvalue, in which case
/// the trace of the limit equals its multiplicity.
///
/// Convergence is detected on the max-abs-renormalized iterates: a float rho
/// carries an O(tol) error whose per-step drift never falls below an absolute
/// threshold, and near-degenerate dominant eigenvalues of a float matrix keep
/// the raw differences at a small noise floor. The float regime therefore
/// also applies a 1e-10 floor to the threshold. Divergence is declared only
/// once the norm grows step over step for 10 consecutive steps and exceeds
/// 100x the first iterate's norm, so a sequence that creeps up toward a
/// finite limit is never misclassified.
template <class T>
ProbeResult<T> semisimplicity_probe(const Matrix<T>& a, const T& rho, int k_max = 256,
                                    double conv_tol = 1e-12) {
    a.require_square("semisimplicity_probe");
    if (!(rho > T(0))) throw std::invalid_argument("semisimplicity_probe requires rho > 0");
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");

    ProbeResult<T> out;
    Matrix<T> step = a;
    for (std::size_t i = 0; i < step.rows(); ++i)
        for (std::size_t j = 0; j < step.cols(); ++j) step(i, j) = step(i, j) / rho;

    const double conv_floor =
        is_exact_scalar_v<T> ? conv_tol : std::max(conv_tol, 1e-10);

    const auto renormalized = [](const Matrix<T>& m) {
        T s = m.max_abs();
        if (s == T(0)) return m;
        Matrix<T> n = m;
        for (std::size_t i = 0; i < n.rows(); ++i)
            for (std::size_t j = 0; j < n.cols(); ++j) n(i, j) = n(i, j) / s;
        return n;
    };

    Matrix<T> current = step;
    Matrix<T> current_unit = renormalized(current);
    T prev_norm = current.max_abs();
    const T first_norm = prev_norm;
    int growth_streak = 0;
    int converged_streak = 0;

    for (int k = 1; k <= k_max; ++k) {
        out.steps = k;
        Matrix<T> next = step * current;
        Matrix<T> next_unit = renormalized(next);
        const T next_norm = next.max_abs();

        if (max_abs_diff(next_unit, current_unit) < conv_floor &&
            std::fabs(to_double(next_norm) - to_double(prev_norm)) <
                conv_floor * std::max(1.0, to_double(next_norm))) {
            if (++converged_streak >= 3) {
                out.status = ProbeStatus::Converged;
                out.limit = next;
                out.limit_trace = next.trace();
                out.multiplicity_estimate = to_double(out.limit_trace);
                return out;
            }
        } else {
            converged_streak = 0;
        }

        if (next_norm > prev_norm)
            ++growth_streak;
        else
            growth_streak = 0;
        if (growth_streak >= 10 && next_norm > T(100) * (first_norm > T(1) ? first_norm : T(1))) {
            out.status = ProbeStatus::Diverged;
            return out;
        }

        prev_norm = next_norm;
        current = std::move(next);
        current_unit = std::move(next_unit);
    }
    out.status = ProbeStatus::Undetermined;
    return out;
}

// --- exact-regime eigendata recovery ---------------------------------------

/// Basis of { x : m x = 0 } as column vectors, by exact Gauss-Jordan
/// elimination.
inline std::vector<Matrix<Rational>> nullspace(const Matrix<Rational>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix<Rational> r = m;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && r(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(r(pivot, j), r(rank, j));
        const Rational inv = Rational(1) / r(rank, col);
        for (std::size_t j = 0; j < cols; ++j) r(rank, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || r(i, col) == 0) continue;
            const Rational factor = r(i, col);
            for (std::size_t j = 0; j < cols; ++j) r(i, j) -= factor * r(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<Matrix<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Matrix<Rational> x(cols, 1);
        x(free_col, 0) = 1;
        for (std::size_t p = 0; p < pivot_col.size(); ++p)
            x(pivot_col[p], 0) = -r(p, free_col);
        basis.push_back(std::move(x));
    }
    return basis;
}

struct RecoveredRationalEigen {
    Rational lambda;
    Matrix<Rational> v;  // n x 1
    Matrix<Rational> u;  // 1 x n
    int geometric_multiplicity = 1;
};

struct RecoveryOptions {
    std::int64_t max_denominator = 1024;
    double rel_tol = 1e-3;
    /// Candidates below this fraction of the power-iteration growth estimate
    /// are rejected: they cannot be the spectral radius.
    double growth_slack = 0.99;
};

/// Attempts to turn float eigenvalue estimates into exactly verified rational
/// eigendata of an exact matrix. Every candidate is checked by exact
/// nullspace computation, so a wrong guess is harmless. Candidates are tried
/// in decreasing modulus; the largest verified eigenvalue is the spectral
/// radius candidate.
inline std::optional<RecoveredRationalEigen> recover_rational_eigen(
    const Matrix<Rational>& a, const std::vector<double>& lambda_estimates,
    double growth_estimate, const RecoveryOptions& opts = {}) {
    a.require_square("recover_rational_eigen");
    std::vector<Rational> candidates;
    const auto push = [&](const Rational& c) {
        for (const Rational& existing : candidates)
            if (existing == c) return;
        candidates.push_back(c);
    };
    for (double estimate : lambda_estimates)
        for (const Rational& c :
             rational_candidates(estimate, opts.max_denominator, opts.rel_tol)) {
            push(c);
            // A tied pair +-rho surfaces through either sign; the criterion
            // can only use the positive member, so propose it as well.
            if (c < 0) push(-c);
        }
    // Largest modulus first; positive before negative on ties, because the
    // criterion only applies to a positive candidate eigenvalue.
    std::sort(candidates.begin(), candidates.end(),
              [](const Rational& x, const Rational& y) {
                  const Rational ax = abs_value(x), ay = abs_value(y);
                  if (ax != ay) return ax > ay;
                  return x > y;
              });

    const std::size_t n = a.rows();
    for (const Rational& lambda : candidates) {
        if (growth_estimate > 0 &&
            to_double(abs_value(lambda)) < opts.growth_slack * growth_estimate)
            continue;
        Matrix<Rational> shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
        auto right = nullspace(shifted);
        if (right.empty()) continue;
        auto left = nullspace(shifted.transpose());
        RecoveredRationalEigen rec;
        rec.lambda = lambda;
        rec.v = right.front();
        rec.u = left.front().transpose();
        rec.geometric_multiplicity = static_cast<int>(right.size());
        return rec;
    }
    return std::nullopt;
}

}  // namespace specdom
