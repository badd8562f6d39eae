#include "d2dpc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "d2dpc/rng.hpp"

namespace d2dpc {

namespace {

PowerVector sample_powers(std::mt19937_64& rng, std::size_t n, double p_max) {
    PowerVector p(n);
    for (auto& v : p) v = log_uniform(rng, 1e-9, p_max);
    return p;
}

long count_floor_clamps(const PowerVector& f) {
    long c = 0;
    for (double v : f) {
        if (v <= kPowerFloor) ++c;
    }
    return c;
}

}  // namespace

StandardFunctionReport check_standard_function(const NetworkScenario& scenario,
                                               const GameParams& params,
                                               const UpdateRule& rule,
                                               int samples,
                                               std::uint64_t seed) {
    scenario.validate();
    params.validate();
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");

    static const double kLambdas[] = {1.5, 2.0, 10.0};
    StandardFunctionReport report;
    std::mt19937_64 rng(seed);

    for (int s = 0; s < samples; ++s) {
        const PowerVector p = sample_powers(rng, scenario.n(), scenario.p_max);
        const PowerVector fp = rule(scenario, params, p);
        report.floor_clamps += count_floor_clamps(fp);

        if (report.positivity_ok) {
            for (std::size_t i = 0; i < fp.size(); ++i) {
                if (!(fp[i] > 0.0)) {
                    report.positivity_ok = false;
                    if (!report.counterexample) {
                        report.counterexample = Counterexample{
                            "positivity", p, {}, 0.0, static_cast<int>(i)};
                    }
                    break;
                }
            }
        }

        if (report.monotonicity_ok) {
            // elementwise-larger companion vector
            PowerVector upper(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) {
                upper[i] = p[i] * (1.0 + uniform01(rng));
            }
            const PowerVector f_upper = rule(scenario, params, upper);
            report.floor_clamps += count_floor_clamps(f_upper);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (f_upper[i] < fp[i]) {
                    report.monotonicity_ok = false;
                    if (!report.counterexample) {
                        report.counterexample = Counterexample{
                            "monotonicity", p, upper, 0.0,
                            static_cast<int>(i)};
                    }
                    break;
                }
            }
        }

        if (report.scalability_ok) {
            for (double lambda : kLambdas) {
                PowerVector scaled(p.size());
                for (std::size_t i = 0; i < p.size(); ++i) {
                    scaled[i] = lambda * p[i];
                }
                const PowerVector f_scaled = rule(scenario, params, scaled);
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (!(f_scaled[i] < lambda * fp[i])) {
                        report.scalability_ok = false;
                        if (!report.counterexample) {
                            report.counterexample = Counterexample{
                                "scalability", p, {}, lambda,
                                static_cast<int>(i)};
                        }
                        break;
                    }
                }
                if (!report.scalability_ok) break;
            }
        }
    }
    return report;
}

double determinant(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        }
        if (m[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    return det;
}

JacobianReport jacobian_at(const NetworkScenario& scenario,
                           const GameParams& params, const UpdateRule& rule,
                           const PowerVector& p, double h_step) {
    scenario.validate();
    params.validate();
    if (!(h_step > 0.0 && h_step <= 1e-2)) {
        throw std::invalid_argument("h_step must lie in (0, 1e-2]");
    }
    for (double v : p) {
        if (!(v > 0.0)) throw std::invalid_argument("jacobian point must be > 0");
    }

    const std::size_t n = p.size();
    JacobianReport report;
    report.n = n;
    report.matrix.assign(n, std::vector<double>(n, 0.0));

    // F(p) = -p + f(p); central differences column by column
    for (std::size_t j = 0; j < n; ++j) {
        const double h = h_step * p[j];
        PowerVector plus = p;
        PowerVector minus = p;
        plus[j] += h;
        minus[j] -= h;
        const PowerVector f_plus = rule(scenario, params, plus);
        const PowerVector f_minus = rule(scenario, params, minus);
        for (std::size_t i = 0; i < n; ++i) {
            const double fd = (f_plus[i] - f_minus[i]) / (2.0 * h);
            if (!std::isfinite(fd)) {
                throw diverged_error(0, "non-finite Jacobian entry");
            }
            report.matrix[i][j] = fd - (i == j ? 1.0 : 0.0);
        }
    }

    // Relative-coordinate Jacobian diag(1/p) J diag(p): a similarity
    // transform, so its determinant equals det(J) exactly, but its entries
    // are O(1) near fixed points instead of spanning the gain spread in
    // watts. The determinant is evaluated there for numerical stability.
    std::vector<std::vector<double>> relative = report.matrix;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            relative[i][j] *= p[j] / p[i];
        }
    }
    report.determinant = determinant(relative);

    // row-equilibrated copy for the singularity threshold
    std::vector<std::vector<double>> scaled = relative;
    for (auto& row : scaled) {
        double mx = 0.0;
        for (double v : row) mx = std::max(mx, std::abs(v));
        if (mx > 0.0) {
            for (double& v : row) v /= mx;
        }
    }
    report.determinant_row_scaled = determinant(scaled);
    report.nonsingular = std::abs(report.determinant_row_scaled) > 1e-12;
    return report;
}

}  // namespace d2dpc
