// Numeric verification of the convergence machinery: the three standard
// interference-function conditions (positivity, monotonicity, scalability)
// and non-singularity of the fixed-point map's Jacobian.

#ifndef D2DPC_ANALYSIS_HPP
#define D2DPC_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "d2dpc/game.hpp"

namespace d2dpc {

// Witness of the first sampled condition failure. `powers_upper` is filled
// for monotonicity failures (the elementwise-larger vector), `lambda` for
// scalability failures (0 otherwise).
struct Counterexample {
    std::string condition;  // "positivity" | "monotonicity" | "scalability"
    PowerVector powers;
    PowerVector powers_upper;
    double lambda = 0.0;
    int device = -1;
};

struct StandardFunctionReport {
    bool positivity_ok = true;
    bool monotonicity_ok = true;
    bool scalability_ok = true;
    std::optional<Counterexample> counterexample;
    // number of per-device outputs that hit the kPowerFloor clamp while
    // sampling; positivity then holds by clamping rather than by the map
    long floor_clamps = 0;

    bool all_ok() const {
        return positivity_ok && monotonicity_ok && scalability_ok;
    }
};

// Draws `samples` random positive power vectors (log-uniform per device over
// [1e-9, p_max], seeded) and checks, per device:
//   positivity:    f(p)_i > 0
//   monotonicity:  p >= q elementwise  =>  f(p)_i >= f(q)_i
//   scalability:   f(lambda p)_i < lambda f(p)_i for lambda in {1.5, 2, 10}
// The first failure is recorded as the counterexample; failures are data,
// not errors.
StandardFunctionReport check_standard_function(const NetworkScenario& scenario,
                                               const GameParams& params,
                                               const UpdateRule& rule,
                                               int samples,
                                               std::uint64_t seed);

struct JacobianReport {
    std::size_t n = 0;
    std::vector<std::vector<double>> matrix;  // dF_i/dp_j, row-major, watts units
    // det(J), evaluated on the relative-coordinate similarity transform
    // diag(1/p) J diag(p) whose entries are O(1) near fixed points
    double determinant = 0.0;
    double determinant_row_scaled = 0.0;  // after row-max equilibration
    bool nonsingular = false;             // |det_row_scaled| > 1e-12
};

// Central-difference Jacobian of F(p) = -p + f(p) at `p`, with per-column
// step h_step * p_j. Throws diverged_error on non-finite evaluations and
// std::invalid_argument unless 0 < h_step <= 1e-2 and p > 0.
JacobianReport jacobian_at(const NetworkScenario& scenario,
                           const GameParams& params, const UpdateRule& rule,
                           const PowerVector& p, double h_step = 1e-6);

// Determinant by partial-pivot Gaussian elimination (used by jacobian_at,
// exposed for tests).
double determinant(std::vector<std::vector<double>> m);

}  // namespace d2dpc

#endif  // D2DPC_ANALYSIS_HPP
