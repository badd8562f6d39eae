#include "d2dpc/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace d2dpc {

void GameParams::validate() const {
    if (!(target > 0.0) || !std::isfinite(target)) {
        throw std::invalid_argument("game: target must be > 0");
    }
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("game: alpha must satisfy 0 <= alpha < 1");
    }
    if (!(price >= 0.0) || !std::isfinite(price)) {
        throw std::invalid_argument("game: price must be >= 0");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("game: tol must be > 0");
    }
    if (max_iters < 1) {
        throw std::invalid_argument("game: max_iters must be >= 1");
    }
}

double utility_base(const GameParams& params, double gamma_i) {
    const double d = params.effective_target() - gamma_i;
    return d * d;
}

double utility_priced(const GameParams& params, double gamma_i, double p_i) {
    return utility_base(params, gamma_i) + params.price * p_i;
}

static void require_positive(const PowerVector& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] > 0.0)) {
            throw std::domain_error("update rule requires p[" +
                                    std::to_string(i) + "] > 0");
        }
    }
}

PowerVector update_unpriced(const NetworkScenario& scenario,
                            const GameParams& params, const PowerVector& p) {
    require_positive(p);
    const double a = params.effective_target();
    PowerVector next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        // (a / gamma) * p, associated exactly like the classical DPC map so
        // the alpha = 0 case is bit-compatible with it
        const double gamma = sinr(scenario, p, i);
        next[i] = clamp_power(a / gamma * p[i], scenario.p_max);
    }
    return next;
}

PowerVector update_priced(const NetworkScenario& scenario,
                          const GameParams& params, const PowerVector& p) {
    require_positive(p);
    const double a = params.effective_target();
    const double half_c = params.pricing_sign == PricingSign::Reduce
                              ? -0.5 * params.price
                              : 0.5 * params.price;
    PowerVector next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double gamma = sinr(scenario, p, i);
        const double base = a / gamma * p[i];  // == unpriced step bit-for-bit
        const double ratio = p[i] / gamma;
        next[i] = clamp_power(base + half_c * (ratio * ratio), scenario.p_max);
    }
    return next;
}

RunResult run_to_convergence(const NetworkScenario& scenario,
                             const GameParams& params, const UpdateRule& rule,
                             const PowerVector& p0) {
    scenario.validate();
    params.validate();
    require_positive(p0);
    if (p0.size() != scenario.n()) {
        throw std::invalid_argument("p0 length != device count");
    }

    RunResult result;
    PowerVector p = p0;
    for (int k = 1; k <= params.max_iters; ++k) {
        PowerVector next = rule(scenario, params, p);

        double max_rel_change = 0.0;
        TraceRecord rec;
        rec.k = k;
        rec.priced_out.resize(next.size(), 0);
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (!std::isfinite(next[i])) {
                throw diverged_error(k, "non-finite power for device " +
                                            std::to_string(i) +
                                            " at iteration " +
                                            std::to_string(k));
            }
            max_rel_change =
                std::max(max_rel_change, std::abs(next[i] - p[i]) / p[i]);
            if (next[i] <= kPowerFloor) rec.priced_out[i] = 1;
        }

        rec.powers = next;
        rec.sinrs = sinr_all(scenario, next);
        rec.utilities.resize(next.size());
        for (std::size_t i = 0; i < next.size(); ++i) {
            rec.utilities[i] = utility_priced(params, rec.sinrs[i], next[i]);
        }
        result.trace.push_back(std::move(rec));

        p = std::move(next);
        result.iterations_used = k;
        if (max_rel_change < params.tol) {
            result.converged = true;
            break;
        }
    }

    result.final_powers = p;
    result.final_sinrs = sinr_all(scenario, p);
    return result;
}

std::vector<double> ProbeGrid::powers(double p_max) const {
    if (points < 1) throw std::invalid_argument("probe grid needs >= 1 point");
    // log-spaced over (kPowerFloor, p_max], last point exactly p_max
    std::vector<double> out(static_cast<std::size_t>(points));
    const double lo = std::log(kPowerFloor);
    const double hi = std::log(p_max);
    for (int k = 0; k < points; ++k) {
        out[static_cast<std::size_t>(k)] =
            std::exp(lo + (hi - lo) * (k + 1) / static_cast<double>(points));
    }
    out.back() = p_max;
    return out;
}

static double device_cost(const GameParams& params, UtilityKind kind,
                          double gamma_i, double p_i) {
    return kind == UtilityKind::Base ? utility_base(params, gamma_i)
                                     : utility_priced(params, gamma_i, p_i);
}

Deviation best_unilateral_deviation(const NetworkScenario& scenario,
                                    const GameParams& params, UtilityKind kind,
                                    const PowerVector& p, std::size_t device,
                                    const ProbeGrid& grid) {
    // others are held fixed, so I_device does not change along the probe
    const double noise_plus_i = interference(scenario, p, device);
    const double h = scenario.gains[device];
    const double current =
        device_cost(params, kind, p[device] * h / noise_plus_i, p[device]);

    Deviation best;
    best.probe_power = p[device];
    for (double probe : grid.powers(scenario.p_max)) {
        const double cost =
            device_cost(params, kind, probe * h / noise_plus_i, probe);
        const double gain = current - cost;
        if (gain > best.improvement) {
            best.improvement = gain;
            best.probe_power = probe;
        }
    }
    return best;
}

NashReport is_nash_equilibrium(const NetworkScenario& scenario,
                               const GameParams& params, UtilityKind kind,
                               const PowerVector& p, const ProbeGrid& grid,
                               double utility_tol) {
    scenario.validate();
    NashReport report;
    for (std::size_t i = 0; i < scenario.n(); ++i) {
        const Deviation dev =
            best_unilateral_deviation(scenario, params, kind, p, i, grid);
        if (dev.improvement > report.worst_improvement) {
            report.worst_improvement = dev.improvement;
            report.worst_probe_power = dev.probe_power;
            report.worst_device = static_cast<int>(i);
        }
    }
    report.is_equilibrium = report.worst_improvement <= utility_tol;
    return report;
}

}  // namespace d2dpc
