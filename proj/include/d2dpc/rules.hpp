// Named update-rule registry plus the reference algorithms used for
// comparison runs. Rules are pure functions; the registry is built once and
// read-only afterwards.

#ifndef D2DPC_RULES_HPP
#define D2DPC_RULES_HPP

#include <map>
#include <string>
#include <vector>

#include "d2dpc/game.hpp"

namespace d2dpc {

// Constrained distributed power control: p_i' = min(p_max, (Gamma/gamma_i) p_i).
// Uses the raw target, not the alpha-shifted one.
PowerVector rule_cdpc(const NetworkScenario& scenario, double target,
                      const PowerVector& p);

// Closed-form best response of J_i = b*(Gamma - gamma_i)^2 + c_kg * p_i:
//   p_i' = Gamma*I_i/h_i - c_kg*I_i^2 / (2*b*h_i^2)
PowerVector rule_koskie_gajic(const NetworkScenario& scenario, double target,
                              double b, double c_kg, const PowerVector& p);

class RuleRegistry {
public:
    // Throws std::invalid_argument on duplicate names.
    void register_rule(const std::string& name, UpdateRule rule);

    // Throws std::invalid_argument naming the rule when absent.
    const UpdateRule& get(const std::string& name) const;

    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, UpdateRule> rules_;
};

// Registry preloaded with the built-in rules:
//   "unpriced"      update_unpriced
//   "priced"        update_priced
//   "cdpc"          rule_cdpc on params.target
//   "koskie-gajic"  rule_koskie_gajic with b = 1, c_kg = params.price
// The "norm2" / "hyperbolic" / "ref11" comparison rows have no published
// update formulas; their names stay unregistered until a caller supplies one.
RuleRegistry builtin_rules();

}  // namespace d2dpc

#endif  // D2DPC_RULES_HPP
