#include "d2dpc/rules.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace d2dpc {

static void require_positive(const PowerVector& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] > 0.0)) {
            throw std::domain_error("update rule requires p[" +
                                    std::to_string(i) + "] > 0");
        }
    }
}

PowerVector rule_cdpc(const NetworkScenario& scenario, double target,
                      const PowerVector& p) {
    require_positive(p);
    PowerVector next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double gamma = sinr(scenario, p, i);
        next[i] = clamp_power(target / gamma * p[i], scenario.p_max);
    }
    return next;
}

PowerVector rule_koskie_gajic(const NetworkScenario& scenario, double target,
                              double b, double c_kg, const PowerVector& p) {
    require_positive(p);
    if (!(b > 0.0)) throw std::invalid_argument("koskie-gajic: b must be > 0");
    if (!(c_kg >= 0.0)) {
        throw std::invalid_argument("koskie-gajic: c_kg must be >= 0");
    }
    PowerVector next(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double over_h = interference(scenario, p, i) / scenario.gains[i];
        next[i] = clamp_power(target * over_h - c_kg * over_h * over_h / (2.0 * b),
                              scenario.p_max);
    }
    return next;
}

void RuleRegistry::register_rule(const std::string& name, UpdateRule rule) {
    if (rules_.count(name) != 0) {
        throw std::invalid_argument("rule '" + name + "' is already registered");
    }
    rules_.emplace(name, std::move(rule));
}

const UpdateRule& RuleRegistry::get(const std::string& name) const {
    auto it = rules_.find(name);
    if (it == rules_.end()) {
        throw std::invalid_argument("unknown rule '" + name + "'");
    }
    return it->second;
}

bool RuleRegistry::contains(const std::string& name) const {
    return rules_.count(name) != 0;
}

std::vector<std::string> RuleRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(rules_.size());
    for (const auto& [name, rule] : rules_) out.push_back(name);
    return out;
}

RuleRegistry builtin_rules() {
    RuleRegistry reg;
    reg.register_rule("unpriced", [](const NetworkScenario& s,
                                     const GameParams& g,
                                     const PowerVector& p) {
        return update_unpriced(s, g, p);
    });
    reg.register_rule("priced", [](const NetworkScenario& s,
                                   const GameParams& g, const PowerVector& p) {
        return update_priced(s, g, p);
    });
    reg.register_rule("cdpc", [](const NetworkScenario& s, const GameParams& g,
                                 const PowerVector& p) {
        return rule_cdpc(s, g.target, p);
    });
    reg.register_rule("koskie-gajic",
                      [](const NetworkScenario& s, const GameParams& g,
                         const PowerVector& p) {
                          return rule_koskie_gajic(s, g.target, 1.0, g.price, p);
                      });
    return reg;
}

}  // namespace d2dpc
