// Copyright 2026 The hardy-check Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HARDY_LHV_MODELS_HPP
#define HARDY_LHV_MODELS_HPP

// Deterministic local hidden-variable strategies: outcomes pre-assigned to all
// four measurements at once, each side depending only on its own setting.
// Mixtures need no separate treatment: a mixture violates a zero iff some
// strategy in its support does, and realizes an event iff some support
// strategy does.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/counterfactual_logic.hpp"

namespace hardy {

class LocalStrategy {
   public:
    static constexpr std::size_t kCount = 16;

    /// Positions: o_L(L1), o_L(L2), o_R(R1), o_R(R2); indexed by Setting.
    using Tuple = std::array<Outcome, 4>;

    static LocalStrategy from_id(std::size_t id) {
        if (id >= kCount) {
            throw InvalidInput("strategy id out of range");
        }
        Tuple t{};
        for (std::size_t k = 0; k < 4; k++) {
            t[k] = (id >> (3 - k)) & 1U ? Outcome::Minus : Outcome::Plus;
        }
        return LocalStrategy(t);
    }

    explicit LocalStrategy(const Tuple &t) : out_(t) {}

    Outcome outcome(Setting s) const { return out_[static_cast<std::size_t>(s)]; }
    OutcomePair realized(const SettingPair &s) const { return {outcome(s.left), outcome(s.right)}; }
    bool realizes(const Event &e) const { return realized(e.settings) == e.outcomes; }
    const Tuple &tuple() const { return out_; }

    std::size_t id() const {
        std::size_t id = 0;
        for (Outcome o : out_) {
            id = 2 * id + static_cast<std::size_t>(o);
        }
        return id;
    }

    /// The counterfactual instance whose right outcomes ignore the left choice.
    CounterfactualInstance to_instance() const {
        return CounterfactualInstance({out_[0], out_[1], out_[2], out_[3], out_[2], out_[3]});
    }

    std::string to_string() const {
        std::string s = "(";
        for (Outcome o : out_) {
            if (s.size() > 1) {
                s += ',';
            }
            s += symbol(o);
        }
        return s + ")";
    }

    friend bool operator==(const LocalStrategy &, const LocalStrategy &) = default;

   private:
    Tuple out_;
};

inline std::vector<LocalStrategy> enumerate_strategies() {
    std::vector<LocalStrategy> all;
    all.reserve(LocalStrategy::kCount);
    for (std::size_t id = 0; id < LocalStrategy::kCount; id++) {
        all.push_back(LocalStrategy::from_id(id));
    }
    return all;
}

/// True iff no zero event is realized. Positivity is a property of a set of
/// strategies and is not checked here.
inline bool strategy_satisfies(const LocalStrategy &s, const ConstraintSet &cs) {
    for (const auto &z : cs.zeros) {
        if (s.outcome(z.settings.left) == z.outcomes.left && s.outcome(z.settings.right) == z.outcomes.right) {
            return false;
        }
    }
    return true;
}

/// One propagation step. `setting` is empty for the step that closes the
/// chain in a contradiction.
struct DeductionStep {
    std::string_view constraint;
    std::optional<Setting> setting;
    Outcome value = Outcome::Plus;

    bool contradiction() const { return !setting.has_value(); }
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<LocalStrategy> witnesses;
    /// Positivity event assumed at the start of the trace.
    std::optional<Event> premise;
    std::vector<DeductionStep> deduction_trace;
};

/// Unit propagation of the zero constraints from the outcomes fixed by
/// `premise`, sweeping `order` until a contradiction or a fixed point. The
/// brute-force scan, not this trace, decides feasibility.
inline std::vector<DeductionStep> propagate_zeros(const Event &premise, const std::vector<Event> &order) {
    std::array<std::optional<Outcome>, 4> value{};
    value[static_cast<std::size_t>(premise.settings.left)] = premise.outcomes.left;
    value[static_cast<std::size_t>(premise.settings.right)] = premise.outcomes.right;

    std::vector<DeductionStep> trace;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &z : order) {
            auto &l = value[static_cast<std::size_t>(z.settings.left)];
            auto &r = value[static_cast<std::size_t>(z.settings.right)];
            if (l == z.outcomes.left && r == z.outcomes.right) {
                trace.push_back({z.id, std::nullopt, Outcome::Plus});
                return trace;
            }
            if (l == z.outcomes.left && !r) {
                r = flip(z.outcomes.right);
                trace.push_back({z.id, z.settings.right, *r});
                changed = true;
            } else if (r == z.outcomes.right && !l) {
                l = flip(z.outcomes.left);
                trace.push_back({z.id, z.settings.left, *l});
                changed = true;
            }
        }
    }
    return trace;
}

/// Brute force over all 16 strategies. Feasible iff some zero-satisfying
/// strategy realizes each positivity event (or, with no positivity events,
/// iff any strategy satisfies the zeros). When infeasible, the trace explains
/// the first unrealizable event, propagating zeros in `order` (default: the
/// order stored in `cs`).
inline FeasibilityResult lhv_feasibility(const ConstraintSet &cs, const std::vector<Event> &order = {}) {
    FeasibilityResult r;
    std::vector<LocalStrategy> admissible;
    for (const auto &s : enumerate_strategies()) {
        if (strategy_satisfies(s, cs)) {
            admissible.push_back(s);
        }
    }
    if (cs.positives.empty()) {
        r.witnesses = admissible;
        r.feasible = !admissible.empty();
        return r;
    }

    r.feasible = true;
    for (const auto &event : cs.positives) {
        bool realized = false;
        for (const auto &s : admissible) {
            realized = realized || s.realizes(event);
        }
        if (!realized) {
            r.feasible = false;
            r.premise = event;
            r.deduction_trace = propagate_zeros(event, order.empty() ? cs.zeros : order);
            break;
        }
    }
    if (r.feasible) {
        for (const auto &s : admissible) {
            for (const auto &event : cs.positives) {
                if (s.realizes(event)) {
                    r.witnesses.push_back(s);
                    break;
                }
            }
        }
    }
    return r;
}

/// Hardy constraints, propagated in the order Eq4 -> Eq2 -> Eq3 -> Eq1.
inline FeasibilityResult hardy_lhv_feasibility() {
    return lhv_feasibility(hardy_constraint_set(), {kEq2, kEq3, kEq1});
}

}  // namespace hardy

#endif
