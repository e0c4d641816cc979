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

#ifndef HARDY_COUNTERFACTUAL_LOGIC_HPP
#define HARDY_COUNTERFACTUAL_LOGIC_HPP

// Exhaustive checking of the SR statement over counterfactual outcome
// assignments.
//
// An instance assigns o_L(c_L) to each left choice and o_R(c_L, c_R) to each
// pair of choices. Every combination is defined (choices are free variables),
// and o_L has no right-choice argument (an earlier left outcome is settled
// independently of the later right choice). o_R may depend on c_L: locality is
// what gets tested, so it is not imposed.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "hardy/hardy_model.hpp"

namespace hardy {

class CounterfactualInstance {
   public:
    static constexpr std::size_t kCount = 64;

    /// Positions: o_L(L1), o_L(L2), o_R(L1,R1), o_R(L1,R2), o_R(L2,R1), o_R(L2,R2).
    using Tuple = std::array<Outcome, 6>;

    /// Instance number `id` in lexicographic order of the tuple with + < -.
    static CounterfactualInstance from_id(std::size_t id) {
        if (id >= kCount) {
            throw InvalidInput("instance id out of range");
        }
        Tuple t{};
        for (std::size_t k = 0; k < 6; k++) {
            t[k] = (id >> (5 - k)) & 1U ? Outcome::Minus : Outcome::Plus;
        }
        return CounterfactualInstance(t);
    }

    explicit CounterfactualInstance(const Tuple &t) : left_{t[0], t[1]}, right_{t[2], t[3], t[4], t[5]} {}

    Outcome left(Setting l) const {
        require_left(l);
        return left_[choice_index(l)];
    }
    Outcome right(Setting l, Setting r) const {
        require_left(l);
        if (is_left(r)) {
            throw InvalidInput("expected a right setting");
        }
        return right_[2 * choice_index(l) + choice_index(r)];
    }

    OutcomePair realized(const SettingPair &s) const { return {left(s.left), right(s.left, s.right)}; }
    bool realizes(const Event &e) const { return realized(e.settings) == e.outcomes; }

    Tuple tuple() const { return {left_[0], left_[1], right_[0], right_[1], right_[2], right_[3]}; }

    std::size_t id() const {
        std::size_t id = 0;
        for (Outcome o : tuple()) {
            id = 2 * id + static_cast<std::size_t>(o);
        }
        return id;
    }

    /// "(+,-,+,+,-,-)"
    std::string to_string() const {
        std::string s = "(";
        for (Outcome o : tuple()) {
            if (s.size() > 1) {
                s += ',';
            }
            s += symbol(o);
        }
        return s + ")";
    }

    friend bool operator==(const CounterfactualInstance &, const CounterfactualInstance &) = default;

   private:
    static void require_left(Setting l) {
        if (!is_left(l)) {
            throw InvalidInput("expected a left setting");
        }
    }

    std::array<Outcome, 2> left_;
    std::array<Outcome, 4> right_;
};

inline std::vector<CounterfactualInstance> enumerate_instances() {
    std::vector<CounterfactualInstance> all;
    all.reserve(CounterfactualInstance::kCount);
    for (std::size_t id = 0; id < CounterfactualInstance::kCount; id++) {
        all.push_back(CounterfactualInstance::from_id(id));
    }
    return all;
}

/// Which left outcomes an ensemble must realize besides its positivity events.
enum class LeftRealization {
    /// Some admitted case has L1-.
    L1MinusOnly,
    /// Every left choice shows both outcomes in some admitted case.
    AllLeftOutcomes,
};

/// Zero events must never occur in any admitted case; positivity events must
/// occur in at least one. Event ids are expected to have static storage.
struct ConstraintSet {
    std::vector<Event> zeros;
    std::vector<Event> positives;
    LeftRealization left_realization = LeftRealization::L1MinusOnly;

    /// Throws InvalidInput if an event is both forbidden and required.
    void validate() const {
        for (const auto &z : zeros) {
            for (const auto &p : positives) {
                if (z == p) {
                    throw InvalidInput("event " + describe(z) + " is both a zero and a positivity constraint");
                }
            }
        }
    }

    ConstraintSet without(std::string_view id) const {
        ConstraintSet out{{}, {}, left_realization};
        for (const auto &z : zeros) {
            if (z.id != id) {
                out.zeros.push_back(z);
            }
        }
        for (const auto &p : positives) {
            if (p.id != id) {
                out.positives.push_back(p);
            }
        }
        return out;
    }
};

/// Eq1-Eq3 as zeros, Eq4 as the positivity event.
inline ConstraintSet hardy_constraint_set() { return {{kEq1, kEq2, kEq3}, {kEq4}, LeftRealization::L1MinusOnly}; }

inline bool satisfies_zeros(const CounterfactualInstance &inst, const ConstraintSet &cs) {
    for (const auto &z : cs.zeros) {
        if (inst.realizes(z)) {
            return false;
        }
    }
    return true;
}

inline std::vector<CounterfactualInstance> admissible_instances(const ConstraintSet &cs) {
    std::vector<CounterfactualInstance> out;
    for (const auto &inst : enumerate_instances()) {
        if (satisfies_zeros(inst, cs)) {
            out.push_back(inst);
        }
    }
    return out;
}

struct SRVerdict {
    std::size_t instance_id;
    Setting context;
    bool premise_holds;
    bool sr_value;
};

/// SR at left context c_L: if o_R(c_L, R2) = + then o_R(c_L, R1) = -.
///
/// Both right outcomes are read from the same instance under the same c_L;
/// that is what "instead" means here, since switching the right choice leaves
/// o_L(c_L) untouched.
inline SRVerdict evaluate_SR(const CounterfactualInstance &inst, Setting context) {
    bool premise = inst.right(context, Setting::R2) == Outcome::Plus;
    bool conclusion = inst.right(context, Setting::R1) == Outcome::Minus;
    return {inst.id(), context, premise, !premise || conclusion};
}

struct Property1Report {
    bool holds = false;
    std::vector<CounterfactualInstance> admissible;
    /// First admissible instance with SR false at L2, if any.
    std::optional<CounterfactualInstance> counterexample;
};

/// Property 1: every zero-satisfying instance has SR true at context L2.
inline Property1Report check_property1(const ConstraintSet &cs) {
    Property1Report r;
    r.admissible = admissible_instances(cs);
    for (const auto &inst : r.admissible) {
        if (!evaluate_SR(inst, Setting::L2).sr_value) {
            r.counterexample = inst;
            break;
        }
    }
    r.holds = !r.counterexample.has_value();
    return r;
}

/// A tuple entry whose value is pinned by a zero constraint.
struct ForcedStep {
    std::string_view constraint;
    Setting left;
    Setting right;
    Outcome value;
};

struct Property2Report {
    bool witness_found = false;
    std::optional<CounterfactualInstance> witness;
    std::optional<Event> realized_event;
    /// Why o_R(L1,R2) = + in the witness: the zero excluding the flipped value.
    std::optional<ForcedStep> forced_step;
    /// Every admissible instance realizing the event has SR false at L1, so
    /// any ensemble meeting the positivity constraint contains such a case.
    bool sr_false_forced = false;
};

/// Property 2: some admissible instance realizes a positivity event and has
/// SR false at context L1.
inline Property2Report check_property2(const ConstraintSet &cs) {
    Property2Report r;
    const auto admissible = admissible_instances(cs);
    for (const auto &event : cs.positives) {
        bool any_realizing = false;
        bool all_false = true;
        std::optional<CounterfactualInstance> first;
        for (const auto &inst : admissible) {
            if (!inst.realizes(event)) {
                continue;
            }
            any_realizing = true;
            if (evaluate_SR(inst, Setting::L1).sr_value) {
                all_false = false;
            } else if (!first) {
                first = inst;
            }
        }
        if (first && !r.witness_found) {
            r.witness_found = true;
            r.witness = first;
            r.realized_event = event;
        }
        if (any_realizing && all_false) {
            r.sr_false_forced = true;
        }
    }
    if (r.witness) {
        auto t = r.witness->tuple();
        t[3] = flip(t[3]);
        CounterfactualInstance flipped(t);
        for (const auto &z : cs.zeros) {
            if (flipped.realizes(z) && z.settings == SettingPair{Setting::L1, Setting::R2}) {
                r.forced_step = ForcedStep{z.id, Setting::L1, Setting::R2, r.witness->right(Setting::L1, Setting::R2)};
                break;
            }
        }
    }
    return r;
}

struct SRValueSet {
    bool any_true = false;
    bool any_false = false;
};

struct LocalityViolationReport {
    Property1Report property1;
    Property2Report property2;
    std::size_t admissible_count = 0;
    SRValueSet sr_at_L2;
    SRValueSet sr_at_L1;
    /// Every positivity event and required left outcome occurs in some
    /// admissible instance, so a consistent ensemble exists.
    bool ensemble_realizable = false;
    bool violation = false;
};

namespace detail {

inline std::vector<std::pair<Setting, Outcome>> required_left_outcomes(LeftRealization policy) {
    if (policy == LeftRealization::L1MinusOnly) {
        return {{Setting::L1, Outcome::Minus}};
    }
    return {{Setting::L1, Outcome::Plus},
            {Setting::L1, Outcome::Minus},
            {Setting::L2, Outcome::Plus},
            {Setting::L2, Outcome::Minus}};
}

}  // namespace detail

/// SR's truth conditions mention only right-region outcomes. The violation
/// flag is set when SR is true in every admissible case under L2 while every
/// consistent ensemble contains a case with SR false under L1.
inline LocalityViolationReport locality_violation_report(const ConstraintSet &cs) {
    cs.validate();
    LocalityViolationReport r;
    r.property1 = check_property1(cs);
    r.property2 = check_property2(cs);
    r.admissible_count = r.property1.admissible.size();
    for (const auto &inst : r.property1.admissible) {
        for (auto [ctx, set] : {std::pair{Setting::L1, &r.sr_at_L1}, std::pair{Setting::L2, &r.sr_at_L2}}) {
            if (evaluate_SR(inst, ctx).sr_value) {
                set->any_true = true;
            } else {
                set->any_false = true;
            }
        }
    }

    r.ensemble_realizable = true;
    for (const auto &event : cs.positives) {
        bool found = false;
        for (const auto &inst : r.property1.admissible) {
            found = found || inst.realizes(event);
        }
        r.ensemble_realizable = r.ensemble_realizable && found;
    }
    for (auto [setting, outcome] : detail::required_left_outcomes(cs.left_realization)) {
        bool found = false;
        for (const auto &inst : r.property1.admissible) {
            found = found || inst.left(setting) == outcome;
        }
        r.ensemble_realizable = r.ensemble_realizable && found;
    }

    r.violation = r.ensemble_realizable && r.admissible_count > 0 && r.property1.holds &&
                  r.property2.witness_found && r.property2.sr_false_forced;
    return r;
}

using Weight = boost::rational<std::int64_t>;

/// A theory modelled as a weighted set of deterministic instances. Only the
/// support (weight > 0) enters the logic.
class Ensemble {
   public:
    /// Throws InvalidInput on negative weights or weights not summing to 1.
    // Comparisons below use Weight operands: with C++20 rewritten operators,
    // boost::rational (1.74) recurses forever when compared against a plain int.
    explicit Ensemble(std::vector<std::pair<CounterfactualInstance, Weight>> members) : members_(std::move(members)) {
        Weight total{0};
        for (const auto &[inst, w] : members_) {
            if (w < Weight(0)) {
                throw InvalidInput("ensemble weights must be nonnegative");
            }
            total += w;
        }
        if (total != Weight(1)) {
            throw InvalidInput("ensemble weights must sum to 1");
        }
    }

    static Ensemble uniform(const std::vector<CounterfactualInstance> &instances) {
        if (instances.empty()) {
            throw InvalidInput("ensemble must be nonempty");
        }
        std::vector<std::pair<CounterfactualInstance, Weight>> m;
        for (const auto &inst : instances) {
            m.emplace_back(inst, Weight(1, static_cast<std::int64_t>(instances.size())));
        }
        return Ensemble(std::move(m));
    }

    std::vector<CounterfactualInstance> support() const {
        std::vector<CounterfactualInstance> s;
        for (const auto &[inst, w] : members_) {
            if (w > Weight(0)) {
                s.push_back(inst);
            }
        }
        return s;
    }

    const std::vector<std::pair<CounterfactualInstance, Weight>> &members() const { return members_; }

   private:
    std::vector<std::pair<CounterfactualInstance, Weight>> members_;
};

/// Zeros hold in every supported case; each positivity event and required
/// left outcome occurs in some supported case.
inline bool ensemble_consistent(const Ensemble &ensemble, const ConstraintSet &cs) {
    const auto support = ensemble.support();
    for (const auto &inst : support) {
        if (!satisfies_zeros(inst, cs)) {
            return false;
        }
    }
    for (const auto &event : cs.positives) {
        bool found = false;
        for (const auto &inst : support) {
            found = found || inst.realizes(event);
        }
        if (!found) {
            return false;
        }
    }
    for (auto [setting, outcome] : detail::required_left_outcomes(cs.left_realization)) {
        bool found = false;
        for (const auto &inst : support) {
            found = found || inst.left(setting) == outcome;
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

}  // namespace hardy

#endif
