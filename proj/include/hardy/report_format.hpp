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

#ifndef HARDY_REPORT_FORMAT_HPP
#define HARDY_REPORT_FORMAT_HPP

// Deterministic JSON, CSV and text rendering of the module reports. Reals are
// written with 17 significant digits through std::to_chars, which ignores the
// global locale.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/counterfactual_logic.hpp"
#include "hardy/hardy_model.hpp"
#include "hardy/hardy_optimizer.hpp"
#include "hardy/lhv_models.hpp"

namespace hardy {

inline std::string format_real(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// Streaming JSON writer with two-space indentation. Keys come out in the
/// order they are written.
class JsonWriter {
   public:
    JsonWriter &begin_object() { return open('{'); }
    JsonWriter &end_object() { return close('}'); }
    JsonWriter &begin_array() { return open('['); }
    JsonWriter &end_array() { return close(']'); }

    JsonWriter &key(std::string_view k) {
        separate();
        quote(k);
        out_ += ": ";
        after_key_ = true;
        return *this;
    }

    JsonWriter &value(std::string_view s) {
        separate();
        quote(s);
        return *this;
    }
    JsonWriter &value(const char *s) { return value(std::string_view(s)); }
    JsonWriter &value(const std::string &s) { return value(std::string_view(s)); }
    JsonWriter &value(double x) { return raw(format_real(x)); }
    JsonWriter &value(bool b) { return raw(b ? "true" : "false"); }
    JsonWriter &value(std::size_t n) { return raw(std::to_string(n)); }
    JsonWriter &null() { return raw("null"); }

    template <typename T>
    JsonWriter &field(std::string_view k, const T &v) {
        key(k);
        return value(v);
    }

    std::string str() const { return out_ + "\n"; }

   private:
    JsonWriter &open(char c) {
        separate();
        out_ += c;
        first_.push_back(true);
        return *this;
    }

    JsonWriter &close(char c) {
        bool empty = first_.back();
        first_.pop_back();
        if (!empty) {
            newline();
        }
        out_ += c;
        return *this;
    }

    JsonWriter &raw(std::string_view text) {
        separate();
        out_ += text;
        return *this;
    }

    void separate() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (first_.empty()) {
            return;
        }
        if (!first_.back()) {
            out_ += ',';
        }
        first_.back() = false;
        newline();
    }

    void newline() {
        out_ += '\n';
        out_.append(2 * first_.size(), ' ');
    }

    void quote(std::string_view s) {
        out_ += '"';
        for (char c : s) {
            switch (c) {
                case '"':
                    out_ += "\\\"";
                    break;
                case '\\':
                    out_ += "\\\\";
                    break;
                case '\n':
                    out_ += "\\n";
                    break;
                default:
                    out_ += c;
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> first_;
    bool after_key_ = false;
};

// ---------------------------------------------------------------------------
// Probability tables

inline std::string table_to_json(const JointProbabilityTable &table, double theta) {
    JsonWriter w;
    w.begin_object().field("theta", theta).key("records").begin_array();
    for (const auto &s : kSettingPairs) {
        for (const auto &o : kOutcomePairs) {
            w.begin_object()
                .field("setting_pair", label(s))
                .field("outcome_pair", label(o))
                .field("probability", table.at(s, o))
                .end_object();
        }
    }
    w.end_array().end_object();
    return w.str();
}

inline std::string table_to_csv(const JointProbabilityTable &table) {
    std::string out = "setting_pair,outcome_pair,probability\n";
    for (const auto &s : kSettingPairs) {
        for (const auto &o : kOutcomePairs) {
            out += label(s) + "," + label(o) + "," + format_real(table.at(s, o)) + "\n";
        }
    }
    return out;
}

inline std::string table_to_text(const JointProbabilityTable &table, double theta) {
    std::string out = "Joint probability table, theta = " + format_real(theta) + "\n";
    for (const auto &s : kSettingPairs) {
        out += "  " + label(s) + ":";
        for (const auto &o : kOutcomePairs) {
            out += "  " + label(o) + " " + format_real(table.at(s, o));
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Prediction checks

inline std::string verify_to_json(double theta, const PredictionReport &p, const NoSignallingReport &ns) {
    JsonWriter w;
    w.begin_object().field("theta", theta).field("tol", p.tol);
    w.key("predictions").begin_object();
    w.field("p1_zero", p.p1_zero).field("p2_zero", p.p2_zero).field("p3_zero", p.p3_zero);
    w.field("p4_positive", p.p4_positive).field("left_minus_marginal_under_L1", p.left_minus_marginal_under_L1);
    w.key("verdicts").begin_object();
    w.field("Eq1", p.verdicts[0]).field("Eq2", p.verdicts[1]).field("Eq3", p.verdicts[2]).field("Eq4", p.verdicts[3]);
    w.end_object().end_object();
    w.key("no_signalling").begin_object();
    w.field("pass", ns.pass).field("max_deviation", ns.max_deviation).field("tol", ns.tol);
    w.end_object().end_object();
    return w.str();
}

inline std::string verify_to_text(double theta, const PredictionReport &p, const NoSignallingReport &ns) {
    auto verdict = [](bool b) { return b ? "ok" : "FAIL"; };
    std::string out = "Hardy predictions, theta = " + format_real(theta) + ", tol = " + format_real(p.tol) + "\n";
    out += "  Eq1 P" + describe(kEq1) + " = " + format_real(p.p1_zero) + "  zero: " + verdict(p.verdicts[0]) + "\n";
    out += "  Eq2 P" + describe(kEq2) + " = " + format_real(p.p2_zero) + "  zero: " + verdict(p.verdicts[1]) + "\n";
    out += "  Eq3 P" + describe(kEq3) + " = " + format_real(p.p3_zero) + "  zero: " + verdict(p.verdicts[2]) + "\n";
    out += "  Eq4 P" + describe(kEq4) + " = " + format_real(p.p4_positive) + "  positive: " + verdict(p.verdicts[3]) +
           "\n";
    out += "  P(L1- | L1) = " + format_real(p.left_minus_marginal_under_L1) + "\n";
    out += "No-signalling: max deviation " + format_real(ns.max_deviation) + ", " + verdict(ns.pass) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Counterfactual logic

namespace detail {

template <typename Tuple>
void write_tuple(JsonWriter &w, const Tuple &t) {
    w.begin_array();
    for (Outcome o : t) {
        w.value(o == Outcome::Plus ? "+" : "-");
    }
    w.end_array();
}

inline void write_event(JsonWriter &w, const Event &e) {
    w.begin_object()
        .field("id", e.id)
        .field("setting_pair", label(e.settings))
        .field("outcome_pair", label(e.outcomes))
        .end_object();
}

inline void write_constraints(JsonWriter &w, const ConstraintSet &cs) {
    w.begin_object().key("zeros").begin_array();
    for (const auto &e : cs.zeros) {
        write_event(w, e);
    }
    w.end_array().key("positives").begin_array();
    for (const auto &e : cs.positives) {
        write_event(w, e);
    }
    w.end_array();
    w.field("left_realization",
            cs.left_realization == LeftRealization::L1MinusOnly ? "L1_minus_only" : "all_left_outcomes");
    w.end_object();
}

inline void write_instance(JsonWriter &w, const CounterfactualInstance &inst) {
    w.begin_object().field("id", inst.id()).key("tuple");
    write_tuple(w, inst.tuple());
    w.end_object();
}

inline std::string ids(const std::vector<Event> &events) {
    std::string s;
    for (const auto &e : events) {
        s += (s.empty() ? "" : ", ") + std::string(e.id);
    }
    return s.empty() ? "none" : s;
}

}  // namespace detail

inline std::string counterfactual_to_json(const ConstraintSet &cs, const LocalityViolationReport &r) {
    JsonWriter w;
    w.begin_object().key("constraint_set");
    detail::write_constraints(w, cs);
    w.field("instance_count", CounterfactualInstance::kCount).field("admissible_count", r.admissible_count);

    w.key("property1").begin_object().field("holds", r.property1.holds).key("admissible_ids").begin_array();
    for (const auto &inst : r.property1.admissible) {
        w.value(inst.id());
    }
    w.end_array().key("counterexample");
    if (r.property1.counterexample) {
        detail::write_instance(w, *r.property1.counterexample);
    } else {
        w.null();
    }
    w.end_object();

    const auto &p2 = r.property2;
    w.key("property2").begin_object().field("witness_found", p2.witness_found).key("witness");
    if (p2.witness) {
        detail::write_instance(w, *p2.witness);
    } else {
        w.null();
    }
    w.key("realized_event");
    if (p2.realized_event) {
        detail::write_event(w, *p2.realized_event);
    } else {
        w.null();
    }
    w.key("forced_step");
    if (p2.forced_step) {
        w.begin_object()
            .field("constraint", p2.forced_step->constraint)
            .field("entry", std::string("o_R(") + name(p2.forced_step->left) + "," + name(p2.forced_step->right) + ")")
            .field("value", std::string(1, symbol(p2.forced_step->value)))
            .end_object();
    } else {
        w.null();
    }
    w.field("sr_false_forced", p2.sr_false_forced).end_object();

    w.key("sr_values").begin_object();
    w.key("L1").begin_object().field("any_true", r.sr_at_L1.any_true).field("any_false", r.sr_at_L1.any_false);
    w.end_object();
    w.key("L2").begin_object().field("any_true", r.sr_at_L2.any_true).field("any_false", r.sr_at_L2.any_false);
    w.end_object().end_object();

    w.field("ensemble_realizable", r.ensemble_realizable).field("locality_violation", r.violation);
    w.end_object();
    return w.str();
}

inline std::string counterfactual_to_text(const ConstraintSet &cs, const LocalityViolationReport &r) {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    std::string out = "Counterfactual instances: " + std::to_string(CounterfactualInstance::kCount) +
                      ", admissible: " + std::to_string(r.admissible_count) + "\n";
    out += "  tuple order: o_L(L1), o_L(L2), o_R(L1,R1), o_R(L1,R2), o_R(L2,R1), o_R(L2,R2)\n";
    out += "  zeros: " + detail::ids(cs.zeros) + "; positives: " + detail::ids(cs.positives) + "\n";
    out += "Property 1 (L2 implies SR): " + std::string(r.property1.holds ? "holds" : "fails") + "\n";
    if (r.property1.counterexample) {
        out += "  counterexample #" + std::to_string(r.property1.counterexample->id()) + " " +
               r.property1.counterexample->to_string() + "\n";
    }
    out += "Property 2 (L1 implies SR is false): " +
           std::string(r.property2.witness_found ? "witness found" : "no witness") + "\n";
    if (r.property2.witness) {
        out += "  witness #" + std::to_string(r.property2.witness->id()) + " " + r.property2.witness->to_string() +
               " realizes " + describe(*r.property2.realized_event) + ", SR false\n";
    }
    if (r.property2.forced_step) {
        const auto &f = *r.property2.forced_step;
        out += "  forced by " + std::string(f.constraint) + ": o_R(" + name(f.left) + "," + name(f.right) +
               ") = " + symbol(f.value) + "\n";
    }
    out += "  SR false in every admissible case realizing the event: " + std::string(yes(r.property2.sr_false_forced)) +
           "\n";
    out += "SR values over admissible cases: L2 {" + std::string(r.sr_at_L2.any_true ? "true" : "") +
           (r.sr_at_L2.any_true && r.sr_at_L2.any_false ? "," : "") + (r.sr_at_L2.any_false ? "false" : "") +
           "}, L1 {" + (r.sr_at_L1.any_true ? "true" : "") + (r.sr_at_L1.any_true && r.sr_at_L1.any_false ? "," : "") +
           (r.sr_at_L1.any_false ? "false" : "") + "}\n";
    out += "Locality violation (SR, a statement about R, depends on the choice in L): " +
           std::string(yes(r.violation)) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Local hidden variables

inline std::string lhv_to_json(const ConstraintSet &cs, const FeasibilityResult &r) {
    JsonWriter w;
    w.begin_object().key("constraint_set");
    detail::write_constraints(w, cs);
    w.field("strategy_count", LocalStrategy::kCount).field("feasible", r.feasible).key("witnesses").begin_array();
    for (const auto &s : r.witnesses) {
        w.begin_object().field("id", s.id()).key("tuple");
        detail::write_tuple(w, s.tuple());
        w.end_object();
    }
    w.end_array().key("premise");
    if (r.premise) {
        detail::write_event(w, *r.premise);
    } else {
        w.null();
    }
    w.key("deduction_trace").begin_array();
    for (const auto &step : r.deduction_trace) {
        w.begin_object().field("constraint", step.constraint);
        if (step.contradiction()) {
            w.field("contradiction", true);
        } else {
            w.field("setting", name(*step.setting)).field("value", std::string(1, symbol(step.value)));
        }
        w.end_object();
    }
    w.end_array().end_object();
    return w.str();
}

inline std::string lhv_to_text(const ConstraintSet &cs, const FeasibilityResult &r) {
    std::string out = "Local strategies: " + std::to_string(LocalStrategy::kCount) + "; zeros: " +
                      detail::ids(cs.zeros) + "; positives: " + detail::ids(cs.positives) + "\n";
    out += "  tuple order: o_L(L1), o_L(L2), o_R(R1), o_R(R2)\n";
    out += "Feasible: " + std::string(r.feasible ? "yes" : "no") + "\n";
    for (const auto &s : r.witnesses) {
        out += "  witness #" + std::to_string(s.id()) + " " + s.to_string() + "\n";
    }
    if (r.premise) {
        out += "Assume " + std::string(r.premise->id) + " " + describe(*r.premise) + "\n";
    }
    for (const auto &step : r.deduction_trace) {
        if (step.contradiction()) {
            out += "  " + std::string(step.constraint) + ": contradiction\n";
        } else {
            out += "  " + std::string(step.constraint) + ": " + name(*step.setting) + " = " + symbol(step.value) + "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Optimizer

inline std::string optimize_to_json(const ObjectiveReport &r, const FiniteDifference &fd) {
    JsonWriter w;
    w.begin_object().field("theta_star", r.theta_star).field("p4_max", r.p4_max).field("iterations", r.iterations);
    w.key("bracket").begin_array().value(r.lo).value(r.hi).end_array();
    w.field("oracle_gap", r.oracle_gap);
    w.key("finite_difference").begin_object().field("estimate", fd.estimate).field("step", fd.step).end_object();
    w.end_object();
    return w.str();
}

inline std::string optimize_to_text(const ObjectiveReport &r, const FiniteDifference &fd) {
    std::string out = "Maximum of P(L1-, R1+) (Eq4 event)\n";
    out += "  theta* = " + format_real(r.theta_star) + "\n";
    out += "  p4_max = " + format_real(r.p4_max) + "\n";
    out += "  iterations = " + std::to_string(r.iterations) + ", bracket [" + format_real(r.lo) + ", " +
           format_real(r.hi) + "]\n";
    out += "  grid oracle gap = " + format_real(r.oracle_gap) + "\n";
    out += "  central difference (h = " + format_real(fd.step) + ") = " + format_real(fd.estimate) + "\n";
    return out;
}

}  // namespace hardy

#endif
