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

#ifndef HARDY_HARDY_MODEL_HPP
#define HARDY_HARDY_MODEL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "hardy/quantum_core.hpp"

namespace hardy {

/// Zero-probability tolerance; looser than kIdentityTol to absorb the
/// trigonometric solve in build_hardy_configuration.
inline constexpr double kZeroTol = 1e-10;

struct SettingPair {
    Setting left;
    Setting right;

    constexpr std::size_t index() const { return 2 * choice_index(left) + choice_index(right); }
    friend constexpr bool operator==(const SettingPair &, const SettingPair &) = default;
};

struct OutcomePair {
    Outcome left;
    Outcome right;

    constexpr std::size_t index() const {
        return 2 * static_cast<std::size_t>(left) + static_cast<std::size_t>(right);
    }
    friend constexpr bool operator==(const OutcomePair &, const OutcomePair &) = default;
};

/// Serialization order for setting pairs.
inline constexpr std::array<SettingPair, 4> kSettingPairs{{
    {Setting::L1, Setting::R1},
    {Setting::L1, Setting::R2},
    {Setting::L2, Setting::R1},
    {Setting::L2, Setting::R2},
}};

/// Serialization order for outcome pairs: ++, +-, -+, --.
inline constexpr std::array<OutcomePair, 4> kOutcomePairs{{
    {Outcome::Plus, Outcome::Plus},
    {Outcome::Plus, Outcome::Minus},
    {Outcome::Minus, Outcome::Plus},
    {Outcome::Minus, Outcome::Minus},
}};

inline std::string label(const SettingPair &s) { return std::string(name(s.left)) + name(s.right); }
inline std::string label(const OutcomePair &o) { return {symbol(o.left), symbol(o.right)}; }

/// A joint event such as (L2-, R2+) under settings (L2, R2).
struct Event {
    std::string_view id;
    SettingPair settings;
    OutcomePair outcomes;

    friend constexpr bool operator==(const Event &a, const Event &b) {
        return a.settings == b.settings && a.outcomes == b.outcomes;
    }
};

/// "(L2-,R2+)"
inline std::string describe(const Event &e) {
    return std::string("(") + name(e.settings.left) + symbol(e.outcomes.left) + "," + name(e.settings.right) +
           symbol(e.outcomes.right) + ")";
}

/// If R2+ then L2+: P(L2-, R2+) = 0.
inline constexpr Event kEq1{"Eq1", {Setting::L2, Setting::R2}, {Outcome::Minus, Outcome::Plus}};
/// If L2+ and R1 then R1-: P(L2+, R1+) = 0.
inline constexpr Event kEq2{"Eq2", {Setting::L2, Setting::R1}, {Outcome::Plus, Outcome::Plus}};
/// If L1- and R2 then R2+: P(L1-, R2-) = 0.
inline constexpr Event kEq3{"Eq3", {Setting::L1, Setting::R2}, {Outcome::Minus, Outcome::Minus}};
/// If L1- and R1 then sometimes R1+: P(L1-, R1+) > 0.
inline constexpr Event kEq4{"Eq4", {Setting::L1, Setting::R1}, {Outcome::Minus, Outcome::Plus}};

inline constexpr std::array<Event, 3> kHardyZeros{kEq1, kEq2, kEq3};

/// State plus one measurement basis per setting.
struct HardyConfiguration {
    StateVector state;
    std::array<MeasurementBasis, 4> bases;
    double theta;

    const MeasurementBasis &basis(Setting s) const { return bases[static_cast<std::size_t>(s)]; }
};

/// Builds the Hardy configuration with Schmidt angle theta.
///
/// The state is cos(theta)|00> + sin(theta)|11>. The bases follow Hardy's
/// symmetric construction: a single family of kets {c, d, u, v} is shared by
/// both sides, with the right-side kets additionally rotated by sigma_z so the
/// effective two-body form is diag(cos theta, -sin theta). The three zeros then
/// read <u u|psi> = <v d|psi> = <d v|psi> = 0 and have the closed-form solution
///
///     u = (cos b, sin b),  tan^2 b = cot theta,     v = u rotated by +90 deg,
///     d = (sin theta cos b, -cos theta sin b) / n,  c = d rotated by -90 deg,
///
/// with n^2 = 1 - sin theta cos theta. Settings are assigned per the Hardy
/// notation map: L1 = (c, d), L2 = (v, u), R1 = Z(d, c), R2 = Z(u, v).
///
/// Throws std::domain_error unless 0 < theta < pi/2.
inline HardyConfiguration build_hardy_configuration(double theta) {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2)) {
        throw std::domain_error("theta must lie strictly inside (0, pi/2)");
    }
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    const double b = std::atan(std::sqrt(cs / sn));
    const double cb = std::cos(b);
    const double sb = std::sin(b);
    const double n = std::sqrt(1.0 - sn * cs);

    const Qubit2Vector u{cb, sb};
    const Qubit2Vector v{-sb, cb};
    const Qubit2Vector d{sn * cb / n, -cs * sb / n};
    const Qubit2Vector c{cs * sb / n, sn * cb / n};
    auto z = [](const Qubit2Vector &k) { return Qubit2Vector{k[0], -k[1]}; };

    return HardyConfiguration{
        StateVector{cs, 0.0, 0.0, sn},
        {{
            {c, d, Setting::L1},
            {v, u, Setting::L2},
            {z(d), z(c), Setting::R1},
            {z(u), z(v), Setting::R2},
        }},
        theta,
    };
}

/// Probabilities for the 4 setting pairs x 4 outcome pairs, indexed in the
/// serialization order of kSettingPairs x kOutcomePairs.
class JointProbabilityTable {
   public:
    /// Validates entries in [0, 1] and row sums equal to 1, both within tol.
    static JointProbabilityTable from_entries(const std::array<double, 16> &entries, double tol = kInputTol) {
        for (std::size_t row = 0; row < 4; row++) {
            double sum = 0;
            for (std::size_t k = 0; k < 4; k++) {
                double p = entries[4 * row + k];
                if (!(p >= -tol && p <= 1.0 + tol)) {
                    throw InvalidInput("probability outside [0, 1]");
                }
                sum += p;
            }
            if (std::abs(sum - 1.0) > tol) {
                throw InvalidInput("row " + label(kSettingPairs[row]) + " does not sum to 1");
            }
        }
        JointProbabilityTable t;
        t.entries_ = entries;
        return t;
    }

    double at(const SettingPair &s, const OutcomePair &o) const { return entries_[4 * s.index() + o.index()]; }
    double at(const Event &e) const { return at(e.settings, e.outcomes); }
    const std::array<double, 16> &entries() const { return entries_; }

    double row_sum(const SettingPair &s) const {
        double sum = 0;
        for (const auto &o : kOutcomePairs) {
            sum += at(s, o);
        }
        return sum;
    }

    /// P(left outcome = o | settings s).
    double left_marginal(const SettingPair &s, Outcome o) const {
        return at(s, {o, Outcome::Plus}) + at(s, {o, Outcome::Minus});
    }
    /// P(right outcome = o | settings s).
    double right_marginal(const SettingPair &s, Outcome o) const {
        return at(s, {Outcome::Plus, o}) + at(s, {Outcome::Minus, o});
    }

   private:
    std::array<double, 16> entries_{};
};

inline JointProbabilityTable joint_probability_table(const HardyConfiguration &config) {
    std::array<double, 16> entries{};
    for (const auto &s : kSettingPairs) {
        for (const auto &o : kOutcomePairs) {
            entries[4 * s.index() + o.index()] =
                born_joint_probability(config.state, config.basis(s.left), o.left, config.basis(s.right), o.right);
        }
    }
    return JointProbabilityTable::from_entries(entries, kIdentityTol);
}

struct PredictionReport {
    double p1_zero = 0;
    double p2_zero = 0;
    double p3_zero = 0;
    double p4_positive = 0;
    /// P(L1- | L1); reported only. The argument needs it to be nonzero, which
    /// p4_positive > 0 already implies.
    double left_minus_marginal_under_L1 = 0;
    double tol = kZeroTol;
    std::array<bool, 4> verdicts{};

    bool all_pass() const { return verdicts[0] && verdicts[1] && verdicts[2] && verdicts[3]; }
};

inline PredictionReport verify_hardy_predictions(const JointProbabilityTable &table, double tol) {
    PredictionReport r;
    r.tol = tol;
    r.p1_zero = table.at(kEq1);
    r.p2_zero = table.at(kEq2);
    r.p3_zero = table.at(kEq3);
    r.p4_positive = table.at(kEq4);
    r.left_minus_marginal_under_L1 = table.left_marginal(kEq4.settings, Outcome::Minus);
    r.verdicts = {r.p1_zero < tol, r.p2_zero < tol, r.p3_zero < tol, r.p4_positive > tol};
    return r;
}

struct NoSignallingReport {
    bool pass = true;
    double max_deviation = 0;
    double tol = kIdentityTol;
};

/// Checks that each side's marginals do not depend on the remote setting.
inline NoSignallingReport no_signalling_check(const JointProbabilityTable &table, double tol) {
    NoSignallingReport r;
    r.tol = tol;
    for (Setting local : {Setting::L1, Setting::L2}) {
        for (Outcome o : kOutcomes) {
            double a = table.left_marginal({local, Setting::R1}, o);
            double b = table.left_marginal({local, Setting::R2}, o);
            r.max_deviation = std::max(r.max_deviation, std::abs(a - b));
        }
    }
    for (Setting local : {Setting::R1, Setting::R2}) {
        for (Outcome o : kOutcomes) {
            double a = table.right_marginal({Setting::L1, local}, o);
            double b = table.right_marginal({Setting::L2, local}, o);
            r.max_deviation = std::max(r.max_deviation, std::abs(a - b));
        }
    }
    r.pass = r.max_deviation <= tol;
    return r;
}

namespace detail {

struct HardyLabel {
    Setting setting;
    Outcome outcome;
    std::string_view label;
};

inline constexpr std::array<HardyLabel, 8> kHardyLabels{{
    {Setting::L1, Outcome::Plus, "c1"},
    {Setting::L1, Outcome::Minus, "d1"},
    {Setting::L2, Outcome::Plus, "v1"},
    {Setting::L2, Outcome::Minus, "u1"},
    {Setting::R1, Outcome::Plus, "d2"},
    {Setting::R1, Outcome::Minus, "c2"},
    {Setting::R2, Outcome::Plus, "u2"},
    {Setting::R2, Outcome::Minus, "v2"},
}};

}  // namespace detail

/// Label of the ket for (setting, outcome) in Hardy's notation.
constexpr std::string_view to_hardy_notation(Setting s, Outcome o) {
    return detail::kHardyLabels[2 * static_cast<std::size_t>(s) + static_cast<std::size_t>(o)].label;
}

inline std::optional<std::pair<Setting, Outcome>> from_hardy_notation(std::string_view label) {
    for (const auto &h : detail::kHardyLabels) {
        if (h.label == label) {
            return std::pair{h.setting, h.outcome};
        }
    }
    return std::nullopt;
}

}  // namespace hardy

#endif
