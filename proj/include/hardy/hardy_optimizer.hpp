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

#ifndef HARDY_HARDY_OPTIMIZER_HPP
#define HARDY_HARDY_OPTIMIZER_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "hardy/hardy_model.hpp"

namespace hardy {

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GoldenSectionResult {
    double argmax;
    double value;
    std::size_t iterations;
    double lo;
    double hi;
};

struct NoBracketObserver {
    void operator()(double, double) const {}
};

/// Golden-section search for a maximum of `f` on [lo, hi]. Stops once the
/// bracket is narrower than `tol`; throws NonConvergence if that takes more
/// than `max_iter` iterations. `observe(lo, hi)` sees every new bracket.
///
/// Only unimodal functions are guaranteed to converge to the global maximum.
template <typename F, typename Observer = NoBracketObserver>
GoldenSectionResult golden_section_maximize(
    F &&f, double lo, double hi, double tol, std::size_t max_iter, Observer &&observe = {}) {
    constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    double c = hi - kInvPhi * (hi - lo);
    double d = lo + kInvPhi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    std::size_t iterations = 0;
    while (hi - lo > tol) {
        if (iterations == max_iter) {
            throw NonConvergence("golden-section search did not shrink the bracket below tol");
        }
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - kInvPhi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + kInvPhi * (hi - lo);
            fd = f(d);
        }
        iterations++;
        observe(lo, hi);
    }
    return fc >= fd ? GoldenSectionResult{c, fc, iterations, lo, hi} : GoldenSectionResult{d, fd, iterations, lo, hi};
}

/// P(L1-, R1+ | L1, R1) for the Hardy configuration at theta.
inline double paradox_probability(double theta) {
    const auto config = build_hardy_configuration(theta);
    return born_joint_probability(config.state, config.basis(Setting::L1), Outcome::Minus, config.basis(Setting::R1),
                                  Outcome::Plus);
}

inline constexpr double kDefaultBracketLo = 0.01;
inline constexpr double kDefaultBracketHi = std::numbers::pi / 2 - 0.01;
/// Spacing of the grid used to compute ObjectiveReport::oracle_gap.
inline constexpr double kOracleGridStep = 1e-5;

struct GridMaximum {
    double theta = 0;
    double value = 0;
    std::size_t points = 0;
};

/// Best of the points lo, lo + step, ..., up to hi.
template <typename F>
GridMaximum grid_maximum(F &&f, double lo, double hi, double step) {
    GridMaximum best{lo, f(lo), 1};
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step));
    for (std::size_t k = 1; k <= n; k++) {
        double t = lo + static_cast<double>(k) * step;
        double v = f(t);
        if (v > best.value) {
            best = {t, v, best.points};
        }
        best.points++;
    }
    return best;
}

struct ObjectiveReport {
    double theta_star = 0;
    double p4_max = 0;
    std::size_t iterations = 0;
    double lo = 0;
    double hi = 0;
    double oracle_gap = 0;
};

/// Maximizes paradox_probability on [lo, hi].
///
/// The objective vanishes at pi/4 and has two equal peaks placed symmetrically
/// about it, so a 64-cell scan first picks the best cell and golden-section
/// search runs on that cell and its neighbours. `iterations` counts the
/// golden-section steps; (lo, hi) in the report is the final bracket.
inline ObjectiveReport maximize_paradox(double lo = kDefaultBracketLo, double hi = kDefaultBracketHi,
                                        double tol = 1e-10, std::size_t max_iter = 200) {
    if (!(lo > 0.0 && lo < hi && hi < std::numbers::pi / 2)) {
        throw std::domain_error("bracket must satisfy 0 < lo < hi < pi/2");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tol must be positive");
    }

    constexpr std::size_t kCells = 64;
    const double cell = (hi - lo) / kCells;
    std::size_t best = 0;
    double best_value = -1;
    for (std::size_t k = 0; k <= kCells; k++) {
        double v = paradox_probability(k == kCells ? hi : lo + static_cast<double>(k) * cell);
        if (v > best_value) {
            best_value = v;
            best = k;
        }
    }
    const double a = best == 0 ? lo : lo + static_cast<double>(best - 1) * cell;
    const double b = best >= kCells - 1 ? hi : lo + static_cast<double>(best + 1) * cell;

    auto g = golden_section_maximize(paradox_probability, a, b, tol, max_iter);
    auto oracle = grid_maximum(paradox_probability, lo, hi, kOracleGridStep);
    return {g.argmax, g.value, g.iterations, g.lo, g.hi, std::abs(g.value - oracle.value)};
}

struct FiniteDifference {
    double estimate;
    double step;
};

/// Central difference (p4(theta + h) - p4(theta - h)) / 2h.
inline FiniteDifference finite_difference_scan(double theta, double h) {
    if (!(h > 0.0) || !(theta - h > 0.0) || !(theta + h < std::numbers::pi / 2)) {
        throw std::domain_error("theta +/- h must lie inside (0, pi/2)");
    }
    return {(paradox_probability(theta + h) - paradox_probability(theta - h)) / (2 * h), h};
}

}  // namespace hardy

#endif
