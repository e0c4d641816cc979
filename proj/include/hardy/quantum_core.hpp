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

#ifndef HARDY_QUANTUM_CORE_HPP
#define HARDY_QUANTUM_CORE_HPP

// Two-qubit pure states, local two-outcome measurement bases and Born-rule
// probabilities. Dimension is fixed at 2 x 2.
//
// Index convention: the left system is the slow index, so a 4-vector stores
// amplitudes in row-major order 00, 01, 10, 11 with (left, right) indices.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

using Amplitude = std::complex<double>;

/// Tolerance for algebraic identities (norms, sums of probabilities).
inline constexpr double kIdentityTol = 1e-12;
/// Tolerance for validating caller-supplied states and bases.
inline constexpr double kInputTol = 1e-9;

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Outcome : unsigned char { Plus = 0, Minus = 1 };

inline constexpr std::array<Outcome, 2> kOutcomes{Outcome::Plus, Outcome::Minus};

constexpr Outcome flip(Outcome o) { return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus; }
constexpr char symbol(Outcome o) { return o == Outcome::Plus ? '+' : '-'; }

enum class Setting : unsigned char { L1 = 0, L2 = 1, R1 = 2, R2 = 3 };

inline constexpr std::array<Setting, 4> kSettings{Setting::L1, Setting::L2, Setting::R1, Setting::R2};

constexpr bool is_left(Setting s) { return s == Setting::L1 || s == Setting::L2; }
/// 0 for L1/R1, 1 for L2/R2.
constexpr std::size_t choice_index(Setting s) { return static_cast<std::size_t>(s) & 1U; }

constexpr const char *name(Setting s) {
    switch (s) {
        case Setting::L1:
            return "L1";
        case Setting::L2:
            return "L2";
        case Setting::R1:
            return "R1";
        case Setting::R2:
            return "R2";
    }
    return "?";
}

namespace detail {

inline void require_finite(const Amplitude &a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw InvalidInput("amplitude has a non-finite component");
    }
}

}  // namespace detail

/// A single-qubit vector. Components are finite; unit norm is not enforced here.
class Qubit2Vector {
   public:
    Qubit2Vector(Amplitude a0, Amplitude a1) : amp_{a0, a1} {
        detail::require_finite(a0);
        detail::require_finite(a1);
    }

    const Amplitude &operator[](std::size_t i) const { return amp_[i]; }
    double norm_squared() const { return std::norm(amp_[0]) + std::norm(amp_[1]); }

    static Qubit2Vector zero() { return {1.0, 0.0}; }
    static Qubit2Vector one() { return {0.0, 1.0}; }

   private:
    std::array<Amplitude, 2> amp_;
};

inline Amplitude inner_product(const Qubit2Vector &x, const Qubit2Vector &y) {
    return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
}

/// Raw two-qubit vector, not necessarily normalized.
class Vec4 {
   public:
    Vec4(Amplitude a00, Amplitude a01, Amplitude a10, Amplitude a11) : amp_{a00, a01, a10, a11} {
        for (const auto &a : amp_) {
            detail::require_finite(a);
        }
    }

    const Amplitude &operator[](std::size_t i) const { return amp_[i]; }
    /// Amplitude of |left_index, right_index>.
    const Amplitude &at(std::size_t left_index, std::size_t right_index) const {
        return amp_[2 * left_index + right_index];
    }
    double norm_squared() const {
        double n = 0;
        for (const auto &a : amp_) {
            n += std::norm(a);
        }
        return n;
    }
    Vec4 scaled(Amplitude s) const { return {s * amp_[0], s * amp_[1], s * amp_[2], s * amp_[3]}; }

   private:
    std::array<Amplitude, 4> amp_;
};

/// Component (i, j) is a_i * b_j; the left factor is the slow index.
inline Vec4 tensor_product(const Qubit2Vector &a, const Qubit2Vector &b) {
    return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

/// Conjugate-linear in x, linear in y.
inline Amplitude inner_product(const Vec4 &x, const Vec4 &y) {
    Amplitude s = 0;
    for (std::size_t i = 0; i < 4; i++) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

/// A two-qubit pure state. Normalization is checked by the operations that
/// need it, so the error surfaces where the probability is requested.
class StateVector {
   public:
    explicit StateVector(Vec4 v) : v_(v) {}
    StateVector(Amplitude a00, Amplitude a01, Amplitude a10, Amplitude a11) : v_(a00, a01, a10, a11) {}

    const Vec4 &amplitudes() const { return v_; }
    double norm_squared() const { return v_.norm_squared(); }
    bool is_normalized(double tol = kInputTol) const { return std::abs(norm_squared() - 1.0) <= tol; }
    StateVector with_global_phase(double phi) const { return StateVector(v_.scaled(std::polar(1.0, phi))); }

   private:
    Vec4 v_;
};

/// Two-outcome projective measurement: `plus` is the vector for outcome +.
struct MeasurementBasis {
    Qubit2Vector plus;
    Qubit2Vector minus;
    Setting label;

    const Qubit2Vector &vector(Outcome o) const { return o == Outcome::Plus ? plus : minus; }

    /// |0> for +, |1> for -.
    static MeasurementBasis computational(Setting label) {
        return {Qubit2Vector::zero(), Qubit2Vector::one(), label};
    }
};

struct BasisReport {
    bool pass = true;
    double plus_norm_error = 0;
    double minus_norm_error = 0;
    double overlap = 0;
    std::vector<std::string> failures;
};

inline BasisReport validate_basis(const MeasurementBasis &b, double tol) {
    BasisReport r;
    r.plus_norm_error = std::abs(b.plus.norm_squared() - 1.0);
    r.minus_norm_error = std::abs(b.minus.norm_squared() - 1.0);
    r.overlap = std::abs(inner_product(b.plus, b.minus));
    if (r.plus_norm_error > tol) {
        r.failures.emplace_back(std::string(name(b.label)) + ": plus vector is not unit norm");
    }
    if (r.minus_norm_error > tol) {
        r.failures.emplace_back(std::string(name(b.label)) + ": minus vector is not unit norm");
    }
    if (r.overlap > tol) {
        r.failures.emplace_back(std::string(name(b.label)) + ": plus and minus are not orthogonal");
    }
    r.pass = r.failures.empty();
    return r;
}

/// |<left(oL) (x) right(oR) | state>|^2.
///
/// Throws InvalidInput if the state is not unit norm or either basis is not
/// orthonormal (both within kInputTol).
inline double born_joint_probability(
    const StateVector &state, const MeasurementBasis &left, Outcome oL, const MeasurementBasis &right, Outcome oR) {
    if (!state.is_normalized()) {
        throw InvalidInput("state is not normalized");
    }
    for (const auto *b : {&left, &right}) {
        auto report = validate_basis(*b, kInputTol);
        if (!report.pass) {
            throw InvalidInput(report.failures.front());
        }
    }
    auto amp = inner_product(tensor_product(left.vector(oL), right.vector(oR)), state.amplitudes());
    return std::norm(amp);
}

}  // namespace hardy

#endif
