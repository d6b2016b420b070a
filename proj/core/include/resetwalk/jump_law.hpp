#pragma once

#include <complex>
#include <string>

#include "resetwalk/rng.hpp"

namespace resetwalk {

// Direction of motion between resets. A reset redraws the direction:
// Plus with probability rho, Minus with probability 1-rho.
enum class Direction { plus, minus };

inline const char* to_string(Direction d) { return d == Direction::plus ? "plus" : "minus"; }

// Law of a single jump length (jumps always point along the current
// direction, so the law lives on [0, inf)).
//
//   exponential(gamma) : density gamma * exp(-gamma*u), u >= 0
//   deterministic(a)   : point mass at a >= 0
//   zero               : point mass at 0 (lets a jump *rate* be formally
//                        positive while producing no displacement)
class JumpLaw {
public:
    enum class Kind { exponential, deterministic, zero };

    static JumpLaw exponential(double gamma);
    static JumpLaw deterministic(double size);
    static JumpLaw zero() { return JumpLaw(Kind::zero, 0.0); }

    Kind kind() const { return kind_; }
    // Rate parameter for exponential, jump size for deterministic.
    double parameter() const { return param_; }

    double mean() const;

    // P{J = 0}: probability a jump produces no displacement. 1 for the zero
    // law, 1 for deterministic size 0, else 0. Such jumps are invisible to
    // the walk, so escape-rate computations must discount them.
    double mass_at_zero() const;

    // Laplace transform hhat(r) = E[exp(-r J)], r >= 0 (real) or complex r
    // for transform work on inversion contours.
    double laplace(double r) const;
    std::complex<double> laplace(std::complex<double> r) const;

    // Fourier factor entering the propagator: hhat evaluated at -i*omega for
    // Plus (jumps add +J to x) and at +i*omega for Minus (jumps add -J).
    std::complex<double> fourier(double omega, Direction dir) const;

    double sample(Rng& rng) const;

    std::string describe() const;

    bool operator==(const JumpLaw&) const = default;

private:
    JumpLaw(Kind k, double p) : kind_(k), param_(p) {}
    Kind kind_;
    double param_;
};

} // namespace resetwalk
