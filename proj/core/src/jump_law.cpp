#include "resetwalk/jump_law.hpp"

#include <cmath>
#include <stdexcept>

namespace resetwalk {

JumpLaw JumpLaw::exponential(double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("JumpLaw::exponential: gamma must be > 0");
    return JumpLaw(Kind::exponential, gamma);
}

JumpLaw JumpLaw::deterministic(double size) {
    if (!(size >= 0.0))
        throw std::invalid_argument("JumpLaw::deterministic: size must be >= 0");
    return JumpLaw(Kind::deterministic, size);
}

double JumpLaw::mean() const {
    switch (kind_) {
    case Kind::exponential: return 1.0 / param_;
    case Kind::deterministic: return param_;
    case Kind::zero: return 0.0;
    }
    return 0.0;
}

double JumpLaw::mass_at_zero() const {
    switch (kind_) {
    case Kind::exponential: return 0.0;
    case Kind::deterministic: return param_ == 0.0 ? 1.0 : 0.0;
    case Kind::zero: return 1.0;
    }
    return 0.0;
}

double JumpLaw::laplace(double r) const {
    if (!(r >= 0.0))
        throw std::invalid_argument("JumpLaw::laplace: r must be >= 0");
    switch (kind_) {
    case Kind::exponential: return param_ / (param_ + r);
    case Kind::deterministic: return std::exp(-r * param_);
    case Kind::zero: return 1.0;
    }
    return 1.0;
}

std::complex<double> JumpLaw::laplace(std::complex<double> r) const {
    switch (kind_) {
    case Kind::exponential: return param_ / (param_ + r);
    case Kind::deterministic: return std::exp(-r * param_);
    case Kind::zero: return {1.0, 0.0};
    }
    return {1.0, 0.0};
}

std::complex<double> JumpLaw::fourier(double omega, Direction dir) const {
    const std::complex<double> i(0.0, 1.0);
    // Plus-direction jumps displace by +J, so the characteristic factor is
    // E[exp(+i omega J)] = hhat(-i omega); Minus-direction jumps displace by
    // -J, giving hhat(+i omega).
    return laplace(dir == Direction::plus ? -i * omega : i * omega);
}

double JumpLaw::sample(Rng& rng) const {
    switch (kind_) {
    case Kind::exponential: return rng.exponential(param_);
    case Kind::deterministic: return param_;
    case Kind::zero: return 0.0;
    }
    return 0.0;
}

std::string JumpLaw::describe() const {
    switch (kind_) {
    case Kind::exponential: return "exp(gamma=" + std::to_string(param_) + ")";
    case Kind::deterministic: return "deterministic(size=" + std::to_string(param_) + ")";
    case Kind::zero: return "zero";
    }
    return "?";
}

} // namespace resetwalk
