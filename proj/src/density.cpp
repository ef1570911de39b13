#include "ldpc/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ldpc {

int QuantizationParams::half_bins() const {
    validate();
    return static_cast<int>(std::llround(m_max / delta));
}

void QuantizationParams::validate() const {
    if (!(delta > 0.0) || !(m_max > 0.0))
        throw std::invalid_argument("quantization: delta and m_max must be positive");
    double ratio = m_max / delta;
    double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 * rounded)
        throw std::invalid_argument("quantization: m_max/delta must be an integer");
    if (rounded < 16.0)
        throw std::invalid_argument("quantization: m_max/delta must be >= 16, got " +
                                    std::to_string(rounded));
}

QuantizedDensity::QuantizedDensity(double delta, int half_bins)
    : delta_(delta),
      half_bins_(half_bins),
      mass_(static_cast<std::size_t>(2 * half_bins + 1), 0.0) {
    if (!(delta > 0.0) || half_bins < 1)
        throw std::invalid_argument("density: bad grid parameters");
}

QuantizedDensity QuantizedDensity::point_mass_at_zero(double delta, int half_bins) {
    QuantizedDensity d(delta, half_bins);
    d.mass(d.zero_index()) = 1.0;
    return d;
}

QuantizedDensity QuantizedDensity::point_mass_pos_inf(double delta, int half_bins) {
    QuantizedDensity d(delta, half_bins);
    d.atom_pos_inf() = 1.0;
    return d;
}

double QuantizedDensity::total_mass() const {
    double sum = 0.0;
    for (double m : mass_) sum += m;
    return sum + atom_pos_inf_ + atom_neg_inf_;
}

void QuantizedDensity::normalize() {
    double sum = total_mass();
    if (!(sum > 0.0)) throw std::runtime_error("density: cannot normalize zero mass");
    if (sum == 1.0) return;
    for (double& m : mass_) m /= sum;
    atom_pos_inf_ /= sum;
    atom_neg_inf_ /= sum;
}

double QuantizedDensity::error_prob() const {
    double below = 0.0;
    for (std::size_t i = 0; i < zero_index(); ++i) below += mass_[i];
    return below + mass_[zero_index()] / 2.0 + atom_neg_inf_;
}

double QuantizedDensity::expected_tanh_half() const {
    double acc = 0.0;
    std::size_t k0 = zero_index();
    for (std::size_t i = 0; i < mass_.size(); ++i) {
        if (i == k0) continue;  // tanh(0) contributes nothing
        if (mass_[i] == 0.0) continue;
        acc += std::tanh(std::abs(m_at(i)) / 2.0) * mass_[i];
    }
    return acc + atom_pos_inf_ + atom_neg_inf_;
}

double QuantizedDensity::symmetry_residual() const {
    double worst = atom_neg_inf_;
    std::size_t k0 = zero_index();
    for (int k = 1; k <= half_bins_; ++k) {
        double m = k * delta_;
        double pos = mass_[k0 + static_cast<std::size_t>(k)];
        double neg = mass_[k0 - static_cast<std::size_t>(k)];
        double r = std::abs(neg - std::exp(-m) * pos);
        if (r > worst) worst = r;
    }
    return worst;
}

bool QuantizedDensity::is_erasure_like() const {
    if (atom_neg_inf_ != 0.0) return false;
    std::size_t k0 = zero_index();
    for (std::size_t i = 0; i < mass_.size(); ++i) {
        if (i != k0 && mass_[i] != 0.0) return false;
    }
    return true;
}

}  // namespace ldpc
