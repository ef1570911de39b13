#ifndef LDPC_DENSITY_HPP
#define LDPC_DENSITY_HPP

#include <cstddef>
#include <vector>

namespace ldpc {

// Uniform LLR grid: spacing delta, half-range m_max, with m_max/delta an
// integer >= 16 so the grid always contains 0 and the endpoints exactly.
struct QuantizationParams {
    double delta = 0.02;
    double m_max = 40.0;

    int half_bins() const;  // m_max / delta, validated
    void validate() const;  // throws std::invalid_argument on a bad grid
};

// Discretized symmetric LLR density: point masses on the grid
// {-K*delta, ..., -delta, 0, delta, ..., K*delta} plus atoms at +inf/-inf.
// Index i of mass() corresponds to m = (i - K) * delta.
class QuantizedDensity {
  public:
    QuantizedDensity(double delta, int half_bins);

    static QuantizedDensity point_mass_at_zero(double delta, int half_bins);
    static QuantizedDensity point_mass_pos_inf(double delta, int half_bins);

    double delta() const { return delta_; }
    int half_bins() const { return half_bins_; }
    double m_max() const { return delta_ * half_bins_; }
    std::size_t size() const { return mass_.size(); }
    double m_at(std::size_t i) const {
        return (static_cast<double>(i) - half_bins_) * delta_;
    }
    std::size_t zero_index() const { return static_cast<std::size_t>(half_bins_); }

    double mass(std::size_t i) const { return mass_[i]; }
    double& mass(std::size_t i) { return mass_[i]; }
    const std::vector<double>& masses() const { return mass_; }
    double atom_pos_inf() const { return atom_pos_inf_; }
    double atom_neg_inf() const { return atom_neg_inf_; }
    double& atom_pos_inf() { return atom_pos_inf_; }
    double& atom_neg_inf() { return atom_neg_inf_; }

    double total_mass() const;
    // Scales everything so total_mass() becomes exactly the computed 1.
    void normalize();

    // P(M < 0) + P(M = 0)/2 + mass at -inf. The half weight on the zero atom
    // is the fair-coin tie convention; it is what makes the erasure channel's
    // uncoded error come out as eps/2.
    double error_prob() const;

    // E[tanh(|M|/2)] with tanh(inf/2) = 1.
    double expected_tanh_half() const;

    // max over positive grid points of |g(-m) - e^{-m} g(m)| on the masses,
    // plus any mass at -inf (a symmetric density has none).
    double symmetry_residual() const;

    // True when all mass sits on {0, +inf}: the erasure-channel shape, which
    // the update rules handle with exact atom arithmetic.
    bool is_erasure_like() const;

    bool same_grid(const QuantizedDensity& other) const {
        return delta_ == other.delta_ && half_bins_ == other.half_bins_;
    }

  private:
    double delta_;
    int half_bins_;
    std::vector<double> mass_;
    double atom_pos_inf_ = 0.0;
    double atom_neg_inf_ = 0.0;
};

}  // namespace ldpc

#endif
