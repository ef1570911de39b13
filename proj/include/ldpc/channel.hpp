#ifndef LDPC_CHANNEL_HPP
#define LDPC_CHANNEL_HPP

#include <string>

#include "ldpc/density.hpp"
#include "ldpc/rng.hpp"

namespace ldpc {

enum class ChannelKind { Bec, Bsc, BiAwgn };

// Memoryless binary-input output-symmetric channel. All LLR-level
// quantities are under the all-zero codeword; the BiAWGN maps bit 0 to +1
// and bit 1 to -1 with unit signal energy, so LLR = 2y/sigma^2.
class ChannelModel {
  public:
    static ChannelModel bec(double erasure_prob);
    static ChannelModel bsc(double crossover_prob);
    static ChannelModel biawgn(double sigma);
    // "bec:0.3", "bsc:0.1", "biawgn:1.0"
    static ChannelModel parse(const std::string& spec);

    ChannelKind kind() const { return kind_; }
    double param() const { return param_; }
    std::string to_string() const;

    // Bhattacharyya parameter D = integral of sqrt(f(y|0) f(y|1)).
    double bhattacharyya() const;

    // P(LLR < 0 | x=0) + P(LLR = 0 | x=0)/2.
    double uncoded_error_prob() const;

    // Quantized LLR density under x=0. BEC and BSC are exact atom densities
    // (the BSC rides a grid re-derived from the same params so that its atoms
    // land on grid points); BiAWGN is bin-integrated on the grid and throws
    // if more than 1e-12 of mass falls outside [-m_max, m_max].
    QuantizedDensity llr_density(const QuantizationParams& q) const;

    // One draw from the all-zero LLR law. May return +infinity (BEC).
    double sample_llr(RandomStream& rng) const;

  private:
    ChannelModel(ChannelKind kind, double param) : kind_(kind), param_(param) {}

    ChannelKind kind_;
    double param_;
};

}  // namespace ldpc

#endif
