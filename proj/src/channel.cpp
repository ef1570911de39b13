#include "ldpc/channel.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ldpc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double gauss_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

ChannelModel ChannelModel::bec(double erasure_prob) {
    if (!(erasure_prob >= 0.0 && erasure_prob <= 1.0))
        throw std::invalid_argument("bec: erasure probability outside [0,1]");
    return ChannelModel(ChannelKind::Bec, erasure_prob);
}

ChannelModel ChannelModel::bsc(double crossover_prob) {
    if (!(crossover_prob >= 0.0 && crossover_prob <= 0.5))
        throw std::invalid_argument("bsc: crossover probability outside [0,0.5]");
    return ChannelModel(ChannelKind::Bsc, crossover_prob);
}

ChannelModel ChannelModel::biawgn(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("biawgn: sigma must be positive");
    return ChannelModel(ChannelKind::BiAwgn, sigma);
}

ChannelModel ChannelModel::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("channel spec \"" + spec + "\": expected name:param");
    std::string name = spec.substr(0, colon);
    double value = 0.0;
    try {
        std::size_t pos = 0;
        value = std::stod(spec.substr(colon + 1), &pos);
        if (pos != spec.size() - colon - 1) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
        throw std::invalid_argument("channel spec \"" + spec + "\": bad parameter");
    }
    if (name == "bec") return bec(value);
    if (name == "bsc") return bsc(value);
    if (name == "biawgn") return biawgn(value);
    throw std::invalid_argument("channel spec \"" + spec + "\": unknown channel \"" + name +
                                "\"");
}

std::string ChannelModel::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case ChannelKind::Bec: os << "bec:"; break;
        case ChannelKind::Bsc: os << "bsc:"; break;
        case ChannelKind::BiAwgn: os << "biawgn:"; break;
    }
    os << param_;
    return os.str();
}

double ChannelModel::bhattacharyya() const {
    switch (kind_) {
        case ChannelKind::Bec:
            return param_;
        case ChannelKind::Bsc:
            return 2.0 * std::sqrt(param_ * (1.0 - param_));
        case ChannelKind::BiAwgn:
            return std::exp(-1.0 / (2.0 * param_ * param_));
    }
    return 0.0;
}

double ChannelModel::uncoded_error_prob() const {
    switch (kind_) {
        case ChannelKind::Bec:
            return param_ / 2.0;
        case ChannelKind::Bsc:
            // p = 0.5 collapses both atoms onto LLR 0, half of which counts.
            return param_ == 0.5 ? 0.5 : param_;
        case ChannelKind::BiAwgn:
            return gauss_cdf(-1.0 / param_);
    }
    return 0.0;
}

QuantizedDensity ChannelModel::llr_density(const QuantizationParams& q) const {
    q.validate();
    int half_bins = q.half_bins();
    switch (kind_) {
        case ChannelKind::Bec: {
            QuantizedDensity d(q.delta, half_bins);
            d.mass(d.zero_index()) = param_;
            d.atom_pos_inf() = 1.0 - param_;
            return d;
        }
        case ChannelKind::Bsc: {
            double p = param_;
            if (p == 0.0) return QuantizedDensity::point_mass_pos_inf(q.delta, half_bins);
            if (p == 0.5) return QuantizedDensity::point_mass_at_zero(q.delta, half_bins);
            // Re-derive the grid so the channel atoms at +-log((1-p)/p) are
            // exact grid points; check updates then snap onto the same grid.
            double llr = std::log((1.0 - p) / p);
            long sub = std::llround(llr / q.delta);
            if (sub < 1) sub = 1;
            double delta = llr / static_cast<double>(sub);
            int bins = static_cast<int>(std::ceil(q.m_max / delta - 1e-9));
            if (bins < sub) bins = static_cast<int>(sub);
            QuantizedDensity d(delta, bins);
            d.mass(d.zero_index() + static_cast<std::size_t>(sub)) = 1.0 - p;
            d.mass(d.zero_index() - static_cast<std::size_t>(sub)) = p;
            return d;
        }
        case ChannelKind::BiAwgn: {
            double sigma = param_;
            double mu = 2.0 / (sigma * sigma);
            double sd = 2.0 / sigma;
            QuantizedDensity d(q.delta, half_bins);
            double lo_edge = (-q.m_max - q.delta / 2.0 - mu) / sd;
            double hi_edge = (q.m_max + q.delta / 2.0 - mu) / sd;
            double tail = gauss_cdf(lo_edge) + (1.0 - gauss_cdf(hi_edge));
            if (tail > 1e-12)
                throw std::runtime_error(
                    "biawgn llr_density: grid range too small, truncated mass " +
                    std::to_string(tail));
            double prev = gauss_cdf(lo_edge);
            for (std::size_t i = 0; i < d.size(); ++i) {
                double upper = (d.m_at(i) + q.delta / 2.0 - mu) / sd;
                double cur = gauss_cdf(upper);
                d.mass(i) = cur - prev;
                prev = cur;
            }
            d.mass(0) += gauss_cdf(lo_edge);
            d.mass(d.size() - 1) += 1.0 - prev;
            d.normalize();
            return d;
        }
    }
    throw std::logic_error("unreachable channel kind");
}

double ChannelModel::sample_llr(RandomStream& rng) const {
    switch (kind_) {
        case ChannelKind::Bec:
            return rng.uniform01() < param_ ? 0.0 : kInf;
        case ChannelKind::Bsc: {
            if (param_ == 0.0) return kInf;
            double llr = std::log((1.0 - param_) / param_);
            return rng.uniform01() < param_ ? -llr : llr;
        }
        case ChannelKind::BiAwgn: {
            double y = 1.0 + param_ * rng.normal();
            return 2.0 * y / (param_ * param_);
        }
    }
    return 0.0;
}

}  // namespace ldpc
