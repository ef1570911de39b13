#include "ldpc/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace ldpc {

namespace {

constexpr double kConvergenceTarget = 1e-10;
// Iteration budget for deciding convergence. The schedule starts at 200 and
// doubles to 12800; with the monotone-orbit early exits below, extending an
// undecided run is identical to restarting it with the next cap, so a single
// loop to the final cap implements the whole schedule.
constexpr int kMaxCap = 12800;

}  // namespace

std::string trajectory_kind_name(TrajectoryKind kind) {
    switch (kind) {
        case TrajectoryKind::MsUpper: return "MS_UPPER";
        case TrajectoryKind::SpLower: return "SP_LOWER";
        case TrajectoryKind::BecDe: return "BEC_DE";
        case TrajectoryKind::DeEdge: return "DE_EDGE";
        case TrajectoryKind::DeNode: return "DE_NODE";
    }
    return "?";
}

void BoundTrajectory::mark_vacuous() {
    vacuous_after.reset();
    for (std::size_t l = 0; l < values.size(); ++l) {
        if (values[l] > 1.0) {
            vacuous_after = l;
            return;
        }
    }
}

BoundTrajectory ms_upper_bound(const Ensemble& ens, double bhattacharyya,
                               std::size_t iterations, bool root_inclusive) {
    if (!(bhattacharyya >= 0.0 && bhattacharyya <= 1.0))
        throw std::invalid_argument("ms_upper_bound: D outside [0,1]");
    BoundTrajectory t;
    t.kind = TrajectoryKind::MsUpper;
    t.ensemble_id = ens.label();
    t.channel_figure = bhattacharyya;
    t.values.reserve(iterations + 1);
    double scale = ens.rho().derivative_at_one();
    double z = bhattacharyya;
    t.values.push_back(z);
    for (std::size_t l = 1; l <= iterations; ++l) {
        z = ens.lambda().eval_unchecked(scale * z);
        if (root_inclusive) z *= bhattacharyya;
        t.values.push_back(z);
    }
    t.mark_vacuous();
    return t;
}

namespace {

// Shared arithmetic for the SP lower bound and BEC DE. Keeping one expression
// makes 2*sp_lower(eps/2) and bec_de(eps) agree bit for bit: the recursions
// differ only by an exact factor-of-two scaling of the state.
inline double sp_step(const Ensemble& ens, double figure, double arg) {
    return figure * ens.lambda().eval(1.0 - ens.rho().eval(1.0 - arg));
}

}  // namespace

BoundTrajectory sp_lower_bound(const Ensemble& ens, double uncoded_error_prob,
                               std::size_t iterations) {
    if (!(uncoded_error_prob >= 0.0 && uncoded_error_prob <= 0.5))
        throw std::invalid_argument("sp_lower_bound: P0 outside [0,0.5]");
    BoundTrajectory t;
    t.kind = TrajectoryKind::SpLower;
    t.ensemble_id = ens.label();
    t.channel_figure = uncoded_error_prob;
    t.values.reserve(iterations + 1);
    double b = uncoded_error_prob;
    t.values.push_back(b);
    for (std::size_t l = 1; l <= iterations; ++l) {
        b = sp_step(ens, uncoded_error_prob, 2.0 * b);
        t.values.push_back(b);
    }
    return t;
}

BoundTrajectory bec_de(const Ensemble& ens, double erasure_prob, std::size_t iterations) {
    if (!(erasure_prob >= 0.0 && erasure_prob <= 1.0))
        throw std::invalid_argument("bec_de: eps outside [0,1]");
    BoundTrajectory t;
    t.kind = TrajectoryKind::BecDe;
    t.ensemble_id = ens.label();
    t.channel_figure = erasure_prob;
    t.values.reserve(iterations + 1);
    double x = erasure_prob;
    t.values.push_back(x);
    for (std::size_t l = 1; l <= iterations; ++l) {
        x = sp_step(ens, erasure_prob, x);
        t.values.push_back(x);
    }
    return t;
}

namespace {

// The recursions here are monotone maps, so orbits are monotone: once a step
// fails to decrease, the trajectory never reaches 0. Convergence is a value
// below the target that is still decreasing.
template <typename Step>
bool trajectory_converges(Step step, double start) {
    double x = start;
    for (int l = 1; l <= kMaxCap; ++l) {
        double next = step(x);
        if (next < kConvergenceTarget && next <= x) return true;
        if (next >= x) return false;  // monotone orbit stalled or growing
        x = next;
    }
    return false;
}

template <typename Convergent>
BisectionResult bisect_sup(Convergent convergent, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("threshold: tol must be positive");
    BisectionResult r;
    r.lo = 0.0;
    r.hi = 1.0;
    if (!convergent(0.0)) {
        r.hi = 0.0;
        r.value = 0.0;
        return r;
    }
    if (convergent(1.0)) {
        r.lo = 1.0;
        r.value = 1.0;
        return r;
    }
    while (r.hi - r.lo > tol) {
        double mid = 0.5 * (r.lo + r.hi);
        if (convergent(mid))
            r.lo = mid;
        else
            r.hi = mid;
        ++r.steps;
    }
    r.value = 0.5 * (r.lo + r.hi);
    return r;
}

}  // namespace

BisectionResult bhattacharyya_threshold(const Ensemble& ens, double tol) {
    double scale = ens.rho().derivative_at_one();
    auto convergent = [&](double d) {
        return trajectory_converges(
            [&](double z) { return ens.lambda().eval_unchecked(scale * z); }, d);
    };
    return bisect_sup(convergent, tol);
}

BisectionResult bec_threshold(const Ensemble& ens, double tol) {
    auto convergent = [&](double eps) {
        return trajectory_converges([&](double x) { return sp_step(ens, eps, x); }, eps);
    };
    return bisect_sup(convergent, tol);
}

double WeightEnumerator::evaluate(double x) const {
    double acc = 0.0;
    for (std::size_t w = coeffs.size(); w-- > 0;) acc = acc * x + coeffs[w];
    return acc;
}

namespace {

struct TruncPoly {
    std::vector<double> c;  // c[w] is the coefficient of x^w
    bool truncated = false;
};

TruncPoly multiply(const TruncPoly& a, const TruncPoly& b, int max_weight) {
    TruncPoly out;
    out.c.assign(static_cast<std::size_t>(max_weight) + 1, 0.0);
    out.truncated = a.truncated || b.truncated;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0.0) continue;
            if (i + j > static_cast<std::size_t>(max_weight)) {
                out.truncated = true;
                break;  // j only grows from here
            }
            out.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return out;
}

// lambda applied to a polynomial argument: sum_i lambda_i P^{i-1}.
TruncPoly apply_mixture(const DegreePolynomial& lambda, const TruncPoly& arg, int max_weight) {
    TruncPoly out;
    out.c.assign(static_cast<std::size_t>(max_weight) + 1, 0.0);
    out.truncated = false;
    TruncPoly power;  // arg^0
    power.c.assign(static_cast<std::size_t>(max_weight) + 1, 0.0);
    power.c[0] = 1.0;
    for (int degree = 1; degree <= lambda.max_degree(); ++degree) {
        double weight = lambda.coeff(degree);
        if (weight > 0.0) {
            for (std::size_t w = 0; w < out.c.size(); ++w) out.c[w] += weight * power.c[w];
            out.truncated = out.truncated || power.truncated;
        }
        if (degree < lambda.max_degree()) power = multiply(power, arg, max_weight);
    }
    return out;
}

}  // namespace

WeightEnumerator weight_enumerator(const Ensemble& ens, std::size_t level, int max_weight,
                                   bool root_inclusive) {
    if (max_weight < 1) throw std::invalid_argument("weight_enumerator: max_weight must be >= 1");
    double scale = ens.rho().derivative_at_one();
    TruncPoly n;  // N_0(x) = x
    n.c.assign(static_cast<std::size_t>(max_weight) + 1, 0.0);
    n.c[1] = 1.0;
    for (std::size_t l = 1; l <= level; ++l) {
        TruncPoly scaled = n;
        for (double& v : scaled.c) v *= scale;
        n = apply_mixture(ens.lambda(), scaled, max_weight);
        if (root_inclusive) {
            // multiply by x: shift weights up by one
            bool spill = n.c.back() != 0.0;
            for (std::size_t w = n.c.size(); w-- > 1;) n.c[w] = n.c[w - 1];
            n.c[0] = 0.0;
            n.truncated = n.truncated || spill;
        }
    }
    WeightEnumerator out;
    out.coeffs = std::move(n.c);
    out.max_weight = max_weight;
    out.truncated = n.truncated;
    return out;
}

}  // namespace ldpc
