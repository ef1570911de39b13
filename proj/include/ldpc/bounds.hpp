#ifndef LDPC_BOUNDS_HPP
#define LDPC_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ldpc/degree.hpp"

namespace ldpc {

enum class TrajectoryKind { MsUpper, SpLower, BecDe, DeEdge, DeNode };

std::string trajectory_kind_name(TrajectoryKind kind);

// Per-iteration sequence of a tracked scalar, indexed from iteration 0.
// MsUpper values are a union bound: they may exceed 1 and are stored
// unclipped; vacuous_after marks the first iteration where that happens.
struct BoundTrajectory {
    TrajectoryKind kind = TrajectoryKind::MsUpper;
    std::vector<double> values;
    std::string ensemble_id;
    double channel_figure = 0.0;  // D, P0 or eps, depending on kind
    std::optional<std::size_t> vacuous_after;

    std::size_t iterations() const { return values.empty() ? 0 : values.size() - 1; }
    double operator[](std::size_t l) const { return values[l]; }
    void mark_vacuous();  // scans values and sets vacuous_after
};

// Min-sum union bound: z_0 = D, z_l = lambda(rho'(1) z_{l-1}).
// With root_inclusive the per-level factor for the root bit is kept:
// z_l = D * lambda(rho'(1) z_{l-1}). Arguments beyond 1 are evaluated on
// the polynomial as-is.
BoundTrajectory ms_upper_bound(const Ensemble& ens, double bhattacharyya,
                               std::size_t iterations, bool root_inclusive = false);

// Sum-product lower bound: b_0 = P0, b_l = P0 * lambda(1 - rho(1 - 2 b_{l-1})).
BoundTrajectory sp_lower_bound(const Ensemble& ens, double uncoded_error_prob,
                               std::size_t iterations);

// BEC density evolution: x_0 = eps, x_l = eps * lambda(1 - rho(1 - x_{l-1})).
BoundTrajectory bec_de(const Ensemble& ens, double erasure_prob, std::size_t iterations);

struct BisectionResult {
    double value = 0.0;  // bracket midpoint
    double lo = 0.0;     // largest parameter seen to converge
    double hi = 0.0;     // smallest parameter seen not to
    int steps = 0;
};

// sup{D : the ms_upper_bound trajectory reaches 0}, located by bisection to
// bracket width tol. Convergence of a trajectory means a value below 1e-10
// while nonincreasing; the iteration cap escalates 200 -> 12800 because the
// transient near the threshold is unboundedly slow.
BisectionResult bhattacharyya_threshold(const Ensemble& ens, double tol);

// sup{eps : the bec_de trajectory reaches 0}, same bisection machinery.
BisectionResult bec_threshold(const Ensemble& ens, double tol);

// Expected weight enumerator of the reduced tree codebook after l levels,
// truncated at max_weight. coeffs[w] is the expected number of codewords of
// weight w.
struct WeightEnumerator {
    std::vector<double> coeffs;
    int max_weight = 0;
    bool truncated = false;  // some recursion step spilled past max_weight

    double evaluate(double x) const;
};

// Paper form: N_0 = x, N_l = lambda(rho'(1) N_{l-1}).
// Root-inclusive variant: each level is additionally multiplied by x, so the
// root bit's own weight is counted (this is the variant the exhaustive tree
// enumeration reproduces).
WeightEnumerator weight_enumerator(const Ensemble& ens, std::size_t level, int max_weight,
                                   bool root_inclusive = false);

}  // namespace ldpc

#endif
