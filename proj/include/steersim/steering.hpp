#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steersim/linalg.hpp"
#include "steersim/states.hpp"

namespace steersim {

/// Result of projecting the alpha side: the outcome probability and the
/// normalized post-measurement state of beta. Outcomes below the
/// impossibility threshold carry no collapsed state (normalizing a
/// vanishing vector only amplifies rounding noise).
struct Outcome {
    double probability = 0.0;
    std::optional<Ket> collapsed;
};

struct StructuredOutcome {
    double probability = 0.0;
    StructuredKet collapsed;
};

/// Complete projective measurement on alpha: an orthonormal basis with an
/// integer eigenvalue label per eigenstate.
struct Measurement {
    std::int64_t dim = 0;
    std::vector<Ket> basis;
    std::vector<std::int64_t> labels;
};

/// Probabilities below this are treated as impossible in the dense path.
inline constexpr double kImpossibleProbability = 1e-15;
/// Structured probabilities scale like 1/n and stay legitimate far below
/// the dense threshold.
inline constexpr double kImpossibleProbabilityStructured = 1e-30;

/// Projects the alpha side of psi onto a. Probability is ||(<a| (x) I)|psi>||^2
/// and the collapsed beta state is that vector normalized; both are invariant
/// under a -> -a (up to the collapsed state's global sign). Throws
/// "impossible outcome" when the projection annihilates the state.
Outcome project_alpha(const BipartiteState& psi, const Ket& a);

/// Applies a complete measurement: one Outcome per basis vector, in basis
/// order. Probabilities sum to 1 within 1e-12. Throws "invalid measurement"
/// if the basis is not orthonormal to 1e-10.
std::vector<Outcome> measure_complete(const BipartiteState& psi, const Measurement& m);

/// The canonical alpha measurement: computational eigenbasis, label k for
/// the k-th eigenstate.
Measurement build_m_plus(std::int64_t n, std::int64_t dense_cap = kDefaultDenseCap);

/// Closed-form projection of the entangled state at dimension n onto a
/// structured alpha direction (over the alpha eigenbasis, indices 1..n-1;
/// the head slot never fires because the state has no weight there).
/// Agrees with project_alpha(omega(n), .) to 1e-12 on dense-representable n
/// and remains O(1) for arbitrarily large n.
StructuredOutcome steer_structured(std::int64_t n, const StructuredKet& a);

}  // namespace steersim
