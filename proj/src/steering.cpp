#include "steersim/steering.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace steersim {

namespace {

constexpr double kOrthonormalityTol = 1e-10;

std::vector<double> project_unnormalized(const BipartiteState& psi, const Ket& a) {
    const auto n = static_cast<std::size_t>(psi.dim());
    std::vector<double> u(n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        const double ar = a[r];
        if (ar == 0.0) continue;
        for (std::size_t b = 0; b < n; ++b) {
            u[b] += ar * psi(static_cast<std::int64_t>(r), static_cast<std::int64_t>(b));
        }
    }
    return u;
}

double sum_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

}  // namespace

Outcome project_alpha(const BipartiteState& psi, const Ket& a) {
    if (psi.dim() != a.dim()) throw std::invalid_argument("incompatible dimensions");
    std::vector<double> u = project_unnormalized(psi, a);
    const double p = sum_sq(u);
    if (p < kImpossibleProbability) throw std::runtime_error("impossible outcome");
    return Outcome{p, Ket::normalized(std::move(u))};
}

std::vector<Outcome> measure_complete(const BipartiteState& psi, const Measurement& m) {
    const std::int64_t n = psi.dim();
    if (m.dim != n || static_cast<std::int64_t>(m.basis.size()) != n ||
        m.labels.size() != m.basis.size()) {
        throw std::invalid_argument("invalid measurement");
    }
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
        for (std::size_t k = j; k < m.basis.size(); ++k) {
            const double expected = j == k ? 1.0 : 0.0;
            if (std::abs(inner(m.basis[j], m.basis[k]) - expected) > kOrthonormalityTol) {
                throw std::invalid_argument("invalid measurement");
            }
        }
    }

    std::vector<Outcome> outcomes;
    outcomes.reserve(m.basis.size());
    for (const Ket& a : m.basis) {
        std::vector<double> u = project_unnormalized(psi, a);
        const double p = sum_sq(u);
        if (p < kImpossibleProbability) {
            outcomes.push_back(Outcome{p, std::nullopt});
        } else {
            outcomes.push_back(Outcome{p, Ket::normalized(std::move(u))});
        }
    }
    return outcomes;
}

Measurement build_m_plus(std::int64_t n, std::int64_t dense_cap) {
    if (n < 3) throw std::invalid_argument("degenerate dimension: n must be >= 3");
    if (n > dense_cap) throw std::invalid_argument("dense cap exceeded: use the structured path");
    Measurement m;
    m.dim = n;
    m.basis.reserve(static_cast<std::size_t>(n));
    m.labels.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(k)] = 1.0;
        m.basis.emplace_back(std::move(e));
        m.labels.push_back(k);
    }
    return m;
}

StructuredOutcome steer_structured(std::int64_t n, const StructuredKet& a) {
    if (n < 3) throw std::invalid_argument("degenerate dimension: n must be >= 3");
    if (a.dim != n) throw std::invalid_argument("incompatible dimensions");

    // (<a| (x) I)|Omega> has beta component sum_k a_k / sqrt(2(n-1)) on |0>
    // and a_k / sqrt(2(n-1)) on |k>, with k running over 1..n-1.
    const double s = a.spike_index ? a.spike : 0.0;
    const double t = a.tail;
    const double regular_count = static_cast<double>(a.spike_index ? n - 2 : n - 1);
    const double total = a.spike_index ? s + regular_count * t : regular_count * t;
    const double side_sq = a.spike_index ? s * s + regular_count * t * t
                                         : regular_count * t * t;

    const double unnorm_sq = total * total + side_sq;
    const double p = unnorm_sq / (2.0 * static_cast<double>(n - 1));
    if (p < kImpossibleProbabilityStructured) throw std::runtime_error("impossible outcome");

    const double inv = 1.0 / std::sqrt(unnorm_sq);
    StructuredKet collapsed{n, total * inv, a.spike_index,
                            a.spike_index ? s * inv : 0.0, t * inv};
    return StructuredOutcome{p, collapsed};
}

}  // namespace steersim
