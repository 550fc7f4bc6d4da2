#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steersim/linalg.hpp"

namespace steersim {

enum class Sign { plus, minus };

/// Selects between the two published forms of a constant: `paper` is the
/// printed closed form, `derived` is the normalization-corrected one. The
/// verifier reports their (lawful) disagreement; see verify.hpp.
enum class Variant { paper, derived };

/// O(1)-storage state vector of the shape
///   head * |0> + spike * |spike_index> + tail * sum_{k in 1..n-1, k != spike_index} |k>.
/// Valid for arbitrarily large n: tail multiplicities enter inner products
/// as exact integers converted to double late. The same layout serves both
/// the beta-side families (computational basis) and the alpha-side families
/// (over the measurement eigenbasis, head slot unused and zero).
struct StructuredKet {
    std::int64_t dim = 0;
    double head = 0.0;
    std::optional<std::int64_t> spike_index;  // in 1..dim-1 when present
    double spike = 0.0;                       // meaningful iff spike_index is set
    double tail = 0.0;
};

/// head^2 + spike^2 + (n-2) tail^2, or head^2 + (n-1) tail^2 without a spike.
double norm_sq(const StructuredKet& x);

/// Throws unless x is structurally valid and unit norm within 1e-12.
void validate(const StructuredKet& x);

/// Dense expansion; requires dim <= dense_cap.
Ket to_dense(const StructuredKet& x, std::int64_t dense_cap = kDefaultDenseCap);

/// Closed-form inner product, O(1) in the dimension. Matches the dense
/// inner product to 1e-12 wherever both are representable.
double structured_inner(const StructuredKet& x, const StructuredKet& y);

/// Pure state of the composite system alpha (x) beta: an n x n coefficient
/// matrix C with |Psi> = sum_{a,b} C[a][b] |a>|b>, Frobenius norm 1.
class BipartiteState {
public:
    /// coefficients is row-major with length dim*dim; Frobenius norm is
    /// validated to 1e-12.
    BipartiteState(std::int64_t dim, std::vector<double> coefficients);

    std::int64_t dim() const { return dim_; }
    double operator()(std::int64_t a, std::int64_t b) const {
        return coeffs_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dim_) +
                       static_cast<std::size_t>(b)];
    }

private:
    std::int64_t dim_;
    std::vector<double> coeffs_;
};

/// Coefficients of a plus-family state re-expanded over the minus-family
/// basis: diag on the matching element, off on the other n-2 regular
/// elements, edge on the edge element.
struct ExpansionCoefficients {
    double diag;  // (2-n)/n
    double off;   // 2/n
    double edge;  // sqrt(2/n)
};

// --- State families. All constructors require n >= 3 (the minus-family
// --- normalizer is singular at n = 2) and produce unit-norm values.

/// (|0> +/- |i>)/sqrt(2) for i in 1..n-1.
StructuredKet phi(std::int64_t n, std::int64_t i, Sign sign);

/// The edge member completing each family to a (nonorthogonal) basis:
/// (|0> -+ sum_{k=1..n-1} |k>)/sqrt(n). Note the inverted tail sign: the
/// plus label carries the minus tail and vice versa.
StructuredKet phi_edge(std::int64_t n, Sign sign);

/// Normalizer of the tilde alpha states: 1/sqrt(1 - 4/n^2).
double c_minus(std::int64_t n);

/// Collapse-state normalizer. The paper variant is the printed closed form
/// sqrt(n(n-1)(n+2)/(n^2+2)); the derived variant sqrt((n-1)(n+2)/n) is the
/// reciprocal norm of the projected state and is the one that actually
/// normalizes it at finite n.
double c_prime(std::int64_t n, Variant variant);

/// Tilted measurement direction over the alpha eigenbasis:
/// c_minus * ((2-n)/n |i> + (2/n) sum_{k != i} |k>), head slot zero.
StructuredKet alpha_tilde(std::int64_t n, std::int64_t i);

/// Uniform direction over the alpha eigenbasis: sum_{k=1..n-1} |k>/sqrt(n-1).
StructuredKet alpha_tilde_edge(std::int64_t n);

/// Collapse state reached by projecting the alpha side onto alpha_tilde:
/// proportional to (n-2)|0> + (2-n)|i> + 2 sum_{k != i} |k>, normalized.
StructuredKet phi_tilde(std::int64_t n, std::int64_t i);

ExpansionCoefficients expand_in_B_minus(std::int64_t n, std::int64_t i);

/// The entangled state sum_{i=1..n-1} |alpha_i>|phi_{i+}> / sqrt(n-1),
/// as a dense coefficient matrix (row 0 is zero).
BipartiteState omega(std::int64_t n, std::int64_t dense_cap = kDefaultDenseCap);

/// The same state assembled from the minus-family expansion
/// (1/(c_minus sqrt(n-1))) sum_i alpha_tilde_i (x) phi_{i-}
///   + sqrt(2/n) alpha_tilde_edge (x) phi_edge_minus.
/// Equals omega(n) elementwise to 1e-12.
BipartiteState omega_minus_form(std::int64_t n, std::int64_t dense_cap = kDefaultDenseCap);

}  // namespace steersim
