#include "steersim/states.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace steersim {

namespace {

constexpr double kNormTol = 1e-12;

void require_dim(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("degenerate dimension: n must be >= 3");
}

void require_index(std::int64_t n, std::int64_t i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("index out of range");
}

void require_dense(std::int64_t n, std::int64_t dense_cap) {
    if (n > dense_cap) {
        throw std::invalid_argument("dense cap exceeded: use the structured path");
    }
}

}  // namespace

double norm_sq(const StructuredKet& x) {
    if (x.spike_index) {
        return x.head * x.head + x.spike * x.spike +
               static_cast<double>(x.dim - 2) * x.tail * x.tail;
    }
    return x.head * x.head + static_cast<double>(x.dim - 1) * x.tail * x.tail;
}

void validate(const StructuredKet& x) {
    if (x.dim < 2) throw std::invalid_argument("structured ket dimension must be at least 2");
    if (x.spike_index && (*x.spike_index < 1 || *x.spike_index > x.dim - 1)) {
        throw std::invalid_argument("spike index out of range");
    }
    if (std::abs(norm_sq(x) - 1.0) > kNormTol) {
        throw std::invalid_argument("structured ket is not unit norm");
    }
}

Ket to_dense(const StructuredKet& x, std::int64_t dense_cap) {
    validate(x);
    require_dense(x.dim, dense_cap);
    std::vector<double> amps(static_cast<std::size_t>(x.dim), x.tail);
    amps[0] = x.head;
    if (x.spike_index) amps[static_cast<std::size_t>(*x.spike_index)] = x.spike;
    return Ket(std::move(amps));
}

double structured_inner(const StructuredKet& x, const StructuredKet& y) {
    if (x.dim != y.dim) throw std::invalid_argument("incompatible dimensions");
    const std::int64_t n = x.dim;
    double acc = x.head * y.head;
    if (x.spike_index && y.spike_index) {
        if (*x.spike_index == *y.spike_index) {
            acc += x.spike * y.spike + static_cast<double>(n - 2) * x.tail * y.tail;
        } else {
            acc += x.spike * y.tail + x.tail * y.spike +
                   static_cast<double>(n - 3) * x.tail * y.tail;
        }
    } else if (x.spike_index) {
        acc += x.spike * y.tail + static_cast<double>(n - 2) * x.tail * y.tail;
    } else if (y.spike_index) {
        acc += x.tail * y.spike + static_cast<double>(n - 2) * x.tail * y.tail;
    } else {
        acc += static_cast<double>(n - 1) * x.tail * y.tail;
    }
    return acc;
}

BipartiteState::BipartiteState(std::int64_t dim, std::vector<double> coefficients)
    : dim_(dim), coeffs_(std::move(coefficients)) {
    if (dim < 2) throw std::invalid_argument("bipartite dimension must be at least 2");
    if (coeffs_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
        throw std::invalid_argument("coefficient matrix has wrong size");
    }
    double s = 0.0;
    for (double c : coeffs_) s += c * c;
    if (std::abs(s - 1.0) > kNormTol) {
        throw std::invalid_argument("bipartite state is not unit norm");
    }
}

StructuredKet phi(std::int64_t n, std::int64_t i, Sign sign) {
    require_dim(n);
    require_index(n, i);
    const double r = 1.0 / std::sqrt(2.0);
    return StructuredKet{n, r, i, sign == Sign::plus ? r : -r, 0.0};
}

StructuredKet phi_edge(std::int64_t n, Sign sign) {
    require_dim(n);
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    return StructuredKet{n, r, std::nullopt, 0.0, sign == Sign::plus ? -r : r};
}

double c_minus(std::int64_t n) {
    require_dim(n);
    // 1/sqrt(1 - 4/n^2) in the cancellation-free form n/sqrt((n-2)(n+2)).
    return static_cast<double>(n) /
           std::sqrt(static_cast<double>(n - 2) * static_cast<double>(n + 2));
}

double c_prime(std::int64_t n, Variant variant) {
    require_dim(n);
    const double dn = static_cast<double>(n);
    if (variant == Variant::paper) {
        return std::sqrt(dn * (dn - 1.0) * (dn + 2.0) / (dn * dn + 2.0));
    }
    return std::sqrt((dn - 1.0) * (dn + 2.0) / dn);
}

StructuredKet alpha_tilde(std::int64_t n, std::int64_t i) {
    require_dim(n);
    require_index(n, i);
    const double c = c_minus(n);
    const double dn = static_cast<double>(n);
    return StructuredKet{n, 0.0, i, c * (2.0 - dn) / dn, c * 2.0 / dn};
}

StructuredKet alpha_tilde_edge(std::int64_t n) {
    require_dim(n);
    return StructuredKet{n, 0.0, std::nullopt, 0.0,
                         1.0 / std::sqrt(static_cast<double>(n - 1))};
}

StructuredKet phi_tilde(std::int64_t n, std::int64_t i) {
    require_dim(n);
    require_index(n, i);
    const double dn = static_cast<double>(n);
    const double head = std::sqrt((dn - 2.0) / (2.0 * dn));
    const double tail = std::sqrt(2.0 / (dn * (dn - 2.0)));
    return StructuredKet{n, head, i, -head, tail};
}

ExpansionCoefficients expand_in_B_minus(std::int64_t n, std::int64_t i) {
    require_dim(n);
    require_index(n, i);
    const double dn = static_cast<double>(n);
    return ExpansionCoefficients{(2.0 - dn) / dn, 2.0 / dn, std::sqrt(2.0 / dn)};
}

BipartiteState omega(std::int64_t n, std::int64_t dense_cap) {
    require_dim(n);
    require_dense(n, dense_cap);
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> c(un * un, 0.0);
    const double w = 1.0 / std::sqrt(static_cast<double>(n - 1));
    for (std::int64_t i = 1; i < n; ++i) {
        const Ket row = to_dense(phi(n, i, Sign::plus), dense_cap);
        for (std::size_t b = 0; b < un; ++b) {
            c[static_cast<std::size_t>(i) * un + b] = w * row[b];
        }
    }
    return BipartiteState(n, std::move(c));
}

BipartiteState omega_minus_form(std::int64_t n, std::int64_t dense_cap) {
    require_dim(n);
    require_dense(n, dense_cap);
    const auto un = static_cast<std::size_t>(n);
    std::vector<double> c(un * un, 0.0);
    const double w = 1.0 / (c_minus(n) * std::sqrt(static_cast<double>(n - 1)));
    for (std::int64_t i = 1; i < n; ++i) {
        const Ket a = to_dense(alpha_tilde(n, i), dense_cap);
        const Ket b = to_dense(phi(n, i, Sign::minus), dense_cap);
        for (std::size_t r = 0; r < un; ++r) {
            for (std::size_t col = 0; col < un; ++col) {
                c[r * un + col] += w * a[r] * b[col];
            }
        }
    }
    const double we = std::sqrt(2.0 / static_cast<double>(n));
    const Ket ae = to_dense(alpha_tilde_edge(n), dense_cap);
    const Ket be = to_dense(phi_edge(n, Sign::minus), dense_cap);
    for (std::size_t r = 0; r < un; ++r) {
        for (std::size_t col = 0; col < un; ++col) {
            c[r * un + col] += we * ae[r] * be[col];
        }
    }
    return BipartiteState(n, std::move(c));
}

}  // namespace steersim
