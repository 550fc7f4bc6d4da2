#include "steersim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace steersim {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kJacobiOffTarget = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

double norm_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double a : v) s += a * a;
    return s;
}

}  // namespace

Ket::Ket(std::vector<double> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw std::invalid_argument("ket dimension must be at least 2");
    }
    if (std::abs(norm_sq(amps_) - 1.0) > kNormTol) {
        throw std::invalid_argument("ket amplitudes are not unit norm");
    }
}

Ket Ket::normalized(std::vector<double> amplitudes) {
    const double n2 = norm_sq(amplitudes);
    if (n2 <= 0.0 || !std::isfinite(n2)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (double& a : amplitudes) a *= inv;
    return Ket(std::move(amplitudes));
}

SymmetricMatrix::SymmetricMatrix(std::int64_t dim) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("matrix dimension must be positive");
    }
    const auto n = static_cast<std::size_t>(dim);
    packed_.assign(n * (n + 1) / 2, 0.0);
}

std::size_t SymmetricMatrix::index(std::int64_t r, std::int64_t c) const {
    if (r < 0 || c < 0 || r >= dim_ || c >= dim_) {
        throw std::out_of_range("matrix index out of range");
    }
    if (r < c) std::swap(r, c);
    return static_cast<std::size_t>(r) * (static_cast<std::size_t>(r) + 1) / 2 +
           static_cast<std::size_t>(c);
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (std::int64_t k = 0; k < dim_; ++k) t += (*this)(k, k);
    return t;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (std::int64_t r = 0; r < dim_; ++r) {
        for (std::int64_t c = 0; c < dim_; ++c) {
            const double v = (*this)(r, c);
            s += v * v;
        }
    }
    return std::sqrt(s);
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("incompatible dimensions");
    SymmetricMatrix out(a.dim());
    for (std::int64_t r = 0; r < a.dim(); ++r) {
        for (std::int64_t c = 0; c <= r; ++c) out.set(r, c, a(r, c) + b(r, c));
    }
    return out;
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("incompatible dimensions");
    SymmetricMatrix out(a.dim());
    for (std::int64_t r = 0; r < a.dim(); ++r) {
        for (std::int64_t c = 0; c <= r; ++c) out.set(r, c, a(r, c) - b(r, c));
    }
    return out;
}

double inner(const Ket& x, const Ket& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("incompatible dimensions");
    double s = 0.0;
    const auto n = static_cast<std::size_t>(x.dim());
    for (std::size_t k = 0; k < n; ++k) s += x[k] * y[k];
    return s;
}

EigenDecomposition sym_eigen(const SymmetricMatrix& a) {
    const auto n = static_cast<std::size_t>(a.dim());
    std::vector<double> m(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m[r * n + c] = a(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c));
        }
    }
    std::vector<double> v(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) v[k * n + k] = 1.0;

    const auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * m[r * n + c] * m[r * n + c];
        }
        return std::sqrt(s);
    };

    double off = off_norm();
    int sweep = 0;
    while (!(off < kJacobiOffTarget) && sweep < kJacobiMaxSweeps) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m[p * n + q];
                if (apq == 0.0) continue;
                const double app = m[p * n + p];
                const double aqq = m[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // m <- J^T m, then m <- m J, with J the (p,q) Givens rotation.
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p * n + k];
                    const double mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k * n + p];
                    const double mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        ++sweep;
        off = off_norm();
    }
    if (!(off < kJacobiOffTarget)) {
        std::ostringstream msg;
        msg << "eigensolver did not converge after " << kJacobiMaxSweeps
            << " sweeps (off-diagonal residual " << off << ")";
        throw std::runtime_error(msg.str());
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return m[i * n + i] > m[j * n + j];
    });

    EigenDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        out.eigenvalues.push_back(m[k * n + k]);
        std::vector<double> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = v[r * n + k];
        out.eigenvectors.emplace_back(std::move(col));
    }
    return out;
}

double trace_norm(const SymmetricMatrix& a) {
    double s = 0.0;
    for (double lambda : sym_eigen(a).eigenvalues) s += std::abs(lambda);
    return s;
}

SymmetricMatrix accumulate_outer(const SymmetricMatrix& acc, const Ket& x, double weight) {
    if (acc.dim() != x.dim()) throw std::invalid_argument("incompatible dimensions");
    if (weight < 0.0) throw std::invalid_argument("outer-product weight must be non-negative");
    SymmetricMatrix out(acc.dim());
    for (std::int64_t r = 0; r < acc.dim(); ++r) {
        for (std::int64_t c = 0; c <= r; ++c) {
            out.set(r, c, acc(r, c) + weight * x[static_cast<std::size_t>(r)] *
                                          x[static_cast<std::size_t>(c)]);
        }
    }
    return out;
}

double alignment_defect(const Ket& x, const Ket& y) {
    return 1.0 - std::abs(inner(x, y));
}

}  // namespace steersim
