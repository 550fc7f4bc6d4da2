#pragma once

#include <cstdint>
#include <vector>

namespace steersim {

// Dense mode covers dimensions small enough to afford O(n^3) work
// (eigensolves, full coefficient matrices). Beyond the cap only the
// structured representation in states.hpp is legal.
inline constexpr std::int64_t kDefaultDenseCap = 4096;

/// Unit-norm real state vector. The norm is validated at construction
/// (sum of squared amplitudes within 1e-12 of 1); unnormalized
/// intermediates live in plain std::vector<double>.
class Ket {
public:
    /// Validates dim >= 2 and unit norm.
    explicit Ket(std::vector<double> amplitudes);

    /// Scales the vector to unit norm first. Throws on (near-)zero input.
    static Ket normalized(std::vector<double> amplitudes);

    std::int64_t dim() const { return static_cast<std::int64_t>(amps_.size()); }
    double operator[](std::size_t k) const { return amps_[k]; }
    const std::vector<double>& amplitudes() const { return amps_; }

private:
    std::vector<double> amps_;
};

/// Real symmetric matrix in packed lower-triangular storage, so
/// (r,c) and (c,r) are the same element by construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::int64_t dim);

    std::int64_t dim() const { return dim_; }
    double operator()(std::int64_t r, std::int64_t c) const { return packed_[index(r, c)]; }
    void set(std::int64_t r, std::int64_t c, double value) { packed_[index(r, c)] = value; }

    double trace() const;
    double frobenius_norm() const;

private:
    std::size_t index(std::int64_t r, std::int64_t c) const;

    std::int64_t dim_;
    std::vector<double> packed_;
};

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Full spectral decomposition A = V diag(lambda) V^T.
struct EigenDecomposition {
    std::vector<double> eigenvalues;  // descending; ties keep original column order
    std::vector<Ket> eigenvectors;    // orthonormal; eigenvectors[k] pairs with eigenvalues[k]
};

/// Euclidean dot product. Throws "incompatible dimensions" on mismatch.
double inner(const Ket& x, const Ket& y);

/// Cyclic Jacobi eigensolver. Iterates until the off-diagonal Frobenius
/// norm drops below 1e-13 (tuned for unit-scale matrices) or 100 sweeps,
/// then throws "eigensolver did not converge" with the residual.
EigenDecomposition sym_eigen(const SymmetricMatrix& a);

/// Sum of absolute eigenvalues, tr sqrt(A^T A) for symmetric A.
double trace_norm(const SymmetricMatrix& a);

/// acc + weight * |x><x|. Requires weight >= 0 and matching dims.
SymmetricMatrix accumulate_outer(const SymmetricMatrix& acc, const Ket& x, double weight);

/// 1 - |<x|y>|: zero when x and y agree up to global sign, which is the
/// equality metric used throughout (a global sign has no physical meaning).
double alignment_defect(const Ket& x, const Ket& y);

}  // namespace steersim
