#pragma once

#include "esbraid/cyclo.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace esbraid {

/// Dense square matrix over the exact cyclotomic field. Multiplication
/// skips zero entries, so products against the sparse generator images
/// cost O(dim^2) scans plus one exact multiply per structural nonzero.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim);
    static ExactMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Cyclo& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const Cyclo& at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const Cyclo& factor) const;

    ExactMatrix transpose() const;
    ExactMatrix dagger() const;  // conjugate transpose

    /// Exact Gauss-Jordan elimination. Throws std::domain_error if singular.
    ExactMatrix inverse() const;

    Cyclo trace() const;
    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzero_count() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    /// Canonical sparse text form: injective on matrices, so string equality
    /// is matrix equality and the string doubles as a hash key.
    std::string serialize() const;
    static ExactMatrix deserialize(const std::string& text);

private:
    std::size_t dim_;
    std::vector<Cyclo> a_;
};

/// Tensor product with the left factor nested inside the right one:
/// kron(X, A) consists of blocks A[r][c] * X. In a chain built by folding
/// left-to-right, the first factor therefore indexes the least significant
/// bits of the composite index.
ExactMatrix kron(const ExactMatrix& left, const ExactMatrix& right);

/// Places a 2^b-dimensional block on qubit sites first_site .. first_site+b-1
/// of a 2^sites-dimensional space (identity elsewhere), by index arithmetic
/// rather than materialized tensor chains. Site j corresponds to bit j-1.
ExactMatrix site_operator(int sites, int first_site, const ExactMatrix& block);

/// basis^{-1} * a * basis. Throws std::domain_error if basis is singular.
ExactMatrix conjugate_by(const ExactMatrix& basis, const ExactMatrix& a);

bool is_unitary(const ExactMatrix& m);

// The fixed 2x2 / 4x4 matrices every representation here is assembled from.
ExactMatrix r_matrix();             // 4x4 unitary braiding matrix
ExactMatrix r_matrix_tl();          // z^3 * r_matrix(): eigenvalues -1 and i
ExactMatrix rot90();                // [[0,1],[-1,0]]
ExactMatrix rot45();                // (1/sqrt2)[[1,1],[-1,1]]
ExactMatrix pauli_x();
ExactMatrix pauli_z();
ExactMatrix rot90_diagonalizer();   // diagonalizes rot90, commutes with pauli_x
ExactMatrix pauli_x_diagonalizer(); // diagonalizes pauli_x, commutes with rot90
ExactMatrix phase2();               // diag(z, conj z)
ExactMatrix phase4();               // diag(z, conj z, conj z, z)

}  // namespace esbraid
