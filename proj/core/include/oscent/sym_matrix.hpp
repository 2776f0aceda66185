#pragma once

#include <vector>

namespace oscent::linalg {

/// Dense real symmetric matrix with row-major storage.
///
/// Symmetry is enforced on construction: builders that accept arbitrary
/// row-major data average the matrix with its transpose, and the symmetric
/// setter writes both mirror entries. All downstream spectral code may
/// therefore assume entries(i,j) == entries(j,i) exactly.
class SymMatrix {
public:
    SymMatrix() = default;

    /// Zero matrix of the given dimension (dim >= 1).
    explicit SymMatrix(int dim);

    static SymMatrix identity(int dim);
    static SymMatrix diagonal(const std::vector<double>& entries);

    /// Builds from row-major data of length dim*dim, symmetrizing as (m + m^T)/2.
    static SymMatrix from_row_major(int dim, const std::vector<double>& data);

    int dim() const { return dim_; }

    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }

    /// Sets entries (i,j) and (j,i) to the same value.
    void set(int i, int j, double value);

    /// Adds value to entries (i,j) and (j,i); the diagonal is bumped once.
    void add(int i, int j, double value);

    const std::vector<double>& data() const { return data_; }

    /// Largest absolute entry; 0 for the zero matrix.
    double max_abs() const;

    bool is_diagonal(double tol = 0.0) const;

    std::vector<double> diagonal_entries() const;

    SymMatrix scaled(double factor) const;

    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);

private:
    int dim_ = 0;
    std::vector<double> data_;
};

/// Row-major product a*b of two symmetric matrices (not symmetric in general).
std::vector<double> multiply_raw(const SymMatrix& a, const SymMatrix& b);

/// outer * inner * outer, symmetrized. Both operands must share a dimension.
SymMatrix sandwich(const SymMatrix& outer, const SymMatrix& inner);

/// Principal submatrix on the given strictly increasing index set.
SymMatrix submatrix(const SymMatrix& m, const std::vector<int>& indices);

/// Maximum absolute entrywise difference.
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

} // namespace oscent::linalg
