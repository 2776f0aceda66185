#include "oscent/sym_matrix.hpp"

#include <cmath>
#include <cstddef>

#include "oscent/errors.hpp"

namespace oscent::linalg {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
    if (dim < 1) {
        throw DimensionError("SymMatrix dimension must be >= 1, got " + std::to_string(dim));
    }
    data_.assign(static_cast<size_t>(dim) * dim, 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        m.data_[static_cast<size_t>(i) * dim + i] = 1.0;
    }
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& entries) {
    SymMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim_; ++i) {
        m.data_[static_cast<size_t>(i) * m.dim_ + i] = entries[i];
    }
    return m;
}

SymMatrix SymMatrix::from_row_major(int dim, const std::vector<double>& data) {
    SymMatrix m(dim);
    if (data.size() != static_cast<size_t>(dim) * dim) {
        throw DimensionError("row-major data has length " + std::to_string(data.size()) +
                             ", expected " + std::to_string(static_cast<size_t>(dim) * dim));
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double v = 0.5 * (data[static_cast<size_t>(i) * dim + j] +
                                    data[static_cast<size_t>(j) * dim + i]);
            m.data_[static_cast<size_t>(i) * dim + j] = v;
            m.data_[static_cast<size_t>(j) * dim + i] = v;
        }
    }
    return m;
}

void SymMatrix::set(int i, int j, double value) {
    data_[static_cast<size_t>(i) * dim_ + j] = value;
    data_[static_cast<size_t>(j) * dim_ + i] = value;
}

void SymMatrix::add(int i, int j, double value) {
    data_[static_cast<size_t>(i) * dim_ + j] += value;
    if (i != j) {
        data_[static_cast<size_t>(j) * dim_ + i] += value;
    }
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

bool SymMatrix::is_diagonal(double tol) const {
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            if (std::abs((*this)(i, j)) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::vector<double> SymMatrix::diagonal_entries() const {
    std::vector<double> d(dim_);
    for (int i = 0; i < dim_; ++i) {
        d[i] = (*this)(i, i);
    }
    return d;
}

SymMatrix SymMatrix::scaled(double factor) const {
    SymMatrix m = *this;
    for (double& v : m.data_) {
        v *= factor;
    }
    return m;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("dimension mismatch in matrix sum");
    }
    SymMatrix m = a;
    for (size_t i = 0; i < m.data_.size(); ++i) {
        m.data_[i] += b.data_[i];
    }
    return m;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim_ != b.dim_) {
        throw DimensionError("dimension mismatch in matrix difference");
    }
    SymMatrix m = a;
    for (size_t i = 0; i < m.data_.size(); ++i) {
        m.data_[i] -= b.data_[i];
    }
    return m;
}

std::vector<double> multiply_raw(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("dimension mismatch in matrix product");
    }
    const int n = a.dim();
    const double* pa = a.data().data();
    const double* pb = b.data().data();
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* arow = pa + static_cast<size_t>(i) * n;
        double* orow = out.data() + static_cast<size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const double aik = arow[k];
            if (aik == 0.0) {
                continue;
            }
            const double* brow = pb + static_cast<size_t>(k) * n;
            for (int j = 0; j < n; ++j) {
                orow[j] += aik * brow[j];
            }
        }
    }
    return out;
}

SymMatrix sandwich(const SymMatrix& outer, const SymMatrix& inner) {
    if (outer.dim() != inner.dim()) {
        throw DimensionError("dimension mismatch in sandwich product");
    }
    const int n = outer.dim();
    std::vector<double> t = multiply_raw(outer, inner);
    const double* po = outer.data().data();
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* trow = t.data() + static_cast<size_t>(i) * n;
        double* orow = out.data() + static_cast<size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const double tik = trow[k];
            if (tik == 0.0) {
                continue;
            }
            const double* orow2 = po + static_cast<size_t>(k) * n;
            for (int j = 0; j < n; ++j) {
                orow[j] += tik * orow2[j];
            }
        }
    }
    return SymMatrix::from_row_major(n, out);
}

SymMatrix submatrix(const SymMatrix& m, const std::vector<int>& indices) {
    if (indices.empty()) {
        throw DimensionError("submatrix index set is empty");
    }
    for (size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] < 0 || indices[t] >= m.dim()) {
            throw DimensionError("submatrix index out of range");
        }
        if (t > 0 && indices[t] <= indices[t - 1]) {
            throw DimensionError("submatrix indices must be strictly increasing");
        }
    }
    SymMatrix out(static_cast<int>(indices.size()));
    for (size_t i = 0; i < indices.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            out.set(static_cast<int>(i), static_cast<int>(j), m(indices[i], indices[j]));
        }
    }
    return out;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("dimension mismatch in matrix comparison");
    }
    double m = 0.0;
    for (size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

} // namespace oscent::linalg
