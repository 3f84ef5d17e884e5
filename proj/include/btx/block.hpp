#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "btx/dense.hpp"

namespace btx {

namespace detail {
inline void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}
}  // namespace detail

class BlockRow;
class BlockMatrix;

/// n x 1 block vector of d x d entries, indices 0..n-1.
class BlockColumn {
public:
    BlockColumn(std::size_t n, std::size_t d) : n_(n), d_(d), e_(n, DenseMat::zero(d)) {
        detail::require(n >= 1 && d >= 1, "block sizes must be positive");
    }
    explicit BlockColumn(std::vector<DenseMat> entries)
        : n_(entries.size()), d_(entries.empty() ? 1 : entries[0].dim()), e_(std::move(entries)) {
        detail::require(n_ >= 1, "empty block column");
        for (const auto& m : e_) detail::require(m.dim() == d_, "ragged block column");
    }

    std::size_t blocks() const { return n_; }
    std::size_t block_dim() const { return d_; }
    DenseMat& operator[](std::size_t k) { return e_[k]; }
    const DenseMat& operator[](std::size_t k) const { return e_[k]; }

    bool is_zero() const {
        for (const auto& m : e_)
            if (!m.is_zero()) return false;
        return true;
    }
    bool zero_head() const { return e_[0].is_zero(); }

    BlockRow adjoint() const;

    friend BlockColumn operator+(const BlockColumn& a, const BlockColumn& b) {
        detail::require(a.n_ == b.n_ && a.d_ == b.d_, "block column shape mismatch");
        BlockColumn out(a.n_, a.d_);
        for (std::size_t k = 0; k < a.n_; ++k) out[k] = a[k] + b[k];
        return out;
    }
    friend BlockColumn operator-(const BlockColumn& a, const BlockColumn& b) {
        detail::require(a.n_ == b.n_ && a.d_ == b.d_, "block column shape mismatch");
        BlockColumn out(a.n_, a.d_);
        for (std::size_t k = 0; k < a.n_; ++k) out[k] = a[k] - b[k];
        return out;
    }
    friend bool operator==(const BlockColumn& a, const BlockColumn& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.e_ == b.e_;
    }

private:
    std::size_t n_, d_;
    std::vector<DenseMat> e_;
};

/// 1 x n block vector.
class BlockRow {
public:
    BlockRow(std::size_t n, std::size_t d) : n_(n), d_(d), e_(n, DenseMat::zero(d)) {
        detail::require(n >= 1 && d >= 1, "block sizes must be positive");
    }
    explicit BlockRow(std::vector<DenseMat> entries)
        : n_(entries.size()), d_(entries.empty() ? 1 : entries[0].dim()), e_(std::move(entries)) {
        detail::require(n_ >= 1, "empty block row");
        for (const auto& m : e_) detail::require(m.dim() == d_, "ragged block row");
    }

    std::size_t blocks() const { return n_; }
    std::size_t block_dim() const { return d_; }
    DenseMat& operator[](std::size_t k) { return e_[k]; }
    const DenseMat& operator[](std::size_t k) const { return e_[k]; }

    bool is_zero() const {
        for (const auto& m : e_)
            if (!m.is_zero()) return false;
        return true;
    }

    BlockColumn adjoint() const {
        std::vector<DenseMat> out;
        out.reserve(n_);
        for (const auto& m : e_) out.push_back(m.adjoint());
        return BlockColumn(std::move(out));
    }

    friend BlockRow operator+(const BlockRow& a, const BlockRow& b) {
        detail::require(a.n_ == b.n_ && a.d_ == b.d_, "block row shape mismatch");
        BlockRow out(a.n_, a.d_);
        for (std::size_t k = 0; k < a.n_; ++k) out[k] = a[k] + b[k];
        return out;
    }
    friend BlockRow operator-(const BlockRow& a, const BlockRow& b) {
        detail::require(a.n_ == b.n_ && a.d_ == b.d_, "block row shape mismatch");
        BlockRow out(a.n_, a.d_);
        for (std::size_t k = 0; k < a.n_; ++k) out[k] = a[k] - b[k];
        return out;
    }
    friend bool operator==(const BlockRow& a, const BlockRow& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.e_ == b.e_;
    }

private:
    std::size_t n_, d_;
    std::vector<DenseMat> e_;
};

inline BlockRow BlockColumn::adjoint() const {
    std::vector<DenseMat> out;
    out.reserve(n_);
    for (const auto& m : e_) out.push_back(m.adjoint());
    return BlockRow(std::move(out));
}

/// n x n matrix of d x d blocks.
class BlockMatrix {
public:
    BlockMatrix(std::size_t n, std::size_t d)
        : n_(n), d_(d), e_(n * n, DenseMat::zero(d)) {
        detail::require(n >= 1 && d >= 1, "block sizes must be positive");
    }

    static BlockMatrix identity(std::size_t n, std::size_t d) {
        BlockMatrix m(n, d);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = DenseMat::identity(d);
        return m;
    }
    /// Block-diagonal matrix with the same block x repeated.
    static BlockMatrix diagonal_constant(std::size_t n, const DenseMat& x) {
        BlockMatrix m(n, x.dim());
        for (std::size_t i = 0; i < n; ++i) m(i, i) = x;
        return m;
    }

    std::size_t blocks() const { return n_; }
    std::size_t block_dim() const { return d_; }

    DenseMat& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const DenseMat& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& m : e_)
            if (!m.is_zero()) return false;
        return true;
    }

    BlockMatrix adjoint() const {
        BlockMatrix out(n_, d_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j).adjoint();
        return out;
    }

    BlockColumn column(std::size_t j) const {
        std::vector<DenseMat> out;
        out.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) out.push_back((*this)(i, j));
        return BlockColumn(std::move(out));
    }
    BlockRow row(std::size_t i) const {
        std::vector<DenseMat> out;
        out.reserve(n_);
        for (std::size_t j = 0; j < n_; ++j) out.push_back((*this)(i, j));
        return BlockRow(std::move(out));
    }

    friend BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) {
        check_shape(a, b);
        BlockMatrix out(a.n_, a.d_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
        return out;
    }
    friend BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b) {
        check_shape(a, b);
        BlockMatrix out(a.n_, a.d_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
        return out;
    }
    friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
        check_shape(a, b);
        BlockMatrix out(a.n_, a.d_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }
    friend BlockColumn operator*(const BlockMatrix& a, const BlockColumn& v) {
        detail::require(a.n_ == v.blocks() && a.d_ == v.block_dim(),
                        "matrix/column shape mismatch");
        BlockColumn out(a.n_, a.d_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k)
                if (!a(i, k).is_zero()) out[i] += a(i, k) * v[k];
        return out;
    }
    friend BlockRow operator*(const BlockRow& r, const BlockMatrix& a) {
        detail::require(a.n_ == r.blocks() && a.d_ == r.block_dim(),
                        "row/matrix shape mismatch");
        BlockRow out(a.n_, a.d_);
        for (std::size_t j = 0; j < a.n_; ++j)
            for (std::size_t k = 0; k < a.n_; ++k)
                if (!r[k].is_zero()) out[j] += r[k] * a(k, j);
        return out;
    }
    friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.e_ == b.e_;
    }
    friend bool operator!=(const BlockMatrix& a, const BlockMatrix& b) { return !(a == b); }

private:
    static void check_shape(const BlockMatrix& a, const BlockMatrix& b) {
        if (a.n_ != b.n_ || a.d_ != b.d_)
            throw std::invalid_argument("block matrix shape mismatch");
    }

    std::size_t n_, d_;
    std::vector<DenseMat> e_;
};

/// Row times column: the single d x d block of the 1x1 product.
inline DenseMat operator*(const BlockRow& r, const BlockColumn& v) {
    detail::require(r.blocks() == v.blocks() && r.block_dim() == v.block_dim(),
                    "row/column shape mismatch");
    DenseMat out = DenseMat::zero(r.block_dim());
    for (std::size_t k = 0; k < r.blocks(); ++k) out += r[k] * v[k];
    return out;
}

/// Outer product: column times row gives a full block matrix.
inline BlockMatrix outer(const BlockColumn& c, const BlockRow& r) {
    detail::require(c.blocks() == r.blocks() && c.block_dim() == r.block_dim(),
                    "outer product shape mismatch");
    BlockMatrix out(c.blocks(), c.block_dim());
    for (std::size_t i = 0; i < c.blocks(); ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.blocks(); ++j)
            if (!r[j].is_zero()) out(i, j) = c[i] * r[j];
    }
    return out;
}

/// The block shift: identity blocks along the subdiagonal. S^n = 0.
inline BlockMatrix shift(std::size_t n, std::size_t d) {
    BlockMatrix s(n, d);
    for (std::size_t i = 1; i < n; ++i) s(i, i - 1) = DenseMat::identity(d);
    return s;
}

/// Coordinate row P_k: identity block at index k.
inline BlockRow basis_row(std::size_t k, std::size_t n, std::size_t d) {
    if (k >= n)
        throw std::out_of_range("basis row index " + std::to_string(k) + " out of range for n=" +
                                std::to_string(n));
    BlockRow r(n, d);
    r[k] = DenseMat::identity(d);
    return r;
}

/// Coordinate column P_k^*.
inline BlockColumn basis_column(std::size_t k, std::size_t n, std::size_t d) {
    return basis_row(k, n, d).adjoint();
}

/// Generalized shift S_X = S + X placed in the top-right corner block.
inline BlockMatrix shift_x(std::size_t n, std::size_t d, const DenseMat& x) {
    detail::require(x.dim() == d, "corner block dimension mismatch");
    BlockMatrix s = shift(n, d);
    s(0, n - 1) += x;
    return s;
}

/// Left-multiplies every block entry by x.
inline BlockColumn diamond(const DenseMat& x, const BlockColumn& v) {
    detail::require(x.dim() == v.block_dim(), "diamond dimension mismatch");
    BlockColumn out(v.blocks(), v.block_dim());
    for (std::size_t k = 0; k < v.blocks(); ++k) out[k] = x * v[k];
    return out;
}
inline BlockRow diamond(const DenseMat& x, const BlockRow& v) {
    detail::require(x.dim() == v.block_dim(), "diamond dimension mismatch");
    BlockRow out(v.blocks(), v.block_dim());
    for (std::size_t k = 0; k < v.blocks(); ++k) out[k] = x * v[k];
    return out;
}
inline BlockMatrix diamond(const DenseMat& x, const BlockMatrix& m) {
    detail::require(x.dim() == m.block_dim(), "diamond dimension mismatch");
    BlockMatrix out(m.blocks(), m.block_dim());
    for (std::size_t i = 0; i < m.blocks(); ++i)
        for (std::size_t j = 0; j < m.blocks(); ++j) out(i, j) = x * m(i, j);
    return out;
}
/// Right-multiplies every block entry by x (the mirrored diamond).
inline BlockColumn diamond_right(const BlockColumn& v, const DenseMat& x) {
    detail::require(x.dim() == v.block_dim(), "diamond dimension mismatch");
    BlockColumn out(v.blocks(), v.block_dim());
    for (std::size_t k = 0; k < v.blocks(); ++k) out[k] = v[k] * x;
    return out;
}

/// Reverses the tail of a column and takes entrywise adjoints: entry 0 maps
/// to 0, entry j (j >= 1) to the adjoint of entry n-j.
inline BlockColumn tilde(const BlockColumn& v) {
    const std::size_t n = v.blocks();
    BlockColumn out(n, v.block_dim());
    for (std::size_t j = 1; j < n; ++j) out[j] = v[n - j].adjoint();
    return out;
}

/// Displacement M - S M S^*: clears everything that agrees with the block
/// one step up-left, leaving the first row and column data.
inline BlockMatrix displacement(const BlockMatrix& m) {
    const std::size_t n = m.blocks();
    BlockMatrix out(n, m.block_dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = m(i, j);
            if (i >= 1 && j >= 1) out(i, j) -= m(i - 1, j - 1);
        }
    return out;
}

/// Inverse of the displacement: sum of S^k D S^*k, k = 0..n-1.
inline BlockMatrix displacement_reconstruct(const BlockMatrix& dmat) {
    const std::size_t n = dmat.blocks();
    BlockMatrix out(n, dmat.block_dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // sum of D(i-k, j-k) over valid k
            DenseMat acc = dmat(i, j);
            for (std::size_t k = 1; k <= i && k <= j; ++k) acc += dmat(i - k, j - k);
            out(i, j) = acc;
        }
    return out;
}

}  // namespace btx
