#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "btx/scalar.hpp"

namespace btx {

/// Dense square matrix over the Gaussian rationals. Row-major, dimension
/// fixed at construction.
class DenseMat {
public:
    explicit DenseMat(std::size_t d) : d_(d), e_(d * d) {
        if (d == 0) throw std::invalid_argument("matrix dimension must be positive");
    }
    DenseMat(std::initializer_list<std::initializer_list<GaussianRational>> rows)
        : d_(rows.size()), e_() {
        if (d_ == 0) throw std::invalid_argument("matrix dimension must be positive");
        e_.reserve(d_ * d_);
        for (const auto& r : rows) {
            if (r.size() != d_) throw std::invalid_argument("matrix rows must be square");
            for (const auto& v : r) e_.push_back(v);
        }
    }

    static DenseMat zero(std::size_t d) { return DenseMat(d); }
    static DenseMat identity(std::size_t d) {
        DenseMat m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = GaussianRational::one();
        return m;
    }
    /// Matrix unit with 1 at (r, c).
    static DenseMat unit(std::size_t d, std::size_t r, std::size_t c) {
        DenseMat m(d);
        m(r, c) = GaussianRational::one();
        return m;
    }
    /// Cyclic forward shift: 1 at (i+1 mod d, i).
    static DenseMat cyclic_shift(std::size_t d) {
        DenseMat m(d);
        for (std::size_t i = 0; i < d; ++i) m((i + 1) % d, i) = GaussianRational::one();
        return m;
    }

    std::size_t dim() const { return d_; }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return e_[i * d_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const {
        return e_[i * d_ + j];
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    DenseMat adjoint() const {
        DenseMat out(d_);
        for (std::size_t i = 0; i < d_; ++i)
            for (std::size_t j = 0; j < d_; ++j) out(j, i) = (*this)(i, j).conj();
        return out;
    }

    bool is_hermitian() const { return *this == adjoint(); }
    bool is_normal() const { return adjoint() * *this == *this * adjoint(); }
    bool is_unitary() const { return adjoint() * *this == identity(d_); }

    friend DenseMat operator+(const DenseMat& a, const DenseMat& b) {
        check_dims(a, b);
        DenseMat out(a.d_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
        return out;
    }
    friend DenseMat operator-(const DenseMat& a, const DenseMat& b) {
        check_dims(a, b);
        DenseMat out(a.d_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
        return out;
    }
    friend DenseMat operator-(const DenseMat& a) {
        DenseMat out(a.d_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = -a.e_[k];
        return out;
    }
    friend DenseMat operator*(const DenseMat& a, const DenseMat& b) {
        check_dims(a, b);
        DenseMat out(a.d_);
        for (std::size_t i = 0; i < a.d_; ++i)
            for (std::size_t k = 0; k < a.d_; ++k) {
                const GaussianRational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < a.d_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend DenseMat operator*(const GaussianRational& s, const DenseMat& a) {
        DenseMat out(a.d_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = s * a.e_[k];
        return out;
    }

    DenseMat& operator+=(const DenseMat& o) { return *this = *this + o; }
    DenseMat& operator-=(const DenseMat& o) { return *this = *this - o; }

    friend bool operator==(const DenseMat& a, const DenseMat& b) {
        return a.d_ == b.d_ && a.e_ == b.e_;
    }
    friend bool operator!=(const DenseMat& a, const DenseMat& b) { return !(a == b); }

    bool commutes_with(const DenseMat& o) const { return *this * o == o * *this; }

private:
    static void check_dims(const DenseMat& a, const DenseMat& b) {
        if (a.d_ != b.d_)
            throw std::invalid_argument("matrix dimension mismatch: " +
                                        std::to_string(a.d_) + " vs " + std::to_string(b.d_));
    }

    std::size_t d_;
    std::vector<GaussianRational> e_;
};

}  // namespace btx
