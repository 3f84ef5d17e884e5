#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "btx/dense.hpp"
#include "btx/linsolve.hpp"

namespace btx {

/// Raised when a candidate basis fails commutativity or (in strict mode)
/// multiplicative closure. Carries the witness pair.
class AlgebraError : public std::runtime_error {
public:
    enum class Kind { not_commutative, not_closed };

    AlgebraError(Kind kind, std::size_t i, std::size_t j)
        : std::runtime_error(kind == Kind::not_commutative
                                 ? "basis elements " + std::to_string(i) + " and " +
                                       std::to_string(j) + " do not commute"
                                 : "product of basis elements " + std::to_string(i) + " and " +
                                       std::to_string(j) + " leaves the span"),
          kind_(kind), i_(i), j_(j) {}

    Kind kind() const { return kind_; }
    std::pair<std::size_t, std::size_t> witness() const { return {i_, j_}; }

private:
    Kind kind_;
    std::size_t i_, j_;
};

namespace detail {

inline Vec flatten(const DenseMat& m) {
    Vec v;
    v.reserve(m.dim() * m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) v.push_back(m(i, j));
    return v;
}

}  // namespace detail

/// A commutative subalgebra of the d x d matrices, represented by a linearly
/// independent basis containing the identity in its span. Immutable after
/// construction.
class CommAlgebra {
public:
    /// Strict validation: the given family (plus the identity, adjoined when
    /// absent) must already be multiplicatively closed. Dependent inputs are
    /// pruned; non-commuting or non-closed families raise AlgebraError.
    static CommAlgebra verify(std::vector<DenseMat> basis) {
        return build(std::move(basis), /*close=*/false);
    }

    /// Closure mode: repeatedly adjoins products until the span is stable
    /// (bounded by d^2 steps). Non-commuting generators raise AlgebraError.
    static CommAlgebra from_generators(std::vector<DenseMat> gens) {
        return build(std::move(gens), /*close=*/true);
    }

    std::size_t dim() const { return d_; }
    const std::vector<DenseMat>& basis() const { return basis_; }

    /// Exact coordinates of M in the basis, or nullopt when M is outside
    /// the span.
    std::optional<Vec> in_span(const DenseMat& m) const {
        check_dim(m);
        return solve_in_span(flat_, detail::flatten(m));
    }

    bool contains(const DenseMat& m) const { return in_span(m).has_value(); }

    /// True iff x commutes with every basis element (x is in the commutant).
    bool in_commutant(const DenseMat& x) const {
        check_dim(x);
        for (const auto& b : basis_)
            if (!(x * b == b * x)) return false;
        return true;
    }

    /// Basis of the full commutant algebra, via the exact nullspace of
    /// X -> [X, B_k] over all basis elements. Always contains the identity.
    std::vector<DenseMat> commutant_basis() const {
        const std::size_t dd = d_ * d_;
        RowMatrix eqs;
        eqs.reserve(basis_.size() * dd);
        // row for equation (i,j) of X*B - B*X = 0, unknowns X(r,c)
        for (const auto& b : basis_) {
            for (std::size_t i = 0; i < d_; ++i)
                for (std::size_t j = 0; j < d_; ++j) {
                    Vec row(dd);
                    for (std::size_t k = 0; k < d_; ++k) {
                        row[i * d_ + k] += b(k, j);   // (X*B)(i,j) term X(i,k)B(k,j)
                        row[k * d_ + j] -= b(i, k);   // (B*X)(i,j) term B(i,k)X(k,j)
                    }
                    eqs.push_back(std::move(row));
                }
        }
        std::vector<DenseMat> out;
        for (const auto& v : nullspace(std::move(eqs))) {
            DenseMat m(d_);
            for (std::size_t i = 0; i < d_; ++i)
                for (std::size_t j = 0; j < d_; ++j) m(i, j) = v[i * d_ + j];
            out.push_back(std::move(m));
        }
        return out;
    }

private:
    CommAlgebra(std::size_t d, std::vector<DenseMat> basis)
        : d_(d), basis_(std::move(basis)) {
        flat_.reserve(basis_.size());
        for (const auto& b : basis_) flat_.push_back(detail::flatten(b));
    }

    void check_dim(const DenseMat& m) const {
        if (m.dim() != d_)
            throw std::invalid_argument("matrix dimension " + std::to_string(m.dim()) +
                                        " does not match algebra dimension " +
                                        std::to_string(d_));
    }

    static CommAlgebra build(std::vector<DenseMat> input, bool close) {
        if (input.empty()) throw std::invalid_argument("empty basis");
        const std::size_t d = input[0].dim();
        for (const auto& m : input)
            if (m.dim() != d) throw std::invalid_argument("mixed basis dimensions");

        // commutativity of the generating family (pairwise suffices: the
        // span and closure of commuting elements stays commutative)
        for (std::size_t i = 0; i < input.size(); ++i)
            for (std::size_t j = i + 1; j < input.size(); ++j)
                if (!input[i].commutes_with(input[j]))
                    throw AlgebraError(AlgebraError::Kind::not_commutative, i, j);

        // prune to an independent set
        std::vector<Vec> flats;
        for (const auto& m : input) flats.push_back(detail::flatten(m));
        std::vector<DenseMat> basis;
        for (auto idx : independent_subset(flats)) basis.push_back(input[idx]);

        // adjoin the identity when it is outside the span
        auto in = [&](const DenseMat& m) {
            std::vector<Vec> cols;
            for (const auto& b : basis) cols.push_back(detail::flatten(b));
            return solve_in_span(cols, detail::flatten(m)).has_value();
        };
        DenseMat id = DenseMat::identity(d);
        if (!in(id)) basis.insert(basis.begin(), id);

        if (close) {
            // fixed point: dimension of M_d bounds the loop
            bool grew = true;
            while (grew) {
                grew = false;
                const std::size_t cur = basis.size();
                for (std::size_t i = 0; i < cur && basis.size() < d * d; ++i)
                    for (std::size_t j = 0; j < cur && basis.size() < d * d; ++j) {
                        DenseMat p = basis[i] * basis[j];
                        if (!in(p)) {
                            for (const auto& b : basis)
                                if (!p.commutes_with(b))
                                    throw AlgebraError(AlgebraError::Kind::not_commutative, i, j);
                            basis.push_back(std::move(p));
                            grew = true;
                        }
                    }
            }
        } else {
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < basis.size(); ++j)
                    if (!in(basis[i] * basis[j]))
                        throw AlgebraError(AlgebraError::Kind::not_closed, i, j);
        }

        return CommAlgebra(d, std::move(basis));
    }

    std::size_t d_;
    std::vector<DenseMat> basis_;
    std::vector<Vec> flat_;
};

}  // namespace btx
