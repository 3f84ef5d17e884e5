#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "btx/algebra.hpp"
#include "btx/block.hpp"

namespace btx {

/// Raised when a theorem-level operation is invoked outside its stated
/// hypothesis (e.g. a product test that presumes Toeplitzness).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Canonical data of a general block Toeplitz matrix: constant diagonal
/// block, the lower vector A_1..A_{n-1} and the upper vector W_1..W_{n-1}.
/// The built matrix stores adjoints of the upper entries, so block (i,j) is
///   A_{i-j}  (i > j),   diag  (i = j),   W_{j-i}^*  (i < j).
class ToeplitzSpec {
public:
    ToeplitzSpec(std::size_t n, const DenseMat& diag,
                 std::vector<DenseMat> lower, std::vector<DenseMat> upper)
        : n_(n), d_(diag.dim()), diag_(diag),
          lower_(std::move(lower)), upper_(std::move(upper)) {
        detail::require(n >= 1, "block order must be positive");
        detail::require(lower_.size() == n - 1 && upper_.size() == n - 1,
                        "off-diagonal vectors must have n-1 entries");
        for (const auto& m : lower_) detail::require(m.dim() == d_, "ragged lower entries");
        for (const auto& m : upper_) detail::require(m.dim() == d_, "ragged upper entries");
    }

    static ToeplitzSpec zero(std::size_t n, std::size_t d) {
        return ToeplitzSpec(n, DenseMat::zero(d),
                            std::vector<DenseMat>(n - 1, DenseMat::zero(d)),
                            std::vector<DenseMat>(n - 1, DenseMat::zero(d)));
    }

    std::size_t blocks() const { return n_; }
    std::size_t block_dim() const { return d_; }
    const DenseMat& diag() const { return diag_; }
    DenseMat& diag() { return diag_; }
    /// A_k for k = 1..n-1.
    const DenseMat& lower(std::size_t k) const { return lower_.at(k - 1); }
    DenseMat& lower(std::size_t k) { return lower_.at(k - 1); }
    const DenseMat& upper(std::size_t k) const { return upper_.at(k - 1); }
    DenseMat& upper(std::size_t k) { return upper_.at(k - 1); }

    /// Zero-headed column (0, A_1, ..., A_{n-1}).
    BlockColumn lower_column() const {
        BlockColumn c(n_, d_);
        for (std::size_t k = 1; k < n_; ++k) c[k] = lower_[k - 1];
        return c;
    }
    /// Zero-headed column (0, W_1, ..., W_{n-1}).
    BlockColumn upper_column() const {
        BlockColumn c(n_, d_);
        for (std::size_t k = 1; k < n_; ++k) c[k] = upper_[k - 1];
        return c;
    }

    BlockMatrix build() const {
        BlockMatrix m(n_, d_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j) m(i, j) = diag_;
                else if (i > j) m(i, j) = lower_[i - j - 1];
                else m(i, j) = upper_[j - i - 1].adjoint();
            }
        return m;
    }

    /// Spec of the adjoint matrix: lower and upper trade places and the
    /// diagonal is conjugated.
    ToeplitzSpec adjoint_spec() const {
        return ToeplitzSpec(n_, diag_.adjoint(), upper_, lower_);
    }

    /// True when the diagonal and all off-diagonal entries lie in the span
    /// of the given algebra.
    bool entries_in(const CommAlgebra& alg) const {
        if (!alg.contains(diag_)) return false;
        for (const auto& m : lower_)
            if (!alg.contains(m)) return false;
        for (const auto& m : upper_)
            if (!alg.contains(m)) return false;
        return true;
    }

    friend bool operator==(const ToeplitzSpec& a, const ToeplitzSpec& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.diag_ == b.diag_ &&
               a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

private:
    std::size_t n_, d_;
    DenseMat diag_;
    std::vector<DenseMat> lower_, upper_;
};

inline BlockMatrix toeplitz_build(const ToeplitzSpec& spec) { return spec.build(); }

/// Recovers the unique spec of a block Toeplitz matrix, or nullopt when some
/// block diagonal is not constant. With an algebra attached, additionally
/// requires every recovered entry (including the un-adjointed upper vector)
/// to lie in its span.
inline std::optional<ToeplitzSpec> toeplitz_recognize(const BlockMatrix& m,
                                                      const CommAlgebra* alg = nullptr) {
    const std::size_t n = m.blocks(), d = m.block_dim();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (!(m(i, j) == m(i - 1, j - 1))) return std::nullopt;
    std::vector<DenseMat> lower, upper;
    for (std::size_t k = 1; k < n; ++k) {
        lower.push_back(m(k, 0));
        upper.push_back(m(0, k).adjoint());
    }
    ToeplitzSpec spec(n, m(0, 0), std::move(lower), std::move(upper));
    if (alg && !spec.entries_in(*alg)) return std::nullopt;
    return spec;
}

/// Displacement form of a Toeplitz matrix: vectors (A, W) with
/// disp(M) = A P_0 + P_0^* W^*, the whole (0,0) block carried by A's head
/// and W zero-headed. Returns nullopt exactly on non-Toeplitz input.
inline std::optional<std::pair<BlockColumn, BlockColumn>> displacement_form(
    const BlockMatrix& m) {
    const std::size_t n = m.blocks(), d = m.block_dim();
    BlockMatrix dm = displacement(m);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (!dm(i, j).is_zero()) return std::nullopt;
    BlockColumn a = dm.column(0);
    BlockColumn w(n, d);
    for (std::size_t j = 1; j < n; ++j) w[j] = dm(0, j).adjoint();
    // decomposition must reproduce the displacement exactly
    BlockMatrix rebuilt =
        outer(a, basis_row(0, n, d)) + outer(basis_column(0, n, d), w.adjoint());
    if (rebuilt != dm) throw std::logic_error("displacement decomposition failed");
    return std::make_pair(std::move(a), std::move(w));
}

/// Generalized displacement form M - S_X M S_X^* = A P_0 + P_0^* B^*.
/// Succeeds exactly on Toeplitz input; the returned vectors follow the
/// substitution A = A' - S_X M (X^* at tail), B = W' - S_X M^* (X^* at tail)
/// plus the corner correction on B's head.
inline std::optional<std::pair<BlockColumn, BlockColumn>> sx_displacement_form(
    const BlockMatrix& m, const DenseMat& x) {
    const std::size_t n = m.blocks(), d = m.block_dim();
    detail::require(x.dim() == d, "corner block dimension mismatch");
    BlockMatrix sx = shift_x(n, d, x);
    BlockMatrix dx = m - sx * m * sx.adjoint();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (!dx(i, j).is_zero()) return std::nullopt;

    auto base = displacement_form(m);
    if (!base) return std::nullopt;  // same support condition; unreachable in practice
    BlockColumn xtail(n, d);
    xtail[n - 1] = x.adjoint();
    BlockColumn a = base->first - sx * (m * xtail);
    BlockColumn b = base->second - sx * (m.adjoint() * xtail);
    b[0] += x * m(n - 1, n - 1).adjoint() * x.adjoint();

    BlockMatrix rebuilt =
        outer(a, basis_row(0, n, d)) + outer(basis_column(0, n, d), b.adjoint());
    if (rebuilt != dx) throw std::logic_error("generalized displacement decomposition failed");
    return std::make_pair(std::move(a), std::move(b));
}

/// Displacement of a product of two block Toeplitz matrices, assembled from
/// the specs alone:
///   C Th^* - tilde(G) tilde(D)^*
///   + [CC D + D_0 C + C_0 D_0 P_0^*] P_0
///   + P_0^* [G^* S DD S^* + Th^* C_0]
/// where CC, DD are the built matrices, (C, G) and (D, Th) the lower/upper
/// vectors and C_0, D_0 the diagonal blocks. Equals disp(CC * DD) exactly
/// when the entries commute.
inline BlockMatrix product_displacement_rhs(const ToeplitzSpec& cspec,
                                            const ToeplitzSpec& dspec) {
    detail::require(cspec.blocks() == dspec.blocks() &&
                        cspec.block_dim() == dspec.block_dim(),
                    "spec shape mismatch");
    const std::size_t n = cspec.blocks(), d = cspec.block_dim();
    const BlockMatrix cc = cspec.build(), dd = dspec.build();
    const BlockMatrix s = shift(n, d);
    const BlockColumn c = cspec.lower_column(), g = cspec.upper_column();
    const BlockColumn dv = dspec.lower_column(), th = dspec.upper_column();
    const DenseMat &c0 = cspec.diag(), &d0 = dspec.diag();

    BlockMatrix out = outer(c, th.adjoint()) - outer(tilde(g), tilde(dv).adjoint());

    BlockColumn col = cc * dv + diamond(d0, c);
    col[0] += c0 * d0;
    out = out + outer(col, basis_row(0, n, d));

    BlockRow row = g.adjoint() * (s * dd * s.adjoint()) +
                   th.adjoint() * BlockMatrix::diagonal_constant(n, c0);
    out = out + outer(basis_column(0, n, d), row);
    return out;
}

/// Vector criterion for "AB - CD is block Toeplitz":
///   A L^* - tilde(W) tilde(B)^*  ==  C Th^* - tilde(G) tilde(D)^*
/// with (A, W), (B, L), (C, G), (D, Th) the lower/upper vectors of the four
/// specs.
inline bool product_toeplitz_test(const ToeplitzSpec& aspec, const ToeplitzSpec& bspec,
                                  const ToeplitzSpec& cspec, const ToeplitzSpec& dspec) {
    detail::require(aspec.blocks() == bspec.blocks() && aspec.blocks() == cspec.blocks() &&
                        aspec.blocks() == dspec.blocks() &&
                        aspec.block_dim() == bspec.block_dim() &&
                        aspec.block_dim() == cspec.block_dim() &&
                        aspec.block_dim() == dspec.block_dim(),
                    "spec shape mismatch");
    auto side = [](const ToeplitzSpec& p, const ToeplitzSpec& q) {
        return outer(p.lower_column(), q.upper_column().adjoint()) -
               outer(tilde(p.upper_column()), tilde(q.lower_column()).adjoint());
    };
    return side(aspec, bspec) == side(cspec, dspec);
}

namespace detail {

// M V + m0-scaled Vother + head extra, the common shape of the two zero-test
// relations.
inline BlockColumn zero_relation(const BlockMatrix& m, const BlockColumn& v,
                                 const DenseMat& m0, const BlockColumn& vother,
                                 const DenseMat& head) {
    BlockColumn out = m * v + diamond(m0, vother);
    out[0] += head;
    return out;
}

}  // namespace detail

/// Under the Toeplitz hypothesis on AB - CD, decides AB == CD through the
/// zeroth-component relation and its adjoint twin. The adjoint relation uses
/// the conjugated diagonal product C_0^* D_0^*.
inline bool product_zero_test(const ToeplitzSpec& aspec, const ToeplitzSpec& bspec,
                              const ToeplitzSpec& cspec, const ToeplitzSpec& dspec) {
    if (!product_toeplitz_test(aspec, bspec, cspec, dspec))
        throw PreconditionError("product difference is not block Toeplitz");
    const DenseMat &a0 = aspec.diag(), &b0 = bspec.diag();
    const DenseMat &c0 = cspec.diag(), &d0 = dspec.diag();
    BlockColumn l1 = detail::zero_relation(aspec.build(), bspec.lower_column(), b0,
                                           aspec.lower_column(), a0 * b0);
    BlockColumn r1 = detail::zero_relation(cspec.build(), dspec.lower_column(), d0,
                                           cspec.lower_column(), c0 * d0);
    if (!(l1 == r1)) return false;
    BlockColumn l2 = detail::zero_relation(bspec.build().adjoint(), aspec.upper_column(),
                                           a0.adjoint(), bspec.upper_column(),
                                           a0.adjoint() * b0.adjoint());
    BlockColumn r2 = detail::zero_relation(dspec.build().adjoint(), cspec.upper_column(),
                                           c0.adjoint(), dspec.upper_column(),
                                           c0.adjoint() * d0.adjoint());
    return l2 == r2;
}

/// Criterion for "AB is block Toeplitz": A L^* == tilde(W) tilde(B)^*.
inline bool single_product_toeplitz_test(const ToeplitzSpec& aspec,
                                         const ToeplitzSpec& bspec) {
    detail::require(aspec.blocks() == bspec.blocks() &&
                        aspec.block_dim() == bspec.block_dim(),
                    "spec shape mismatch");
    return outer(aspec.lower_column(), bspec.upper_column().adjoint()) ==
           outer(tilde(aspec.upper_column()), tilde(bspec.lower_column()).adjoint());
}

/// With AB known Toeplitz, checks commutation AB == BA by direct
/// multiplication.
inline bool product_commute_check(const ToeplitzSpec& aspec, const ToeplitzSpec& bspec) {
    if (!single_product_toeplitz_test(aspec, bspec))
        throw PreconditionError("product is not block Toeplitz");
    BlockMatrix a = aspec.build(), b = bspec.build();
    return a * b == b * a;
}

enum class ShiftCommutant { lower_toeplitz, upper_toeplitz, both, neither };

/// Classification by direct commutation with S and S^*.
inline ShiftCommutant commutant_S_direct(const BlockMatrix& m) {
    const BlockMatrix s = shift(m.blocks(), m.block_dim());
    const bool low = m * s == s * m;
    const bool up = m * s.adjoint() == s.adjoint() * m;
    if (low && up) return ShiftCommutant::both;
    if (low) return ShiftCommutant::lower_toeplitz;
    if (up) return ShiftCommutant::upper_toeplitz;
    return ShiftCommutant::neither;
}

/// Classification by shape: lower (upper) triangular block Toeplitz, block
/// diagonal-constant, or neither.
inline ShiftCommutant commutant_S_structural(const BlockMatrix& m) {
    auto spec = toeplitz_recognize(m);
    if (!spec) return ShiftCommutant::neither;
    const bool low = spec->upper_column().is_zero();
    const bool up = spec->lower_column().is_zero();
    if (low && up) return ShiftCommutant::both;
    if (low) return ShiftCommutant::lower_toeplitz;
    if (up) return ShiftCommutant::upper_toeplitz;
    return ShiftCommutant::neither;
}

/// Fused classification; the two routes agree for every block matrix.
inline ShiftCommutant commutant_S_classify(const BlockMatrix& m) {
    ShiftCommutant direct = commutant_S_direct(m);
    if (direct != commutant_S_structural(m))
        throw std::logic_error("shift commutant routes disagree");
    return direct;
}

enum class ShiftXCommutant { sx_commutant, sx_star_commutant, both, neither };

struct SXClassification {
    ShiftXCommutant kind;
    std::optional<ToeplitzSpec> spec;  // present whenever the matrix is Toeplitz
};

/// Classification by direct commutation with S_X and S_X^*; also extracts
/// the Toeplitz spec when there is one.
inline SXClassification commutant_SX_classify(const BlockMatrix& m, const DenseMat& x) {
    const BlockMatrix sx = shift_x(m.blocks(), m.block_dim(), x);
    const bool c1 = m * sx == sx * m;
    const bool c2 = m * sx.adjoint() == sx.adjoint() * m;
    ShiftXCommutant kind = c1 && c2 ? ShiftXCommutant::both
                         : c1       ? ShiftXCommutant::sx_commutant
                         : c2       ? ShiftXCommutant::sx_star_commutant
                                    : ShiftXCommutant::neither;
    return {kind, toeplitz_recognize(m)};
}

/// Classification by shape: W == X^* diamond tilde(A) marks the S_X
/// commutant, the mirrored relation marks the S_X^* commutant. Matches the
/// direct route whenever X commutes with the entries.
inline ShiftXCommutant commutant_SX_structural(const BlockMatrix& m, const DenseMat& x) {
    auto spec = toeplitz_recognize(m);
    if (!spec) return ShiftXCommutant::neither;
    const DenseMat xadj = x.adjoint();
    const bool c1 = spec->upper_column() == diamond(xadj, tilde(spec->lower_column()));
    const bool c2 = spec->lower_column() == diamond(xadj, tilde(spec->upper_column()));
    if (c1 && c2) return ShiftXCommutant::both;
    if (c1) return ShiftXCommutant::sx_commutant;
    if (c2) return ShiftXCommutant::sx_star_commutant;
    return ShiftXCommutant::neither;
}

/// For two specs commuting with the same S_X, certifies Toeplitzness of the
/// product through the chain A L^* == X diamond (A tilde(B)^*) == tilde(W)
/// tilde(B)^*.
inline bool sx_closure_product(const ToeplitzSpec& aspec, const ToeplitzSpec& bspec,
                               const DenseMat& x) {
    auto commutes = [&](const ToeplitzSpec& s) {
        auto k = commutant_SX_classify(s.build(), x).kind;
        return k == ShiftXCommutant::sx_commutant || k == ShiftXCommutant::both;
    };
    if (!commutes(aspec) || !commutes(bspec))
        throw PreconditionError("spec does not commute with the generalized shift");
    BlockMatrix r1 = outer(aspec.lower_column(), bspec.upper_column().adjoint());
    BlockMatrix r2 = diamond(x, outer(aspec.lower_column(), tilde(bspec.lower_column()).adjoint()));
    BlockMatrix r3 = outer(tilde(aspec.upper_column()), tilde(bspec.lower_column()).adjoint());
    return r1 == r2 && r2 == r3;
}

}  // namespace btx
