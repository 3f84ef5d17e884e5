#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "btx/algebra.hpp"
#include "btx/dense.hpp"
#include "btx/rng.hpp"
#include "btx/toeplitz.hpp"

namespace btx {

enum class AlgebraKind { diagonal, circulant, poly, explicit_basis };

inline std::string to_string(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::diagonal: return "diagonal";
        case AlgebraKind::circulant: return "circulant";
        case AlgebraKind::poly: return "poly";
        case AlgebraKind::explicit_basis: return "explicit";
    }
    return "?";
}

inline AlgebraKind algebra_kind_from_string(const std::string& s) {
    if (s == "diagonal") return AlgebraKind::diagonal;
    if (s == "circulant") return AlgebraKind::circulant;
    if (s == "poly") return AlgebraKind::poly;
    if (s == "explicit") return AlgebraKind::explicit_basis;
    throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

/// Parameters of a randomized suite run.
struct TrialConfig {
    std::uint64_t seed = 42;
    int trials = 100;
    int n_lo = 2, n_hi = 5;
    int d_lo = 1, d_hi = 3;
    std::vector<AlgebraKind> kinds = {AlgebraKind::diagonal, AlgebraKind::circulant,
                                      AlgebraKind::poly};
    long coeff_bound = 8;  // numerators/denominators of sampled coefficients

    void validate() const {
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
        if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad block-order range");
        if (d_lo < 1 || d_hi < d_lo) throw std::invalid_argument("bad block-dimension range");
        if (kinds.empty()) throw std::invalid_argument("no algebra kinds selected");
        if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
    }
};

inline GaussianRational random_scalar(Rng& rng, long bound) {
    return GaussianRational(rng.range(-bound, bound), rng.range(1, bound),
                            rng.range(-bound, bound), rng.range(1, bound));
}

inline GaussianRational random_nonzero_scalar(Rng& rng, long bound) {
    for (;;) {
        GaussianRational s = random_scalar(rng, bound);
        if (!s.is_zero()) return s;
    }
}

inline DenseMat random_dense(Rng& rng, std::size_t d, long bound) {
    DenseMat m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = random_scalar(rng, bound);
    return m;
}

inline DenseMat random_hermitian(Rng& rng, std::size_t d, long bound) {
    DenseMat m(d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = GaussianRational(rng.range(-bound, bound), rng.range(1, bound), 0, 1);
        for (std::size_t j = i + 1; j < d; ++j) {
            GaussianRational v = random_scalar(rng, bound);
            m(i, j) = v;
            m(j, i) = v.conj();
        }
    }
    return m;
}

/// Deterministic algebra sampler. The poly and explicit kinds use Hermitian
/// generators, so every sampled algebra is closed under adjoints and all of
/// its elements are normal matrices; the full equivalence chain of the
/// normality results holds on that class.
inline CommAlgebra gen_algebra(AlgebraKind kind, std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case AlgebraKind::diagonal: {
            std::vector<DenseMat> basis;
            for (std::size_t k = 0; k < d; ++k) basis.push_back(DenseMat::unit(d, k, k));
            return CommAlgebra::verify(std::move(basis));
        }
        case AlgebraKind::circulant:
            return CommAlgebra::from_generators({DenseMat::cyclic_shift(d)});
        case AlgebraKind::poly:
            return CommAlgebra::from_generators({random_hermitian(rng, d, 3)});
        case AlgebraKind::explicit_basis: {
            // small preset pool of Hermitian generators
            DenseMat g(d);
            switch (rng.below(3)) {
                case 0:  // all-ones
                    for (std::size_t i = 0; i < d; ++i)
                        for (std::size_t j = 0; j < d; ++j) g(i, j) = GaussianRational::one();
                    break;
                case 1:  // symmetric tridiagonal 0/1
                    for (std::size_t i = 0; i + 1 < d; ++i) {
                        g(i, i + 1) = GaussianRational::one();
                        g(i + 1, i) = GaussianRational::one();
                    }
                    break;
                default:  // integer diagonal
                    for (std::size_t i = 0; i < d; ++i)
                        g(i, i) = GaussianRational(static_cast<long>(i + 1));
                    break;
            }
            return CommAlgebra::from_generators({g});
        }
    }
    throw std::invalid_argument("unknown algebra kind");
}

/// Random element of the span with bounded rational coefficients.
inline DenseMat random_span_element(Rng& rng, const CommAlgebra& alg, long bound) {
    DenseMat out = DenseMat::zero(alg.dim());
    for (const auto& b : alg.basis()) out += random_scalar(rng, bound) * b;
    return out;
}

inline DenseMat random_nonzero_span_element(Rng& rng, const CommAlgebra& alg, long bound) {
    for (;;) {
        DenseMat m = random_span_element(rng, alg, bound);
        if (!m.is_zero()) return m;
    }
}

/// Random element of the full commutant, sampled from its exact basis.
inline DenseMat gen_commutant_element(const CommAlgebra& alg, std::uint64_t seed,
                                      long bound = 4) {
    Rng rng(seed);
    DenseMat out = DenseMat::zero(alg.dim());
    for (const auto& b : alg.commutant_basis()) out += random_scalar(rng, bound) * b;
    return out;
}

/// Pythagorean units: exact unit-modulus Gaussian rationals.
inline const std::vector<GaussianRational>& unit_scalars() {
    static const std::vector<GaussianRational> pool = [] {
        std::vector<GaussianRational> v;
        v.emplace_back(1);
        v.emplace_back(-1);
        v.push_back(GaussianRational::i());
        v.push_back(-GaussianRational::i());
        auto add = [&v](long a, long b, long c) {
            v.push_back(GaussianRational(a, c, b, c));
            v.push_back(GaussianRational(a, c, -b, c));
            v.push_back(GaussianRational(-a, c, b, c));
            v.push_back(GaussianRational(b, c, a, c));
        };
        add(3, 4, 5);
        add(5, 12, 13);
        add(8, 15, 17);
        return v;
    }();
    return pool;
}

/// Exactly unitary element of the commutant: tries signed permutations and
/// unit-diagonal matrices scaled by Pythagorean units, falling back to a
/// unit multiple of the identity (always valid).
inline DenseMat gen_unitary(const CommAlgebra& alg, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t d = alg.dim();
    const auto& units = unit_scalars();
    auto unit = [&]() { return units[rng.below(units.size())]; };

    for (int attempt = 0; attempt < 16; ++attempt) {
        DenseMat cand = DenseMat::zero(d);
        switch (rng.below(3)) {
            case 0: {  // unit diagonal
                for (std::size_t i = 0; i < d; ++i) cand(i, i) = unit();
                break;
            }
            case 1: {  // signed permutation: unit entries on a permutation pattern
                std::vector<std::size_t> perm(d);
                for (std::size_t i = 0; i < d; ++i) perm[i] = i;
                for (std::size_t i = d; i > 1; --i)
                    std::swap(perm[i - 1], perm[rng.below(i)]);
                for (std::size_t c = 0; c < d; ++c) cand(perm[c], c) = unit();
                break;
            }
            default: {  // unit multiple of a cyclic permutation power
                DenseMat p = DenseMat::identity(d);
                DenseMat cyc = DenseMat::cyclic_shift(d);
                std::uint64_t k = rng.below(d);
                for (std::uint64_t t = 0; t < k; ++t) p = cyc * p;
                cand = unit() * p;
                break;
            }
        }
        if (cand.is_unitary() && alg.in_commutant(cand)) return cand;
    }
    return unit() * DenseMat::identity(d);
}

enum class SpecConstraint {
    none,
    lower_only,
    upper_only,
    hermitian,
    sx_commutant,
    sx_star_commutant,
};

inline SpecConstraint spec_constraint_from_string(const std::string& s) {
    if (s == "none") return SpecConstraint::none;
    if (s == "lower_only") return SpecConstraint::lower_only;
    if (s == "upper_only") return SpecConstraint::upper_only;
    if (s == "hermitian") return SpecConstraint::hermitian;
    if (s == "sx_commutant") return SpecConstraint::sx_commutant;
    if (s == "sx_star_commutant") return SpecConstraint::sx_star_commutant;
    throw std::invalid_argument("unknown spec constraint '" + s + "'");
}

/// Random spec with entries in the algebra span; the constraint modes
/// realize the structured families (triangular, Hermitian, generalized
/// circulant). The shift-x constraints need the corner block x.
inline ToeplitzSpec gen_spec(const CommAlgebra& alg, std::size_t n, std::uint64_t seed,
                             SpecConstraint constraint = SpecConstraint::none,
                             const DenseMat* x = nullptr, long bound = 4) {
    Rng rng(seed);
    const std::size_t d = alg.dim();
    DenseMat diag = random_span_element(rng, alg, bound);
    std::vector<DenseMat> lower, upper;
    for (std::size_t k = 1; k < n; ++k) {
        lower.push_back(random_span_element(rng, alg, bound));
        upper.push_back(random_span_element(rng, alg, bound));
    }
    ToeplitzSpec spec(n, diag, std::move(lower), std::move(upper));
    switch (constraint) {
        case SpecConstraint::none:
            break;
        case SpecConstraint::lower_only:
            for (std::size_t k = 1; k < n; ++k) spec.upper(k) = DenseMat::zero(d);
            break;
        case SpecConstraint::upper_only:
            for (std::size_t k = 1; k < n; ++k) spec.lower(k) = DenseMat::zero(d);
            break;
        case SpecConstraint::hermitian:
            spec.diag() = spec.diag() + spec.diag().adjoint();
            for (std::size_t k = 1; k < n; ++k) spec.upper(k) = spec.lower(k);
            break;
        case SpecConstraint::sx_commutant: {
            if (!x) throw std::invalid_argument("shift-x constraint needs a corner block");
            const DenseMat xadj = x->adjoint();
            for (std::size_t k = 1; k < n; ++k)
                spec.upper(k) = xadj * spec.lower(n - k).adjoint();
            break;
        }
        case SpecConstraint::sx_star_commutant: {
            if (!x) throw std::invalid_argument("shift-x constraint needs a corner block");
            const DenseMat xadj = x->adjoint();
            for (std::size_t k = 1; k < n; ++k)
                spec.lower(k) = xadj * spec.upper(n - k).adjoint();
            break;
        }
    }
    return spec;
}

}  // namespace btx
