#include <catch2/catch_amalgamated.hpp>

#include "btx/generate.hpp"
#include "btx/normality.hpp"

using namespace btx;

namespace {
GaussianRational gq(long a, long b = 1) { return GaussianRational(a, b, 0, 1); }
DenseMat sc(const GaussianRational& v) { return DenseMat{{v}}; }
DenseMat sc(long v) { return sc(gq(v)); }

BlockMatrix two_by_two(const GaussianRational& up, const GaussianRational& lo) {
    BlockMatrix m(2, 1);
    m(0, 1) = sc(up);
    m(1, 0) = sc(lo);
    return m;
}
}  // namespace

TEST_CASE("normality defect") {
    BlockMatrix herm(2, 1);
    herm(0, 0) = sc(3);
    herm(0, 1) = sc(GaussianRational(1, 1, 2, 1));
    herm(1, 0) = sc(GaussianRational(1, 1, -2, 1));
    herm(1, 1) = sc(-4);
    CHECK(normal_defect(herm).is_zero());

    // |3+4i| == |5|
    BlockMatrix n1 = two_by_two(gq(5), GaussianRational(3, 1, 4, 1));
    CHECK(normal_defect(n1).is_zero());

    BlockMatrix n2 = two_by_two(gq(1), gq(2));
    BlockMatrix d = normal_defect(n2);
    CHECK(d(0, 0) == sc(3));
    CHECK(d(1, 1) == sc(-3));
    CHECK(d(0, 1).is_zero());
}

TEST_CASE("entrywise defect sums") {
    CHECK(lemma51_sums(BlockMatrix::identity(3, 2)).all_zero());

    auto s = lemma51_sums(two_by_two(gq(5), GaussianRational(3, 1, 4, 1)));
    REQUIRE(s.diagonal.size() == 2);
    CHECK(s.diagonal[0].is_zero());
    CHECK(s.diagonal[1].is_zero());
    CHECK(s.all_zero());

    auto bad = lemma51_sums(two_by_two(gq(1), gq(2)));
    CHECK(!bad.all_zero());
    CHECK(!normal_defect(two_by_two(gq(1), gq(2))).is_zero());
}

TEST_CASE("sums match the defect on algebra-valued matrices") {
    Rng rng(61);
    for (int t = 0; t < 150; ++t) {
        CommAlgebra alg = gen_algebra(t % 2 == 0 ? AlgebraKind::poly : AlgebraKind::circulant,
                                      1 + rng.below(3), rng.next());
        std::size_t n = 1 + rng.below(4);
        BlockMatrix m(n, alg.dim());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = random_span_element(rng, alg, 4);
        REQUIRE(lemma51_sums(m).all_zero() == normal_defect(m).is_zero());
    }
}

TEST_CASE("four-term criterion on scalar specs") {
    ToeplitzSpec yes(2, sc(0), {sc(GaussianRational(3, 1, 4, 1))}, {sc(5)});
    NormalityReport r1 = normality_criterion(yes);
    CHECK(r1.is_normal);
    CHECK(!r1.criterion_witness);
    CHECK(r1.defect.is_zero());
    CHECK(r1.criterion_matches_defect);

    ToeplitzSpec no(2, sc(0), {sc(2)}, {sc(1)});
    NormalityReport r2 = normality_criterion(no);
    CHECK(!r2.is_normal);
    REQUIRE(r2.criterion_witness);
    CHECK(*r2.criterion_witness == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(r2.defect(0, 0) == sc(3));
    CHECK(r2.defect(1, 1) == sc(-3));
    CHECK(r2.criterion_matches_defect);
}

TEST_CASE("Hermitian specs are normal") {
    Rng rng(67);
    for (int t = 0; t < 60; ++t) {
        CommAlgebra alg = gen_algebra(AlgebraKind::poly, 1 + rng.below(3), rng.next());
        ToeplitzSpec s =
            gen_spec(alg, 2 + rng.below(4), rng.next(), SpecConstraint::hermitian);
        REQUIRE(s.build().adjoint() == s.build());
        NormalityReport r = normality_criterion(s);
        REQUIRE(r.is_normal);
        REQUIRE(r.defect.is_zero());
    }
}

TEST_CASE("witness soundness") {
    Rng rng(71);
    int witnessed = 0;
    for (int t = 0; t < 120; ++t) {
        CommAlgebra alg = gen_algebra(AlgebraKind::diagonal, 1 + rng.below(3), rng.next());
        std::size_t n = 2 + rng.below(3);
        ToeplitzSpec s = gen_spec(alg, n, rng.next());
        NormalityReport r = normality_criterion(s);
        REQUIRE(r.criterion_matches_defect);
        if (r.criterion_witness) {
            ++witnessed;
            auto [ws, wk] = *r.criterion_witness;
            DenseMat lhs = s.lower(ws) * s.lower(wk).adjoint() +
                           s.lower(n - ws).adjoint() * s.lower(n - wk);
            DenseMat rhs = s.upper(ws) * s.upper(wk).adjoint() +
                           s.upper(n - ws).adjoint() * s.upper(n - wk);
            REQUIRE(!(lhs == rhs));
        }
    }
    CHECK(witnessed > 0);  // random specs are rarely normal
}

TEST_CASE("unitary-corner commutants are normal") {
    // d=1, x = (3+4i)/5, n=2, lower=(1): the built matrix is
    // [[a0, (3+4i)/5],[1, a0]]
    GaussianRational x(3, 5, 4, 5);
    DenseMat xm = sc(x);
    ToeplitzSpec s(2, sc(7), {sc(1)}, {sc(x.conj())});
    BlockMatrix m = s.build();
    CHECK(m(0, 1) == sc(x));
    CHECK(circulant_normality(s, xm));
    CHECK(normal_defect(m).is_zero());

    // scalar circulants: x = 1
    ToeplitzSpec circ(3, sc(2), {sc(1), sc(5)}, {sc(5), sc(1)});
    CHECK(circulant_normality(circ, DenseMat::identity(1)));
    CHECK(normal_defect(circ.build()).is_zero());

    // non-unitary corner
    CHECK_THROWS_AS(circulant_normality(circ, sc(2)), PreconditionError);
    // spec that does not commute with the shift
    ToeplitzSpec skew(2, sc(0), {sc(2)}, {sc(1)});
    CHECK_THROWS_AS(circulant_normality(skew, DenseMat::identity(1)), PreconditionError);

    Rng rng(73);
    for (int t = 0; t < 60; ++t) {
        CommAlgebra alg = gen_algebra(AlgebraKind::circulant, 1 + rng.below(3), rng.next());
        DenseMat xu = gen_unitary(alg, rng.next());
        ToeplitzSpec sp =
            gen_spec(alg, 2 + rng.below(3), rng.next(), SpecConstraint::sx_commutant, &xu);
        REQUIRE(circulant_normality(sp, xu, &alg));
        REQUIRE(normal_defect(sp.build()).is_zero());
    }
}

TEST_CASE("criterion, sums and defect coincide on random Toeplitz specs") {
    Rng rng(79);
    int normal_count = 0, other = 0;
    for (int t = 0; t < 200; ++t) {
        AlgebraKind kind = t % 3 == 0   ? AlgebraKind::diagonal
                           : t % 3 == 1 ? AlgebraKind::circulant
                                        : AlgebraKind::poly;
        CommAlgebra alg = gen_algebra(kind, 1 + rng.below(3), rng.next());
        std::size_t n = 2 + rng.below(4);
        ToeplitzSpec s = t % 2 == 0
                             ? gen_spec(alg, n, rng.next(), SpecConstraint::hermitian)
                             : gen_spec(alg, n, rng.next());
        NormalityReport r = normality_criterion(s);
        bool sums = lemma51_sums(s.build()).all_zero();
        REQUIRE(r.criterion_matches_defect);
        REQUIRE(sums == r.defect.is_zero());
        (r.is_normal ? normal_count : other)++;
    }
    CHECK(normal_count >= 40);
    CHECK(other >= 40);
}
