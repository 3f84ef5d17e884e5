#include <catch2/catch_amalgamated.hpp>

#include "btx/generate.hpp"
#include "btx/io.hpp"

using namespace btx;

TEST_CASE("per-trial seeds are counter-derived") {
    CHECK(derive_seed(42, 0) != derive_seed(42, 1));
    CHECK(derive_seed(42, 5) == derive_seed(42, 5));
    CHECK(derive_seed(42, 5) != derive_seed(43, 5));
}

TEST_CASE("algebra kinds") {
    CommAlgebra diag = gen_algebra(AlgebraKind::diagonal, 2, 1);
    CHECK(diag.basis().size() == 2);
    CHECK(diag.contains(DenseMat::unit(2, 0, 0)));
    CHECK(diag.contains(DenseMat::identity(2)));

    CommAlgebra circ = gen_algebra(AlgebraKind::circulant, 3, 1);
    CHECK(circ.basis().size() == 3);
    DenseMat c = DenseMat::cyclic_shift(3);
    CHECK(circ.contains(c));
    CHECK(circ.contains(c * c));
    CHECK((c * c * c) == DenseMat::identity(3));

    for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            CommAlgebra poly = gen_algebra(AlgebraKind::poly, d, seed);
            CHECK(poly.contains(DenseMat::identity(d)));
            // sampled generators are Hermitian, so every element is normal
            Rng rng(seed);
            for (int t = 0; t < 10; ++t) {
                DenseMat m = random_span_element(rng, poly, 4);
                REQUIRE(m.is_normal());
                REQUIRE(poly.contains(m.adjoint()));
            }
            CommAlgebra ex = gen_algebra(AlgebraKind::explicit_basis, d, seed);
            CHECK(ex.contains(DenseMat::identity(d)));
        }
    }
}

TEST_CASE("algebra sampling is deterministic per seed") {
    for (auto kind : {AlgebraKind::diagonal, AlgebraKind::circulant, AlgebraKind::poly,
                      AlgebraKind::explicit_basis}) {
        CommAlgebra a = gen_algebra(kind, 3, 1234);
        CommAlgebra b = gen_algebra(kind, 3, 1234);
        REQUIRE(a.basis().size() == b.basis().size());
        for (std::size_t k = 0; k < a.basis().size(); ++k)
            REQUIRE(a.basis()[k] == b.basis()[k]);
    }
}

TEST_CASE("unitary generation") {
    Rng rng(5);
    for (auto kind : {AlgebraKind::diagonal, AlgebraKind::circulant, AlgebraKind::poly}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            CommAlgebra alg = gen_algebra(kind, d, rng.next());
            for (int t = 0; t < 10; ++t) {
                DenseMat x = gen_unitary(alg, rng.next());
                REQUIRE(x.is_unitary());
                REQUIRE(alg.in_commutant(x));
            }
        }
    }
    // i * I is always available
    CommAlgebra diag = gen_algebra(AlgebraKind::diagonal, 2, 0);
    DenseMat xi = GaussianRational::i() * DenseMat::identity(2);
    CHECK(xi.is_unitary());
    CHECK(diag.in_commutant(xi));
}

TEST_CASE("unitary generation is deterministic") {
    CommAlgebra alg = gen_algebra(AlgebraKind::circulant, 3, 7);
    CHECK(gen_unitary(alg, 99) == gen_unitary(alg, 99));
}

TEST_CASE("commutant element sampling") {
    Rng rng(11);
    for (auto kind : {AlgebraKind::diagonal, AlgebraKind::circulant, AlgebraKind::poly}) {
        CommAlgebra alg = gen_algebra(kind, 3, rng.next());
        for (int t = 0; t < 10; ++t) {
            DenseMat x = gen_commutant_element(alg, rng.next());
            REQUIRE(alg.in_commutant(x));
        }
    }
}

TEST_CASE("spec constraints") {
    Rng rng(13);
    CommAlgebra alg = gen_algebra(AlgebraKind::circulant, 2, rng.next());

    ToeplitzSpec lo = gen_spec(alg, 4, rng.next(), SpecConstraint::lower_only);
    CHECK(lo.upper_column().is_zero());
    ToeplitzSpec up = gen_spec(alg, 4, rng.next(), SpecConstraint::upper_only);
    CHECK(up.lower_column().is_zero());

    DenseMat x = gen_commutant_element(alg, rng.next());
    ToeplitzSpec sx = gen_spec(alg, 4, rng.next(), SpecConstraint::sx_commutant, &x);
    auto rec = toeplitz_recognize(sx.build());
    REQUIRE(rec);
    for (std::size_t k = 1; k < 4; ++k)
        REQUIRE(rec->upper(k) == x.adjoint() * rec->lower(4 - k).adjoint());

    ToeplitzSpec sxs = gen_spec(alg, 4, rng.next(), SpecConstraint::sx_star_commutant, &x);
    for (std::size_t k = 1; k < 4; ++k)
        REQUIRE(sxs.lower(k) == x.adjoint() * sxs.upper(4 - k).adjoint());

    ToeplitzSpec h = gen_spec(alg, 4, rng.next(), SpecConstraint::hermitian);
    CHECK(h.build().adjoint() == h.build());

    CHECK_THROWS_AS(gen_spec(alg, 4, 1, SpecConstraint::sx_commutant, nullptr),
                    std::invalid_argument);
    CHECK_THROWS_AS(spec_constraint_from_string("bogus"), std::invalid_argument);
    CHECK(spec_constraint_from_string("lower_only") == SpecConstraint::lower_only);
}

TEST_CASE("spec sampling is deterministic per seed") {
    CommAlgebra alg = gen_algebra(AlgebraKind::poly, 2, 3);
    ToeplitzSpec a = gen_spec(alg, 3, 555);
    ToeplitzSpec b = gen_spec(alg, 3, 555);
    CHECK(a == b);
    ToeplitzSpec c = gen_spec(alg, 3, 556);
    CHECK(!(a == c));
}

TEST_CASE("config validation") {
    TrialConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = TrialConfig{};
    cfg.n_lo = 3;
    cfg.n_hi = 2;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = TrialConfig{};
    cfg.kinds.clear();
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK(algebra_kind_from_string("circulant") == AlgebraKind::circulant);
    CHECK_THROWS_AS(algebra_kind_from_string("fancy"), std::invalid_argument);
}
