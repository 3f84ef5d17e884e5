#include <catch2/catch_amalgamated.hpp>

#include "btx/rng.hpp"
#include "btx/scalar.hpp"

using btx::GaussianRational;

namespace {
GaussianRational gq(long rn, long rd, long in, long id) {
    return GaussianRational(rn, rd, in, id);
}
GaussianRational rand_scalar(btx::Rng& rng) {
    return gq(rng.range(-9, 9), rng.range(1, 9), rng.range(-9, 9), rng.range(1, 9));
}
}  // namespace

TEST_CASE("arithmetic basics") {
    GaussianRational one_plus_i = gq(1, 1, 1, 1);
    CHECK(one_plus_i / one_plus_i == GaussianRational::one());
    CHECK(one_plus_i / GaussianRational(2) == gq(1, 2, 1, 2));
    // (3+4i)(3-4i) = 25
    CHECK(gq(3, 1, 4, 1) * gq(3, 1, -4, 1) == GaussianRational(25));
    CHECK_THROWS_AS(one_plus_i / GaussianRational::zero(), std::domain_error);
}

TEST_CASE("conjugation") {
    CHECK(gq(3, 2, 2, 1).conj() == gq(3, 2, -2, 1));
    CHECK(GaussianRational(5).conj() == GaussianRational(5));
    GaussianRational u = gq(3, 5, 4, 5);  // (3+4i)/5, unit modulus
    CHECK(u * u.conj() == GaussianRational::one());
    btx::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        GaussianRational a = rand_scalar(rng), b = rand_scalar(rng);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("field axioms on random triples") {
    btx::Rng rng(2024);
    for (int t = 0; t < 10000; ++t) {
        GaussianRational a = rand_scalar(rng), b = rand_scalar(rng), c = rand_scalar(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) REQUIRE(a / a == GaussianRational::one());
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
        REQUIRE(a - a == GaussianRational::zero());
    }
}

TEST_CASE("canonical form makes equality structural") {
    CHECK(gq(2, 4, 0, 1) == gq(1, 2, 0, 3));          // 2/4 == 1/2, 0/1 == 0/3
    CHECK(gq(-2, -4, 0, 1) == gq(1, 2, 0, 1));        // sign normalization
    CHECK(gq(6, 3, -4, 2) == GaussianRational(2, 1, -2, 1));
}

TEST_CASE("text form") {
    CHECK(gq(3, 5, 4, 5).str() == "3/5+4/5i");
    CHECK(GaussianRational(-2).str() == "-2+0i");
    CHECK(gq(0, 1, -1, 3).str() == "0-1/3i");

    CHECK(GaussianRational::parse("3/5+4/5i") == gq(3, 5, 4, 5));
    CHECK(GaussianRational::parse("-2+0/1i") == GaussianRational(-2));
    CHECK(GaussianRational::parse("3+4i") == gq(3, 1, 4, 1));
    CHECK(GaussianRational::parse("-7") == GaussianRational(-7));
    CHECK(GaussianRational::parse("i") == GaussianRational::i());
    CHECK(GaussianRational::parse("-i") == -GaussianRational::i());
    CHECK(GaussianRational::parse("5i") == gq(0, 1, 5, 1));
    CHECK(GaussianRational::parse("1/2-i") == gq(1, 2, -1, 1));
    CHECK(GaussianRational::parse(" 3 + 4i ") == gq(3, 1, 4, 1));

    CHECK_THROWS_AS(GaussianRational::parse("3//4"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse("3+4j"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse("3+4i+5i"), std::invalid_argument);
    CHECK_THROWS_AS(GaussianRational::parse("1/0"), std::invalid_argument);

    btx::Rng rng(5);
    for (int t = 0; t < 500; ++t) {
        GaussianRational a = rand_scalar(rng);
        CHECK(GaussianRational::parse(a.str()) == a);
    }
}
