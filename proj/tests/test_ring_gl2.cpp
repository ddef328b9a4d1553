#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "psgl2/gl2.hpp"

using namespace psgl2;

namespace {

struct WittCase {
    int p, f;
};

class WittOracle : public ::testing::TestWithParam<WittCase> {};

// Addition and multiplication agree with the Galois ring (Z/p^2)[x]/(lift of the modulus).
TEST_P(WittOracle, MatchesGaloisRing) {
    const auto [p, f] = GetParam();
    const RingPtr R = make_ring(p, f, Variant::Witt);
    const FieldSpec& k = R->field();
    const oracle::GaloisRing G(p, k.modulus());
    auto enc = [&](const R2Elem& a) { return G.encode(k.coeffs(a.a0), k.coeffs(a.a1)); };
    auto dec = [&](const std::vector<long long>& z) {
        auto [c0, c1] = G.decode(z);
        return R2Elem{k.from_coeffs(c0), k.from_coeffs(c1)};
    };
    for (const R2Elem& a : R->enumerate()) {
        ASSERT_EQ(dec(enc(a)), a);
        for (const R2Elem& b : R->enumerate()) {
            EXPECT_EQ(R->add(a, b), dec(G.R.add(enc(a), enc(b))));
            EXPECT_EQ(R->mul(a, b), dec(G.R.mul(enc(a), enc(b))));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Small, WittOracle, ::testing::Values(WittCase{3, 1}, WittCase{5, 1}, WittCase{7, 1},
                                                              WittCase{3, 2}, WittCase{5, 2}));

TEST(Ring, WittSPolynomial) {
    const RingPtr R = make_ring(3, 1, Variant::Witt);
    const FieldSpec& k = R->field();
    EXPECT_EQ(R->witt_S(k.from_int(1), k.from_int(1)), k.from_int(1));
    for (Fq x : k.enumerate()) {
        EXPECT_EQ(R->witt_S(x, k.zero()), k.zero());
        for (Fq y : k.enumerate()) EXPECT_EQ(R->witt_S(x, y), R->witt_S(y, x));
    }
    // [1] + [1] = 2 = [2] + 3[1] in Z/9 since [2] = 8.
    EXPECT_EQ(R->add(R->one(), R->one()), (R2Elem{k.from_int(2), k.from_int(1)}));
    EXPECT_EQ(R->mul(R->teich(k.from_int(2)), R->teich(k.from_int(2))), R->one());
}

TEST(Ring, EqualCharIsDualNumbers) {
    const RingPtr R = make_ring(3, 2, Variant::EqualChar);
    const FieldSpec& k = R->field();
    for (const R2Elem& a : R->enumerate())
        for (const R2Elem& b : R->enumerate()) {
            EXPECT_EQ(R->add(a, b), (R2Elem{k.add(a.a0, b.a0), k.add(a.a1, b.a1)}));
            EXPECT_EQ(R->mul(a, b), (R2Elem{k.mul(a.a0, b.a0), k.add(k.mul(a.a0, b.a1), k.mul(a.a1, b.a0))}));
        }
    const R2Elem pi = R->uniformizer();
    EXPECT_EQ(R->mul(pi, pi), R->zero());
    EXPECT_EQ(R->mul(R->add(R->one(), pi), R->sub(R->one(), pi)), R->one());
}

TEST(Ring, AxiomsAndInverses) {
    for (Variant v : {Variant::EqualChar, Variant::Witt}) {
        const RingPtr R = make_ring(5, 1, v);
        const FieldSpec& k = R->field();
        std::mt19937_64 rng(7);
        auto rnd = [&] { return R->element(static_cast<int>(rng() % 25)); };
        for (int t = 0; t < 2000; ++t) {
            const R2Elem a = rnd(), b = rnd(), c = rnd();
            EXPECT_EQ(R->add(R->add(a, b), c), R->add(a, R->add(b, c)));
            EXPECT_EQ(R->mul(R->mul(a, b), c), R->mul(a, R->mul(b, c)));
            EXPECT_EQ(R->mul(a, R->add(b, c)), R->add(R->mul(a, b), R->mul(a, c)));
            EXPECT_EQ(R->mul(a, R->one()), a);
            if (R->is_unit(a)) EXPECT_EQ(R->mul(a, R->inv(a)), R->one());
        }
        const R2Elem x{k.one(), k.one()};
        EXPECT_EQ(R->inv(x), (R2Elem{k.one(), k.neg(k.one())}));
        EXPECT_THROW(R->inv(R->uniformizer()), std::domain_error);
    }
}

TEST(GL2, GroupOrderOverZmod9) {
    for (Variant v : {Variant::EqualChar, Variant::Witt}) {
        const RingPtr R = make_ring(3, 1, v);
        const auto els = R->enumerate();
        long long count = 0;
        for (const auto& a : els)
            for (const auto& b : els)
                for (const auto& c : els)
                    for (const auto& d : els) count += mat_invertible(*R, {a, b, c, d});
        EXPECT_EQ(count, 3888);
    }
}

TEST(GL2, CosetFactorRoundTrip) {
    for (Variant v : {Variant::EqualChar, Variant::Witt}) {
        const RingPtr R = make_ring(3, 1, v);
        const auto els = R->enumerate();
        std::set<std::tuple<bool, int, int>> labels;
        for (const auto& a : els)
            for (const auto& b : els)
                for (const auto& c : els)
                    for (const auto& d : els) {
                        const Mat2 g{a, b, c, d};
                        if (!mat_invertible(*R, g)) continue;
                        const CosetFactor cf = coset_factor(*R, g);
                        EXPECT_TRUE(mat_is_upper(*R, cf.b));
                        EXPECT_EQ(mat_mul(*R, coset_matrix(*R, cf.xi), cf.b), g);
                        labels.insert({cf.xi.second_kind, R->index(cf.xi.lambda), cf.xi.mu.code});
                    }
        EXPECT_EQ(labels.size(), 12u);  // q^2 + q cosets of B
    }
    const RingPtr R = make_ring(5, 2, Variant::Witt);
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 10000) {
        Mat2 g;
        for (R2Elem* e : {&g.a, &g.b, &g.c, &g.d}) *e = R->element(static_cast<int>(rng() % (25 * 25)));
        if (!mat_invertible(*R, g)) continue;
        const CosetFactor cf = coset_factor(*R, g);
        ASSERT_EQ(mat_mul(*R, coset_matrix(*R, cf.xi), cf.b), g);
        ++checked;
    }
}

TEST(GL2, SpecialCosets) {
    const RingPtr R = make_ring(5, 1, Variant::EqualChar);
    const Mat2 w = mat_w(*R);
    EXPECT_EQ(mat_mul(*R, w, w), mat_identity(*R));
    EXPECT_EQ(mat_det(*R, w), R->neg(R->one()));
    const CosetFactor cw = coset_factor(*R, w);
    EXPECT_FALSE(cw.xi.second_kind);
    EXPECT_EQ(cw.xi.lambda, R->zero());
    EXPECT_EQ(cw.b, mat_identity(*R));
    const Mat2 u = mat_upper(*R, R->make(R->field().from_int(2), R->field().from_int(3)));
    const CosetFactor cu = coset_factor(*R, u);
    EXPECT_TRUE(cu.xi.second_kind);
    EXPECT_EQ(cu.xi.mu, R->field().zero());
    EXPECT_EQ(cu.b, u);
}

TEST(GL2, InverseAndCharacter) {
    const RingPtr R = make_ring(3, 2, Variant::Witt);
    const FieldSpec& k = R->field();
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
        Mat2 g;
        for (R2Elem* e : {&g.a, &g.b, &g.c, &g.d}) *e = R->element(static_cast<int>(rng() % 81));
        if (!mat_invertible(*R, g)) continue;
        EXPECT_EQ(mat_mul(*R, g, mat_inv(*R, g)), mat_identity(*R));
    }
    const Fq g = k.primitive();
    EXPECT_EQ(chi_r(*R, mat_identity(*R), NClass::from_integer(3, 2, 5)), k.one());
    EXPECT_EQ(chi_r(*R, mat_torus(*R, k.one(), g), NClass::top(3, 2)), k.one());
    EXPECT_EQ(chi_r(*R, mat_torus(*R, k.one(), g), NClass::from_integer(3, 2, 1)), g);
}

TEST(GL2, GeneratorRecipe) {
    const RingPtr R = make_ring(3, 1, Variant::EqualChar);
    const GeneratorSet G(R);
    EXPECT_EQ(G.size(), 6);
    for (const auto& g : G) EXPECT_TRUE(mat_invertible(*R, g.m));
    EXPECT_EQ(GeneratorSet(make_ring(3, 2, Variant::Witt)).size(), 9);
}

}  // namespace
