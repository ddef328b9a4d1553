#include <gtest/gtest.h>

#include <random>

#include "psgl2/closed_forms.hpp"
#include "psgl2/module.hpp"

using namespace psgl2;

namespace {

NClass cls(int p, int f, long long m) { return NClass::from_integer(p, f, m); }

Mat2 random_element(const RingSpec& R, std::mt19937_64& rng) {
    const int n = R.q() * R.q();
    for (;;) {
        Mat2 g;
        for (R2Elem* e : {&g.a, &g.b, &g.c, &g.d}) *e = R.element(static_cast<int>(rng() % n));
        if (mat_invertible(R, g)) return g;
    }
}

Vector random_vector(const FieldSpec& F, int n, std::mt19937_64& rng) {
    Vector v(n);
    for (auto& x : v) x = F.from_code(static_cast<int>(rng() % F.q()));
    return v;
}

struct RepCase {
    int p, f;
    Variant v;
    int n;
};

class RepProperties : public ::testing::TestWithParam<RepCase> {};

TEST_P(RepProperties, ActionIsAHomomorphism) {
    const auto c = GetParam();
    const RingPtr R = make_ring(c.p, c.f, c.v);
    std::mt19937_64 rng(99);
    for (long long rv : {1LL, int_pow(c.p, c.f) - 2, int_pow(c.p, c.f) - 1}) {
        if (rv < 1) continue;
        const RepSpace V(R, c.n, cls(c.p, c.f, rv));
        EXPECT_EQ(V.dim(), c.n == 2 ? R->q() * (R->q() + 1) : R->q() + 1);
        const Vector v0 = random_vector(V.field(), V.dim(), rng);
        EXPECT_EQ(V.act(mat_identity(*R), v0), v0);
        for (int t = 0; t < 20; ++t) {
            const Mat2 g = random_element(*R, rng), h = random_element(*R, rng);
            const Vector v = random_vector(V.field(), V.dim(), rng);
            EXPECT_EQ(V.act(mat_mul(*R, g, h), v), V.act(g, V.act(h, v)));
        }
    }
}

TEST_P(RepProperties, FBasisAndTorusEigenvalues) {
    const auto c = GetParam();
    const RingPtr R = make_ring(c.p, c.f, c.v);
    const FieldSpec& F = R->field();
    const NClass r = cls(c.p, c.f, 1);
    const RepSpace V(R, c.n, r);
    EXPECT_EQ(rank(V.field_ptr(), Matrix::from_columns(V.dim(), V.f_vectors())), V.dim());
    const Fq a = F.primitive(), d = F.from_int(2);
    for (const auto& x : V.f_labels()) {
        if (x.infinite) continue;
        const Fq ev = F.mul(F.pow_class(a, r), F.pow_class(F.div(d, a), nt_add(x.j0, x.j1)));
        Vector want = V.f_vector(x);
        scale(F, want, ev);
        EXPECT_EQ(V.act(mat_torus(*R, a, d), V.f_vector(x)), want) << x.to_string();
    }
    for (const auto& x : V.f_labels()) {
        const Vector v = V.f_vector(x);
        const Vector coords = V.f_coordinates(v);
        EXPECT_EQ(coords, unit_vector(V.dim(), V.f_index(x)));
    }
}

INSTANTIATE_TEST_SUITE_P(Small, RepProperties,
                         ::testing::Values(RepCase{3, 1, Variant::EqualChar, 2}, RepCase{3, 1, Variant::Witt, 2},
                                           RepCase{5, 1, Variant::Witt, 2}, RepCase{3, 2, Variant::EqualChar, 2},
                                           RepCase{3, 2, Variant::Witt, 1}, RepCase{5, 1, Variant::EqualChar, 1}));

TEST(RepSpace, NOneZeroLabelIsAllOnes) {
    const RepSpace V(make_ring(5, 1, Variant::EqualChar), 1, cls(5, 1, 2));
    const Vector f0 = V.f_vector(ThetaElem::finite(NClass::zero(5, 1), NClass::zero(5, 1)));
    for (int i = 0; i < 5; ++i) EXPECT_EQ(f0[i].code, 1);
    EXPECT_EQ(f0[5].code, 0);
}

TEST(RepSpace, WeylElementOnFLabels) {
    const RepSpace V(make_ring(3, 1, Variant::EqualChar), 2, cls(3, 1, 1));
    const Mat2 w = mat_w(V.ring());
    const NClass z = NClass::zero(3, 1);
    for (const auto& j1 : nt_enumerate(3, 1))
        EXPECT_EQ(V.act(w, V.f_vector(ThetaElem::finite(z, j1))), V.f_vector(ThetaElem::at_infinity(j1)));
    Vector want = V.f_vector(ThetaElem::finite(cls(3, 1, 2), z));
    scale(V.field(), want, V.field().from_int(-1));
    EXPECT_EQ(V.act(w, V.f_vector(ThetaElem::finite(cls(3, 1, 1), z))), want);
}

TEST(RepSpace, ClosedFormsAgreeWithAction) {
    for (auto [p, f, v] : {std::tuple{3, 1, Variant::EqualChar}, {3, 2, Variant::EqualChar}, {3, 1, Variant::Witt}}) {
        const RingPtr R = make_ring(p, f, v);
        const FieldSpec& F = R->field();
        for (long long rv = 1; rv < int_pow(p, f); ++rv) {
            const RepSpace V(R, 2, cls(p, f, rv));
            for (const auto& x : V.f_labels()) {
                const Vector fx = V.f_vector(x);
                EXPECT_EQ(V.act(mat_w(*R), fx), closed::w_image(V, x));
                for (Fq b : F.prime_basis()) {
                    EXPECT_EQ(V.act(mat_upper(*R, R->teich(b)), fx), closed::upper_image(V, R->teich(b), x));
                    EXPECT_EQ(V.act(mat_diag(*R, R->one(), {F.one(), b}), fx), closed::diag1_image(V, b, x));
                    if (!x.infinite)
                        EXPECT_EQ(V.act(mat_lower(*R, {F.zero(), b}), fx), closed::lower_image(V, b, x));
                }
            }
        }
    }
}

TEST(Submodules, FiltrationPiecesAndTameSpin) {
    for (auto [p, f] : {std::pair{5, 1}, {3, 2}}) {
        const RingPtr R = make_ring(p, f, Variant::EqualChar);
        const auto gens = std::make_shared<const GeneratorSet>(R);
        for (long long rv = 1; rv < int_pow(p, f); ++rv) {
            const NClass r = cls(p, f, rv);
            const auto V2 = std::make_shared<const RepSpace>(R, 2, r);
            const RepAction A2(V2, gens);
            EXPECT_EQ(wbeta_subspace(*V2, NClass::top(p, f)).dim(), V2->dim());
            for (const auto& beta : nt_enumerate(p, f)) {
                const Subspace W = wbeta_subspace(*V2, beta);
                EXPECT_TRUE(is_stable(A2, W));
                EXPECT_EQ(W.dim() - wbeta_below(*V2, beta).dim(), V2->q() + 1);
            }
            const auto V1 = std::make_shared<const RepSpace>(R, 1, r);
            const RepAction A1(V1, gens);
            const Subspace tame = tame_subspace(*V1, CarrySet::empty(f));
            EXPECT_EQ(spin(A1, V1->f_vector(ThetaElem::at_infinity(NClass::zero(p, f)))).dim(), tame.dim());
            EXPECT_TRUE(spin(A1, V1->f_vector(ThetaElem::at_infinity(NClass::zero(p, f)))).subset_of(tame));
            EXPECT_EQ(spin(A1, Vector(V1->dim())).dim(), 0);
        }
    }
}

TEST(Submodules, UnramifiedGenerators) {
    const RingPtr R = make_ring(7, 1, Variant::Witt);
    const RepSpace V(R, 2, cls(7, 1, 3));
    EXPECT_EQ(m_chi_generator(V), V.f_vector(ThetaElem::finite(NClass::zero(7, 1), cls(7, 1, 1))));
    const UnramTheta top{CarrySet::empty(1), CarrySet::full(1)};
    EXPECT_EQ(f_theta_vector(V, top), m_chi_generator(V));
    const UnramTheta j0{CarrySet::full(1), CarrySet::empty(1)};
    EXPECT_EQ(f_theta_vector(V, j0), V.f_vector(ThetaElem::finite(cls(7, 1, 3), NClass::zero(7, 1))));
    EXPECT_THROW(m_chi_generator(RepSpace(make_ring(7, 1, Variant::EqualChar), 2, cls(7, 1, 3))), std::invalid_argument);
}

}  // namespace
