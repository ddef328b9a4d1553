#include <gtest/gtest.h>

#include <random>

#include "psgl2/psrep.hpp"
#include "psgl2/module.hpp"

using namespace psgl2;

namespace {

NClass cls(int p, int f, long long m) { return NClass::from_integer(p, f, m); }

Vector random_vector(const FieldSpec& F, int n, std::mt19937_64& rng) {
    Vector v(n);
    for (auto& x : v) x = F.from_code(static_cast<int>(rng() % F.q()));
    return v;
}

TEST(Linalg, InverseRankAndKernel) {
    const FieldPtr F = make_field(3, 2);
    std::mt19937_64 rng(5);
    int inverted = 0;
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 6);
        std::vector<Vector> cols;
        for (int j = 0; j < n; ++j) cols.push_back(random_vector(*F, n, rng));
        if (t % 3 == 0) cols.back() = vec_add(*F, cols[0], cols[1]);  // force a singular matrix now and then
        const Matrix A = Matrix::from_columns(n, cols);
        const int rk = rank(F, A);
        const Subspace K = kernel(F, A);
        EXPECT_EQ(K.dim(), n - rk);
        for (const auto& v : K.rows()) EXPECT_TRUE(is_zero(mat_vec(*F, A, v)));
        const auto inv = inverse(*F, A);
        EXPECT_EQ(inv.has_value(), rk == n);
        if (inv) {
            ++inverted;
            const Matrix I = mat_mul(*F, A, *inv);
            for (int i = 0; i < n; ++i) EXPECT_EQ(mat_vec(*F, I, unit_vector(n, i)), unit_vector(n, i));
        }
    }
    EXPECT_GT(inverted, 0);
}

TEST(Linalg, SumAndIntersectionDimensions) {
    const FieldPtr F = make_field(5, 1);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        const int n = 6;
        std::vector<Vector> a, b;
        for (int i = 0; i < 3; ++i) a.push_back(random_vector(*F, n, rng));
        for (int i = 0; i < 4; ++i) b.push_back(random_vector(*F, n, rng));
        b[0] = a[0];
        const Subspace A = Subspace::span(F, n, a), B = Subspace::span(F, n, b);
        const Subspace S = subspace_sum(A, B), I = subspace_intersection(A, B);
        EXPECT_EQ(S.dim() + I.dim(), A.dim() + B.dim());
        EXPECT_TRUE(I.subset_of(A));
        EXPECT_TRUE(I.subset_of(B));
        EXPECT_TRUE(A.subset_of(S));
        EXPECT_TRUE(I.contains(a[0]));
    }
}

TEST(Modules, WeightModelsAreAbsolutelyIrreducible) {
    const RingPtr R = make_ring(3, 2, Variant::EqualChar);
    const auto gens = std::make_shared<const GeneratorSet>(R);
    const auto ws = distinct_weights(jh_multiset(2, {NClass::zero(3, 2), cls(3, 2, 4)}));
    const auto models = weight_models(ws, R->field_ptr(), gens);
    for (const auto& L : models) {
        EXPECT_EQ(L.module.dim(), L.weight.dimension());
        EXPECT_EQ(hom_space(L.module, L.module).size(), 1u) << L.weight.to_string();
        EXPECT_EQ(identify_weight(L.module), L.weight);
        for (const auto& K : models)
            if (!(K.weight == L.weight)) EXPECT_TRUE(hom_space(L.module, K.module).empty());
    }
}

TEST(Modules, SteinbergCaseSplits) {
    // V_{1,q-1} is the direct sum of the trivial weight and F(q-1, 0).
    for (auto [p, f] : {std::pair{5, 1}, {3, 2}}) {
        const RingPtr R = make_ring(p, f, Variant::EqualChar);
        const auto gens = std::make_shared<const GeneratorSet>(R);
        const NClass top = NClass::top(p, f);
        const auto V = std::make_shared<const RepSpace>(R, 1, top);
        const RepAction A(V, gens);
        const Module M = Module::from_action(A);
        const auto cands = weight_models(jh_multiset(1, {NClass::zero(p, f), top}), R->field_ptr(), gens);
        EXPECT_EQ(socle(M, cands).dim(), M.dim());
        EXPECT_EQ(radical(M, cands).dim(), 0);
        const auto cs = semisimple_constituents(M, cands);
        ASSERT_EQ(cs.size(), 2u);
        const Subspace tame = tame_subspace(*V, CarrySet::empty(f));
        EXPECT_EQ(identify_weight(restrict_module(A, tame)).to_string(), "F(" + std::to_string(top.to_integer()) + ",0)");
        const Module Q = quotient_module(A, tame);
        EXPECT_EQ(Q.dim(), 1);
        EXPECT_EQ(identify_weight(Q).dimension(), 1);
    }
}

TEST(Modules, QuotientByZeroAndHomIdentity) {
    const RingPtr R = make_ring(5, 1, Variant::EqualChar);
    const auto gens = std::make_shared<const GeneratorSet>(R);
    const auto V = std::make_shared<const RepSpace>(R, 1, cls(5, 1, 2));
    const RepAction A(V, gens);
    const Module M = Module::from_action(A);
    const Module Q = quotient_module(A, Subspace(V->field_ptr(), V->dim()));
    EXPECT_EQ(Q.dim(), M.dim());
    EXPECT_GE(hom_space(M, M).size(), 1u);
    const auto cands = weight_models(jh_multiset(1, {NClass::zero(5, 1), cls(5, 1, 2)}), R->field_ptr(), gens);
    const auto soc = socle_filtration(M, cands);
    const auto rad = radical_filtration(M, cands);
    EXPECT_EQ(soc.back().dim(), M.dim());
    EXPECT_EQ(rad.back().dim(), 0);
    EXPECT_EQ(soc.size(), rad.size());
    const auto cf = composition_factors(M);
    long long total = 0;
    for (const auto& w : cf) total += w.dimension();
    EXPECT_EQ(total, M.dim());
}

TEST(Modules, NortonDetectsReducibility) {
    const RingPtr R = make_ring(5, 1, Variant::EqualChar);
    const auto gens = std::make_shared<const GeneratorSet>(R);
    const auto V = std::make_shared<const RepSpace>(R, 2, cls(5, 1, 1));
    const RepAction A(V, gens);
    const Module W0 = restrict_module(A, wbeta_subspace(*V, NClass::zero(5, 1)));
    EXPECT_EQ(norton_test(W0).decision, Decision::Reducible);
    const Module L = weight_module(SerreWeight(NClass::zero(5, 1), {3}), R->field_ptr(), gens);
    EXPECT_EQ(norton_test(L).decision, Decision::Irreducible);
}

}  // namespace
