#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "psgl2/weights.hpp"

using namespace psgl2;

namespace {

NClass cls(int p, int f, long long m) { return NClass::from_integer(p, f, m); }

TEST(SerreWeight, SigmaTables) {
    const NClass r = cls(3, 2, 5);
    EXPECT_TRUE(s_class(CarrySet::empty(2), r).is_zero());
    EXPECT_EQ(s_class(CarrySet::full(2), r), r);
    const SerreWeight w0 = sigma_J(CarrySet::empty(2), r);
    EXPECT_EQ(w0.sym(), r.digits());
    EXPECT_EQ(w0.dimension(), (r.digit(0) + 1) * (r.digit(1) + 1));
    EXPECT_EQ(sigma_J(CarrySet::full(2), NClass::top(3, 2)).dimension(), 1);
    EXPECT_EQ(sigma_J(CarrySet::full(2), NClass::top(3, 2)).to_string(), "F(0,0)");
}

TEST(SerreWeight, CyclicTablesForOneColumn) {
    // With f = 1 the column i - 1 is i itself: sigma_{0}(r) = det^r ⊗ Sym^{p-1-r}.
    const SerreWeight w = sigma_J(CarrySet::full(1), cls(5, 1, 1));
    EXPECT_EQ(w.to_string(), "F(4,1)");
    EXPECT_EQ(w.dimension(), 4);
    for (long long r = 1; r < 7; ++r) {
        const SerreWeight s = sigma_J(CarrySet::full(1), cls(7, 1, r));
        EXPECT_EQ(s.a2(), r % 6);  // det^{q-1} is trivial
        EXPECT_EQ(s.dimension(), 7 - r);
    }
}

TEST(Types, UpsilonExamples) {
    const NClass r = cls(5, 1, 1);
    const NClass z = NClass::zero(5, 1);
    EXPECT_EQ(upsilon(ThetaElem::finite(z, cls(5, 1, 3)), r), (RamType{CarrySet::empty(1), cls(5, 1, 3)}));
    EXPECT_EQ(upsilon(ThetaElem::finite(cls(5, 1, 2), z), r), (RamType{CarrySet::full(1), z}));
    EXPECT_EQ(upsilon(ThetaElem::at_infinity(cls(5, 1, 2)), r).I, CarrySet::empty(1));
    // r - 2 j1 = q - 1 with j0 = q - 1 gives the full set.
    const NClass r2 = cls(5, 1, 2);
    EXPECT_EQ(upsilon(ThetaElem::finite(NClass::top(5, 1), cls(5, 1, 3)), r2).I, CarrySet::full(1));
}

TEST(Types, SameGammaOrderIsInclusion) {
    for (long long rv = 1; rv < 9; ++rv) {
        const NClass r = cls(3, 2, rv);
        const auto types = admissible_types(r);
        for (const auto& a : types) {
            EXPECT_TRUE(leq_r_closed(a, a, r));
            for (const auto& b : types)
                if (a.gamma == b.gamma) EXPECT_EQ(leq_r_closed(a, b, r), a.I.subset_of(b.I));
        }
    }
}

TEST(Types, GeneratedOrderClassCount) {
    for (long long rv = 1; rv < 5; ++rv) {
        const NClass r = cls(5, 1, rv);
        const GeneratedOrder O(r);
        EXPECT_EQ(O.num_classes(), 10) << rv;
        // (0, j1) and (inf, j1) share a class; (j0, j1) and (r - 2 j1 - j0, j1) do too.
        for (const auto& j1 : nt_enumerate(5, 1)) {
            const NClass z = NClass::zero(5, 1);
            EXPECT_EQ(O.class_of(ThetaElem::finite(z, j1)), O.class_of(ThetaElem::at_infinity(j1)));
            for (const auto& j0 : nt_enumerate(5, 1))
                if (!j0.is_zero())
                    EXPECT_EQ(O.class_of(ThetaElem::finite(j0, j1)),
                              O.class_of(ThetaElem::finite(nt_sub_group(r_minus_2(r, j1), j0), j1)));
        }
    }
}

TEST(JH, ConstituentCountsAndDimensions) {
    for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        const long long q = int_pow(p, f);
        for (long long rv = 1; rv < q; ++rv) {
            const NClass r = cls(p, f, rv);
            const auto one = jh_multiset(1, {NClass::zero(p, f), r});
            const auto two = jh_multiset(2, {NClass::zero(p, f), r});
            long long d1 = 0, d2 = 0;
            for (const auto& w : one) d1 += w.dimension();
            for (const auto& w : two) d2 += w.dimension();
            EXPECT_EQ(d1, q + 1);
            EXPECT_EQ(d2, q * (q + 1));
            if (f == 1) {
                EXPECT_EQ(one.size(), 2u);
                EXPECT_EQ(two.size(), static_cast<std::size_t>(2 * p));
            }
        }
    }
    long long total = 0;
    for (const auto& w : jh_multiset(2, {NClass::zero(3, 1), cls(3, 1, 1)})) total += w.dimension();
    EXPECT_EQ(total, 12);
}

TEST(GammaGraph, EndpointsAndLevels) {
    for (auto [p, f] : {std::pair{5, 1}, {7, 1}, {3, 2}})
        for (long long rv = 1; rv < int_pow(p, f); ++rv) {
            const NClass r = cls(p, f, rv);
            const GammaGraph G = gamma_graph(r);
            const RamType bottom{CarrySet::empty(f), NClass::zero(p, f)};
            const RamType top{CarrySet::full(f), NClass::top(p, f)};
            EXPECT_EQ(G.level_down[G.index(bottom)], 0);
            EXPECT_EQ(G.level_up[G.index(top)], 0);
            EXPECT_EQ(G.vertices.size(), admissible_types(r).size());
            EXPECT_TRUE(std::is_sorted(G.edges.begin(), G.edges.end()));
            if (f == 1) EXPECT_EQ(G.vertices.size(), static_cast<std::size_t>(2 * p));
        }
}

TEST(GammaGraph, FivePrimeOddShape) {
    const GammaGraph G = gamma_graph(cls(5, 1, 1));
    EXPECT_EQ(G.vertices.size(), 10u);
    EXPECT_EQ(G.edges.size(), 11u);
    EXPECT_EQ(G.length(), 7);
    const std::vector<std::pair<int, int>> want{{1, 0}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {5, 4},
                                                {6, 5}, {7, 6}, {8, 6}, {9, 7}, {9, 8}};
    EXPECT_EQ(G.edges, want);
}

TEST(Unramified, IndexSet) {
    EXPECT_EQ(theta1_enumerate(1).size(), 3u);
    EXPECT_EQ(theta1_enumerate(2).size(), 9u);
    EXPECT_EQ(theta1_enumerate(3).size(), 27u);
    for (int f = 1; f <= 3; ++f) {
        const auto T = theta1_enumerate(f);
        const UnramTheta top{CarrySet::empty(f), CarrySet::full(f)};
        for (const auto& t : T) EXPECT_TRUE(unram_leq(t, top));
    }
}

TEST(Unramified, CoveringMovesGenerateTheOrder) {
    for (int f = 1; f <= 3; ++f) {
        const auto T = theta1_enumerate(f);
        const int n = static_cast<int>(T.size());
        auto idx = [&](const UnramTheta& t) {
            return static_cast<int>(std::find(T.begin(), T.end(), t) - T.begin());
        };
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a) {
            reach[a][a] = true;
            const auto& [J, I] = T[a];
            for (int j : J.indices()) reach[idx({J - CarrySet::singleton(f, j), I})][a] = true;
            for (int i : I.indices()) {
                const UnramTheta m{J | CarrySet::singleton(f, i - 1), I - CarrySet::singleton(f, i)};
                if (std::find(T.begin(), T.end(), m) != T.end()) reach[idx(m)][a] = true;
            }
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) EXPECT_EQ(reach[a][b], unram_leq(T[a], T[b])) << f;
    }
}

TEST(Unramified, Weights) {
    const NClass r = cls(7, 1, 3);
    const UnramTheta none{CarrySet::empty(1), CarrySet::empty(1)};
    const UnramTheta j0{CarrySet::full(1), CarrySet::empty(1)};
    EXPECT_EQ(unram_sigma(none, r).to_string(), "F(3,0)");
    EXPECT_TRUE(unram_f_theta_index(none, r).j0.is_zero());
    EXPECT_EQ(unram_f_theta_index(j0, r).j0.to_integer(), 3);
    EXPECT_EQ(unram_sigma(j0, r).to_string(), "F(6,3)");
    const UnramTheta top{CarrySet::empty(2), CarrySet::full(2)};
    const auto x = unram_f_theta_index(top, NClass::from_digits(7, {3, 3}));
    EXPECT_TRUE(x.j0.is_zero());
    EXPECT_EQ(x.j1.to_integer(), 1 + 7);
}

TEST(Unramified, GammaOfJ) {
    const NClass r = NClass::from_digits(3, {1, 1});
    EXPECT_EQ(gamma_of_J(CarrySet::full(2), r), r);
    const NClass g0 = gamma_of_J(CarrySet::singleton(2, 0), r);
    const NClass g1 = gamma_of_J(CarrySet::singleton(2, 1), r);
    EXPECT_EQ(g0, NClass::from_digits(3, {1, 2}));
    EXPECT_FALSE(nt_leq(g0, g1));
    EXPECT_FALSE(nt_leq(g1, g0));
}

}  // namespace
