#include <gtest/gtest.h>

#include "psgl2/serialize.hpp"

using namespace psgl2;

namespace {

TEST(Serialize, ScalarTypes) {
    EXPECT_EQ(to_json(FieldSpec(3, 2)).dump(), R"j({"p":3,"f":2,"modulus":[1,0,1]})j");
    EXPECT_EQ(Json({{"carry_set", to_json(CarrySet::full(2))}}).dump(), R"j({"carry_set":[0,1]})j");
    EXPECT_EQ(to_json(NClass::from_integer(3, 2, 5)).dump(), R"j({"value":5,"digits":[2,1]})j");
    const SerreWeight w = sigma_J(CarrySet::full(1), NClass::from_integer(5, 1, 1));
    EXPECT_EQ(to_json(w).dump(), R"j({"weight":"F(4,1)","a1":4,"a2":1,"dim":4})j");
}

TEST(Serialize, GammaGraphDot) {
    const GammaGraph G = gamma_graph(NClass::from_integer(5, 1, 1));
    const std::string dot = to_dot(G);
    EXPECT_EQ(dot, to_dot(gamma_graph(NClass::from_integer(5, 1, 1))));
    std::size_t nodes = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
    EXPECT_EQ(nodes, 10u);
    EXPECT_NE(dot.find(R"j(n0 [label="({},0) : F(1,0) dim 2"];)j"), std::string::npos);
    EXPECT_NE(dot.find(R"j(n9 [label="({0},4) : F(4,1) dim 4"];)j"), std::string::npos);
    EXPECT_NE(dot.find("n9 -> n8;"), std::string::npos);
    const Json j = to_json(G);
    EXPECT_EQ(j["nodes"].size(), 10u);
    EXPECT_EQ(j["edges"].size(), 11u);
    EXPECT_EQ(j["nodes"][0]["level_down"], 0);
}

TEST(Serialize, UnramifiedPoset) {
    const UnramPoset P = unram_poset(NClass::from_integer(7, 1, 3));
    EXPECT_EQ(P.nodes.size(), 3u);
    EXPECT_EQ(P.edges, (std::vector<std::pair<int, int>>{{1, 0}, {2, 1}}));
    EXPECT_NE(to_dot(P).find(R"j(({},{0}) : F(2,1) dim 2)j"), std::string::npos);
}

TEST(Serialize, Layers) {
    const std::vector<std::vector<SerreWeight>> layers{{sigma_J(CarrySet::empty(1), NClass::from_integer(5, 1, 2))},
                                                       {}};
    EXPECT_EQ(layers_json(layers).dump(),
              R"j([{"level":0,"constituents":[{"weight":"F(2,0)","dim":3}]},{"level":1,"constituents":[]}])j");
}

TEST(Serialize, VectorsInFBasis) {
    const RepSpace V(make_ring(3, 1, Variant::EqualChar), 2, NClass::from_integer(3, 1, 1));
    const ThetaElem x = ThetaElem::finite(NClass::from_integer(3, 1, 1), NClass::zero(3, 1));
    Vector v = V.f_vector(x);
    scale(V.field(), v, V.field().from_int(2));
    EXPECT_EQ(vector_json(V, v).dump(), R"j({"(1,0)":"2"})j");
    const Json t = index_tables_json(V);
    EXPECT_EQ(t["f_labels"].size(), 12u);
    EXPECT_EQ(t["delta"].size(), 12u);
}

}  // namespace
