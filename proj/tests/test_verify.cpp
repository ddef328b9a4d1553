#include <gtest/gtest.h>

#include "psgl2/serialize.hpp"

using namespace psgl2;

namespace {

TEST(Verify, RegistryListsAllCriteria) {
    const auto ids = check_ids();
    ASSERT_EQ(ids.size(), 13u);
    for (int i = 0; i < 13; ++i) {
        EXPECT_EQ(ids[i], "A" + std::to_string(i));
        EXPECT_FALSE(check_title(ids[i]).empty());
    }
    EXPECT_THROW(check_title("A13"), std::invalid_argument);
}

TEST(Verify, RejectsBadParameters) {
    CheckParams bad_p;
    bad_p.p = 4;
    EXPECT_THROW(run_check("A1", bad_p), std::invalid_argument);
    CheckParams bad_r;
    bad_r.p = 5;
    bad_r.f = 1;
    bad_r.r = 0;
    EXPECT_THROW(run_check("A5", bad_r), std::invalid_argument);
    bad_r.r = 4;
    EXPECT_NO_THROW(run_check("A5", bad_r));
    CheckParams too_big;
    too_big.p = 7;
    too_big.f = 2;
    EXPECT_THROW(run_check("A5", too_big), std::invalid_argument);
    EXPECT_THROW(run_check("A99", {}), std::invalid_argument);
}

TEST(Verify, CarryTripleCount) {
    CheckParams P;
    P.p = 3;
    P.f = 2;
    const CheckReport R = run_check("A1", P);
    EXPECT_EQ(R.status, Status::Pass);
    EXPECT_EQ(R.counts.at("triples"), 729);
}

TEST(Verify, GenerationLabelCount) {
    CheckParams P;
    P.p = 5;
    P.f = 1;
    P.r = 1;
    const CheckReport R = run_check("A5", P);
    EXPECT_EQ(R.status, Status::Pass);
    EXPECT_EQ(R.counts.at("labels"), 30);
}

TEST(Verify, ReportsAreDeterministic) {
    CheckParams P;
    P.p = 5;
    P.f = 1;
    P.r = 3;
    const Json a = to_json(run_check("A6", P), false), b = to_json(run_check("A6", P), false);
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a["status"], "pass");
    EXPECT_EQ(a["parameters"]["r"], 3);
}

}  // namespace
