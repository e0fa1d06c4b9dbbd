// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <string>

#include "qcg/qcg.h"

using Json = nlohmann::ordered_json;

namespace {

Json take(qcg_result* r) {
  Json j = Json::parse(qcg_result_json(r));
  qcg_result_free(r);
  return j;
}

}  // namespace

TEST(CApi, NullAndInvalid) {
  EXPECT_EQ(qcg_hull_cyclic(24, "1,3,6", nullptr), QCG_ERR_NULL);
  qcg_result* r = nullptr;
  EXPECT_EQ(qcg_hull_cyclic(0, "1", &r), QCG_ERR_INVALID_INPUT);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::string(qcg_last_error()), "");
  EXPECT_EQ(qcg_family_verdict("T5", "1,3", &r), QCG_ERR_INVALID_INPUT);
  EXPECT_EQ(qcg_polar_grid(nullptr, 0, &r), QCG_ERR_INVALID_INPUT);
  EXPECT_EQ(qcg_result_json(nullptr), nullptr);
}

TEST(CApi, HullCyclic) {
  qcg_result* r = nullptr;
  ASSERT_EQ(qcg_hull_cyclic(24, "1,3,6", &r), QCG_OK);
  EXPECT_EQ(qcg_result_flag(r), 0);
  Json j = take(r);
  EXPECT_EQ(j["schema"], "qcgroups/1");
  bool has4 = false;
  for (const auto& x : j["hull"]) has4 = has4 || x == 4;
  EXPECT_TRUE(has4);
}

TEST(CApi, Verdict) {
  qcg_result* r = nullptr;
  ASSERT_EQ(qcg_family_verdict("T3", "1,3,5", &r), QCG_OK);
  EXPECT_EQ(qcg_result_flag(r), 1);
  EXPECT_EQ(take(r)["outcome"], "QuasiConvex");
  ASSERT_EQ(qcg_family_verdict("chain", "2,8", &r), QCG_OK);
  EXPECT_EQ(qcg_result_flag(r), 0);
  qcg_result_free(r);
}

TEST(CApi, GridLimit) {
  qcg_result* r = nullptr;
  qcg_set_max_grid(16);
  EXPECT_EQ(qcg_hull_grid("1/32", 0, &r), QCG_ERR_INVALID_INPUT);
  qcg_set_max_grid(0);
  ASSERT_EQ(qcg_hull_grid("1/32", 0, &r), QCG_OK);
  qcg_result_free(r);
}

TEST(CApi, CertifyVerifyRoundTrip) {
  qcg_result* r = nullptr;
  ASSERT_EQ(qcg_certify("T3", "1,3", "10/81", nullptr, &r), QCG_OK);
  ASSERT_EQ(qcg_result_flag(r), 1);
  Json c = take(r);
  EXPECT_EQ(c["character"], "11");
  ASSERT_EQ(qcg_verify_certificate(c.dump().c_str(), 0, &r), QCG_OK);
  EXPECT_EQ(qcg_result_flag(r), 1);
  qcg_result_free(r);
  c["character"] = "5";
  ASSERT_EQ(qcg_verify_certificate(c.dump().c_str(), 0, &r), QCG_ERR_PROPERTY_FAILED);
  EXPECT_EQ(qcg_result_flag(r), 0);
  qcg_result_free(r);
  EXPECT_EQ(qcg_verify_certificate("{", 0, &r), QCG_ERR_INVALID_INPUT);
  ASSERT_EQ(qcg_certify("J3", "0,2", nullptr, "1,1", &r), QCG_OK);
  Json j = take(r);
  EXPECT_EQ(j["evaluation"], "29/81");
  EXPECT_EQ(qcg_certify("J3", "0,2", "10", "1,1", &r), QCG_ERR_INVALID_INPUT);
}

TEST(CApi, OutputIsDeterministic) {
  qcg_result* a = nullptr;
  qcg_result* b = nullptr;
  ASSERT_EQ(qcg_hull_real("0,1/2,-1/2,1/4,-1/4,1/16,-1/16", &a), QCG_OK);
  ASSERT_EQ(qcg_hull_real("-1/16,1/16,-1/4,1/4,-1/2,1/2,0", &b), QCG_OK);
  EXPECT_EQ(std::string(qcg_result_json(a)), std::string(qcg_result_json(b)));
  EXPECT_EQ(std::string(qcg_result_json(a)).find('.'), std::string::npos);
  qcg_result_free(a);
  qcg_result_free(b);
}
