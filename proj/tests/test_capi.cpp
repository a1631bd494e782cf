// Exercises the shared library through its C header only.
#include "ksigma/ksigma.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

using json = nlohmann::json;

namespace {

struct Owned {
    char* text = nullptr;
    ~Owned() { ks_string_free(text); }
    json parse() const { return json::parse(text); }
};

struct Sigma {
    ks_sigma* h = nullptr;
    ~Sigma() { ks_sigma_free(h); }
};

struct Options {
    ks_options* h = nullptr;
    Options() { ks_options_new(&h); }
    ~Options() { ks_options_free(h); }
};

}  // namespace

TEST(CApi, ParseErrorsSetLastError)
{
    Sigma s;
    EXPECT_EQ(ks_sigma_parse("0,1,1", &s.h), KS_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(s.h, nullptr);
    EXPECT_STRNE(ks_last_error(), "");
    EXPECT_EQ(ks_sigma_parse("0,1", &s.h), KS_OK);
    EXPECT_STREQ(ks_last_error(), "");
    EXPECT_EQ(ks_sigma_size(s.h), 2U);
    EXPECT_EQ(ks_sigma_parse(nullptr, &s.h), KS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, MultigeometricCarriesRatio)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_from_multigeometric("4,3,2;17/100", &s.h), KS_OK);
    EXPECT_STREQ(ks_sigma_default_q(s.h), "17/100");
    Owned out;
    ASSERT_EQ(ks_sigma_to_json(s.h, &out.text), KS_OK);
    EXPECT_EQ(out.parse(), json::parse(R"(["0","2","3","4","5","6","7","9"])"));
    Owned v;
    EXPECT_EQ(ks_classify(s.h, ks_sigma_default_q(s.h), nullptr, &v.text), KS_OK);
    const json j = v.parse();
    EXPECT_EQ(j["schema"], "verdict/v1");
    EXPECT_EQ(j["trichotomy"], "Cantorval");
    EXPECT_EQ(j["caveat"], false);
}

TEST(CApi, SigmaFromJson)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_from_json(R"({"sigma": ["0", "1/2", "1"]})", &s.h), KS_OK);
    EXPECT_EQ(ks_sigma_size(s.h), 3U);
    Sigma bad;
    EXPECT_EQ(ks_sigma_from_json("{not json", &bad.h), KS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ClassifyFerens)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,3,4,5,6,7,8,9,10,11,12,13,14,15,18", &s.h), KS_OK);
    Options o;
    ASSERT_EQ(ks_options_set_depth(o.h, 4), KS_OK);
    Owned v;
    ASSERT_EQ(ks_classify(s.h, "1/14", o.h, &v.text), KS_OK);
    const json j = v.parse();
    const json& f = j["facts"].back();
    EXPECT_EQ(f["kind"], "ZeroMeasureCantor");
    EXPECT_EQ(f["witnesses"]["cardinality"], 2655);
    EXPECT_EQ(f["witnesses"]["bound"], "2655/2744");
    Owned r;
    EXPECT_EQ(ks_verify(v.text, &r.text), KS_OK);
    EXPECT_EQ(r.parse()["checked"], j["facts"].size());
}

TEST(CApi, InconclusiveStillReturnsDocument)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,2,3,5", &s.h), KS_OK);
    Options o;
    ks_options_set_depth(o.h, 3);
    Owned n;
    EXPECT_EQ(ks_nullcert(s.h, "1/4", o.h, &n.text), KS_INCONCLUSIVE);
    ASSERT_NE(n.text, nullptr);
    EXPECT_EQ(n.parse()["result"], "none");
    Owned c;
    EXPECT_EQ(ks_classify(s.h, "27/100", o.h, &c.text), KS_INCONCLUSIVE);
    EXPECT_EQ(c.parse()["trichotomy"], nullptr);
}

TEST(CApi, BudgetExhaustionIsInconclusive)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,2,3,5", &s.h), KS_OK);
    Options o;
    ks_options_set_depth(o.h, 12);
    ks_options_set_max_elements(o.h, 500);
    Owned n;
    EXPECT_EQ(ks_nullcert(s.h, "1/4", o.h, &n.text), KS_INCONCLUSIVE);
    EXPECT_EQ(n.parse()["budget_exhausted"], true);
    EXPECT_EQ(n.parse()["depth_reached"], 4);
}

TEST(CApi, EnvironmentCapsElements)
{
    ::setenv("KSIGMA_MAX_ELEMENTS", "100", 1);
    Options o;
    ::unsetenv("KSIGMA_MAX_ELEMENTS");
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,1,2,3", &s.h), KS_OK);
    Owned out;
    EXPECT_EQ(ks_sumset(s.h, "1/4", 6, o.h, &out.text), KS_INCONCLUSIVE);
    EXPECT_EQ(out.text, nullptr);
}

TEST(CApi, QnRatioString)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,2,3,5", &s.h), KS_OK);
    Owned v;
    ASSERT_EQ(ks_classify(s.h, "qn:4,6", nullptr, &v.text), KS_OK);
    const json j = v.parse();
    EXPECT_EQ(j["trichotomy"], "CantorSet");
    EXPECT_EQ(j["q"]["root"]["n"], 6);
    Owned bad;
    EXPECT_EQ(ks_classify(s.h, "qn:4", nullptr, &bad.text), KS_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(ks_nullcert(s.h, "qn:4,6", nullptr, &bad.text), KS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, CoverFormats)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,1", &s.h), KS_OK);
    Owned j;
    ASSERT_EQ(ks_cover(s.h, "1/3", 3, "json", nullptr, &j.text), KS_OK);
    EXPECT_EQ(j.parse()["total_length"], "4/9");
    Owned csv;
    ASSERT_EQ(ks_cover(s.h, "1/3", 2, "csv", nullptr, &csv.text), KS_OK);
    EXPECT_EQ(std::string(csv.text), "lo,hi\n0,1/6\n1/3,1/2\n1,7/6\n4/3,3/2\n");
    Owned svg;
    ASSERT_EQ(ks_cover(s.h, "1/3", 2, "svg", nullptr, &svg.text), KS_OK);
    EXPECT_EQ(std::string(svg.text).rfind("<?xml", 0), 0U);
    Owned bad;
    EXPECT_EQ(ks_cover(s.h, "1/3", 2, "png", nullptr, &bad.text), KS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, BoundsEntryPoints)
{
    Owned a;
    ASSERT_EQ(ks_alpha("1/9", nullptr, &a.text), KS_OK);
    EXPECT_EQ(a.parse()["lo"], "1/4");
    EXPECT_EQ(a.parse()["kind"], "lower bound");
    Owned m;
    ASSERT_EQ(ks_star_min(2, "-1", nullptr, &m.text), KS_OK);
    EXPECT_EQ(m.parse()["schema"], "starmin/v1");
    Owned q;
    ASSERT_EQ(ks_qn_root(8, 2, nullptr, &q.text), KS_OK);
    EXPECT_EQ(q.parse()["q"]["lo"], "1/7");
    Owned bad;
    EXPECT_EQ(ks_alpha("3/4", nullptr, &bad.text), KS_ERR_INVALID_ARGUMENT);
}

TEST(CApi, QnseqAndT12)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_from_multigeometric("3,2", &s.h), KS_OK);
    Owned seq;
    ASSERT_EQ(ks_qnseq(s.h, 3, nullptr, &seq.text), KS_OK);
    const json j = seq.parse();
    EXPECT_EQ(j["certificates"].size(), 3U);
    EXPECT_EQ(j["witness"]["a"], "2");
    Owned r;
    EXPECT_EQ(ks_verify(seq.text, &r.text), KS_OK);
    Owned t;
    Options o;
    ks_options_set_depth(o.h, 10);
    ASSERT_EQ(ks_t12(s.h, "1/4", o.h, &t.text), KS_OK);
    EXPECT_EQ(t.parse()["result"], "NoViolationUpTo");
    EXPECT_EQ(t.parse()["depth"], 10);
    Sigma none;
    ASSERT_EQ(ks_sigma_parse("0,1", &none.h), KS_OK);
    Owned empty;
    EXPECT_EQ(ks_qnseq(none.h, 3, nullptr, &empty.text), KS_INCONCLUSIVE);
}

TEST(CApi, RenderWritesFiles)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,1,2", &s.h), KS_OK);
    const auto dir = std::filesystem::temp_directory_path() / "ksigma_capi_render";
    std::filesystem::create_directories(dir);
    Options o;
    ks_options_set_resolution(o.h, 6);
    Owned out;
    ASSERT_EQ(ks_render(s.h, (dir / "d.svg").c_str(), o.h, &out.text), KS_OK);
    EXPECT_TRUE(std::filesystem::exists(dir / "d.svg"));
    EXPECT_TRUE(std::filesystem::exists(dir / "d.json"));
    EXPECT_EQ(out.parse()["boundaries"], json::parse(R"(["1/3"])"));
    Owned fail;
    EXPECT_EQ(ks_render(s.h, (dir / "no" / "d.svg").c_str(), o.h, &fail.text), KS_ERR_IO);
    std::filesystem::remove_all(dir);
}

TEST(CApi, VerifyDetectsTampering)
{
    Sigma s;
    ASSERT_EQ(ks_sigma_parse("0,1", &s.h), KS_OK);
    Owned v;
    ASSERT_EQ(ks_classify(s.h, "1/3", nullptr, &v.text), KS_OK);
    json j = v.parse();
    for (json& f : j["facts"]) {
        if (f["kind"] == "ZeroMeasureCantor") {
            f["witnesses"]["bound"] = "1/3";
        }
    }
    Owned r;
    EXPECT_EQ(ks_verify(j.dump().c_str(), &r.text), KS_ERR_VERIFY_FAILED);
    EXPECT_EQ(r.parse()["ok"], false);
}
