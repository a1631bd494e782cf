#include "oracles.hpp"

#include "ksigma/classify.hpp"
#include "ksigma/nullseq.hpp"
#include "ksigma/serialize.hpp"
#include "ksigma/verify.hpp"

#include <gtest/gtest.h>

using ksigma::FiniteSigma;
using ksigma::json;
using ksigma::Rational;
using ksigma::RatioValue;

namespace {

json ex9_verdict()
{
    return ksigma::to_json(ksigma::classify(FiniteSigma::parse("0,2,3,4,5,6,7,9"), RatioValue::exact(Rational(17, 100))));
}

json ferens_verdict()
{
    ksigma::ClassifyOptions opts;
    opts.depth_budget = 4;
    return ksigma::to_json(ksigma::classify(oracle::ferens(), RatioValue::exact(Rational(1, 14)), opts));
}

}  // namespace

TEST(Verify, GenuineDocumentsPass)
{
    for (const json& doc : {ex9_verdict(), ferens_verdict()}) {
        const auto r = ksigma::verify_document(doc);
        EXPECT_TRUE(r.ok()) << ksigma::to_json(r).dump();
        EXPECT_EQ(r.checked, doc["facts"].size());
    }
}

TEST(Verify, CertificateRoundTrip)
{
    const auto v = ksigma::classify(oracle::gnj(1), ksigma::qn_root(4, 6));
    for (const auto& f : v.facts) {
        const json j = ksigma::to_json(f.certificate);
        EXPECT_EQ(ksigma::to_json(ksigma::certificate_from_json(j)), j);
    }
}

TEST(Verify, TamperedBoundFails)
{
    json doc = ferens_verdict();
    for (auto& f : doc["facts"]) {
        if (f["theorem_tag"] == "sumset_null_bound") {
            f["witnesses"]["bound"] = "2655/2745";
        }
    }
    EXPECT_FALSE(ksigma::verify_document(doc).ok());
}

TEST(Verify, TamperedCardinalityCaughtByRecount)
{
    json doc = ferens_verdict();
    for (auto& f : doc["facts"]) {
        if (f["theorem_tag"] == "sumset_null_bound") {
            f["witnesses"]["cardinality"] = 2600;
            f["witnesses"]["bound"] = "2600/2744";
        }
    }
    const auto r = ksigma::verify_document(doc);
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.failures[0].reason.find("recount"), std::string::npos);
    doc.erase("sigma");
    EXPECT_TRUE(ksigma::verify_document(doc).ok());
}

TEST(Verify, TamperedThresholdFails)
{
    json doc = ex9_verdict();
    for (auto& f : doc["facts"]) {
        if (f["theorem_tag"] == "hull_subset") {
            f["witnesses"]["q_lower"] = "1/7";
        }
    }
    EXPECT_FALSE(ksigma::verify_document(doc).ok());
}

TEST(Verify, SubsetMustBelongToSigma)
{
    json doc = ex9_verdict();
    doc["sigma"] = json::array({"0", "2", "3", "5", "9"});
    EXPECT_FALSE(ksigma::verify_document(doc).ok());
}

TEST(Verify, CollisionAndCollapsedWitnesses)
{
    const ksigma::Certificate good{ksigma::TheoremTag::DigitCollision,
                                   ksigma::CollisionWitness{15, {Rational(3), Rational(15)}, {Rational(4), Rational(0)}}};
    EXPECT_TRUE(ksigma::verify_certificate(good, oracle::ferens()).empty());
    const ksigma::Certificate bad{ksigma::TheoremTag::DigitCollision,
                                  ksigma::CollisionWitness{15, {Rational(3), Rational(14)}, {Rational(4), Rational(0)}}};
    EXPECT_FALSE(ksigma::verify_certificate(bad).empty());

    const auto seq = ksigma::qn_sequence(oracle::gnj(1), 1);
    ASSERT_EQ(seq.size(), 1U);
    auto cert = ksigma::make_certificate(seq[0]);
    EXPECT_TRUE(ksigma::verify_certificate(cert, oracle::gnj(1)).empty());
    EXPECT_FALSE(ksigma::verify_certificate(cert, oracle::gnj(2)).empty());
    std::get<ksigma::CollapsedNullWitness>(cert.witness).q_lo = Rational(1, 4);
    EXPECT_FALSE(ksigma::verify_certificate(cert).empty());
}

TEST(Verify, WitnessTypeMustMatchTag)
{
    const ksigma::Certificate mixed{ksigma::TheoremTag::HullSubset,
                                    ksigma::ThresholdWitness{Rational(1, 2), Rational(1), Rational(1), Rational(1, 2)}};
    EXPECT_FALSE(ksigma::verify_certificate(mixed).empty());
}

TEST(Verify, MalformedDocumentsReportFailures)
{
    json doc = {{"theorem_tag", "no_such_tag"}, {"witnesses", json::object()}};
    const auto r = ksigma::verify_document(doc);
    EXPECT_EQ(r.checked, 1U);
    EXPECT_FALSE(r.ok());
    json missing = {{"theorem_tag", "interval_threshold"}, {"witnesses", {{"q_bound", "1/2"}}}};
    EXPECT_FALSE(ksigma::verify_document(missing).ok());
}

TEST(Verify, WindowWitness)
{
    const auto v = ksigma::classify(FiniteSigma::parse("0,2,3,5"), RatioValue::exact(Rational(27, 100)));
    ASSERT_TRUE(v.has(ksigma::FactKind::AePositiveWindowMember));
    const auto& cert = v.find(ksigma::FactKind::AePositiveWindowMember)->certificate;
    EXPECT_TRUE(ksigma::verify_certificate(cert, v.sigma).empty());
    auto bad = cert;
    std::get<ksigma::WindowWitness>(bad.witness).alpha_lo = Rational(33, 100);
    std::get<ksigma::WindowWitness>(bad.witness).alpha_hi = Rational(34, 100);
    EXPECT_FALSE(ksigma::verify_certificate(bad).empty());
}
