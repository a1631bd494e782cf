#include "ksigma/certificate.hpp"

#include "ksigma/errors.hpp"

#include <array>
#include <string>
#include <utility>

namespace ksigma {

namespace {

constexpr std::array<std::pair<TheoremTag, std::string_view>, 8> kTagNames{{
    {TheoremTag::IntervalThreshold, "interval_threshold"},
    {TheoremTag::BelowIntervalThreshold, "below_interval_threshold"},
    {TheoremTag::HullSubset, "hull_subset"},
    {TheoremTag::ExtremeGap, "extreme_gap"},
    {TheoremTag::SumsetNullBound, "sumset_null_bound"},
    {TheoremTag::CollapsedNullBound, "collapsed_null_bound"},
    {TheoremTag::DigitCollision, "digit_collision"},
    {TheoremTag::AeWindow, "ae_window"},
}};

}  // namespace

std::string_view to_string(TheoremTag tag)
{
    for (const auto& [t, name] : kTagNames) {
        if (t == tag) {
            return name;
        }
    }
    return "unknown";
}

TheoremTag theorem_tag_from_string(std::string_view text)
{
    for (const auto& [t, name] : kTagNames) {
        if (name == text) {
            return t;
        }
    }
    throw InvalidArgument("unknown theorem tag '" + std::string(text) + "'");
}

Certificate make_certificate(const NullCertificate& cert)
{
    return Certificate{TheoremTag::SumsetNullBound,
                       SumsetNullWitness{cert.depth, cert.cardinality, cert.q, true, cert.bound}};
}

Certificate make_certificate(const QnCertificate& cert)
{
    return Certificate{TheoremTag::CollapsedNullBound,
                       CollapsedNullWitness{cert.s, cert.n, cert.q_enclosure.lo(), cert.q_enclosure.hi(),
                                            cert.witness, cert.collapsed_bound}};
}

Certificate make_certificate(const DigitCollision& collision, unsigned s)
{
    return Certificate{TheoremTag::DigitCollision, CollisionWitness{s, collision.first, collision.second}};
}

}  // namespace ksigma
