#pragma once

/// @file serialize.hpp
/// @brief JSON wire format. Rationals travel as exact strings ("2655/2744");
/// decimal fields are advisory.

#include "ksigma/bounds.hpp"
#include "ksigma/certificate.hpp"
#include "ksigma/classify.hpp"
#include "ksigma/core.hpp"
#include "ksigma/nullseq.hpp"
#include "ksigma/sumsets.hpp"

#include <json.hpp>

#include <string>

namespace ksigma {

using json = nlohmann::ordered_json;

inline constexpr int kDecimalDigits = 12;

[[nodiscard]] json rational_json(const Rational& r);
[[nodiscard]] Rational rational_from_json(const json& j);
[[nodiscard]] json to_json(const FiniteSigma& sigma);
[[nodiscard]] FiniteSigma sigma_from_json(const json& j);
[[nodiscard]] json to_json(const RatioValue& q);
[[nodiscard]] json to_json(const GapStats& g);
[[nodiscard]] json to_json(const Certificate& c);
[[nodiscard]] Certificate certificate_from_json(const json& j);
[[nodiscard]] json to_json(const Fact& f);
[[nodiscard]] json to_json(const Verdict& v);
[[nodiscard]] json to_json(const SumsetReport& r);
[[nodiscard]] json to_json(const NullCertificate& c);
[[nodiscard]] json to_json(const CoverReport& r);
[[nodiscard]] json to_json(const AlphaBound& a);
[[nodiscard]] json to_json(const QnCertificate& c);
[[nodiscard]] json to_json(const T12Result& r);
[[nodiscard]] json to_json(const FullSumsetResult& r, unsigned s);
[[nodiscard]] json to_json(const SweepResult& r);
[[nodiscard]] json to_json(const StarMinimum& m);

/// CSV rows "lo,hi" of the merged cover components, exact rational strings.
[[nodiscard]] std::string cover_csv(const CoverReport& r);

}  // namespace ksigma
