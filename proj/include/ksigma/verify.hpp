#pragma once

/// @file verify.hpp
/// @brief Replays stored certificates from their witnesses alone.
///
/// Every check here is written against the raw numbers in the witness. When a
/// digit set is available the structural claims (membership, gap statistics,
/// small sumset cardinalities) are recomputed as well.

#include "ksigma/certificate.hpp"
#include "ksigma/core.hpp"
#include "ksigma/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ksigma {

/// Sumsets with at most this many digit strings are recounted naively during replay.
inline constexpr std::uint64_t kReplayEnumerationLimit = 200000;

/// Problems found in one certificate; empty means it replays.
[[nodiscard]] std::vector<std::string> verify_certificate(const Certificate& cert,
                                                          const std::optional<FiniteSigma>& sigma = std::nullopt);

struct VerifyFailure {
    std::string path;  ///< JSON pointer of the certificate object
    std::string reason;
};

struct VerifyReport {
    std::size_t checked = 0;
    std::vector<VerifyFailure> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Finds every object carrying "theorem_tag" and "witnesses" and replays it,
/// using the nearest enclosing "sigma" for the structural checks.
[[nodiscard]] VerifyReport verify_document(const json& doc);

[[nodiscard]] json to_json(const VerifyReport& r);

}  // namespace ksigma
