#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dtds {

/// Wall-clock milliseconds since the Unix epoch.
int64_t now_ms();

/// Formats epoch milliseconds as RFC 3339 UTC with millisecond precision,
/// e.g. "2025-01-01T12:00:00.000Z".
std::string format_rfc3339_ms(int64_t epoch_ms);

/// Parses "YYYY-MM-DDTHH:MM:SS[.fffffffff]Z" (also accepts "+00:00").
/// Fractional digits beyond milliseconds are truncated.
std::optional<int64_t> parse_rfc3339_ms(std::string_view text);

}  // namespace dtds
