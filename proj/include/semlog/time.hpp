#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace semlog {

/// UTC instant at second resolution.
using Instant = std::chrono::sys_seconds;

/// Parses the access-log layout `01/Jul/2009:17:11:49 +0000` and converts to UTC.
/// Throws InvalidTimestamp.
Instant parse_clf_time( std::string_view text );

/// `01/Jul/2009:17:11:49 +0000`
std::string format_clf_time( Instant t );

/// Accepts `YYYY-MM-DDThh:mm:ssZ`, an explicit `+hh:mm` offset, or a bare
/// `YYYY-MM-DD` (midnight UTC). Throws InvalidTimestamp.
Instant parse_iso8601( std::string_view text );

/// `YYYY-MM-DDThh:mm:ssZ`
std::string format_iso8601( Instant t );

/// Instant for a UTC calendar date and time of day; throws InvalidTimestamp
/// when any field is out of range.
Instant make_instant( int year, unsigned month, unsigned day, int hour = 0, int minute = 0, int second = 0 );

} // namespace semlog
