#pragma once

#include "semlog/log_model.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace semlog {

/// One request inside a session, with its semantic types once enriched.
struct BrowsingEvent
{
  std::string full_url;
  std::string base_url;
  std::vector<Parameter> params;
  Instant time{};
  int order = 1;
  std::set<std::string> content_types;
  std::set<std::string> function_types;
  /// inserted from a Referer header rather than logged directly
  bool synthetic = false;
  std::optional<std::string> referrer;

  bool operator==( const BrowsingEvent& ) const = default;
};

struct Session
{
  std::string id;
  std::vector<BrowsingEvent> events;
  Instant start_time{};
  Instant end_time{};
  std::string user;

  bool operator==( const Session& ) const = default;
};

inline constexpr int kDefaultIdleGapSeconds = 1800;

/// `user@YYYY-MM-DDThh:mm:ssZ`
std::string make_session_id( const std::string& user, Instant start );

/// Event for a logged request. Throws NotAbsoluteUrl.
BrowsingEvent make_event( const LogEntry& entry );

/// Splits each user's requests wherever the idle gap strictly exceeds
/// `idle_gap_seconds`. Requests are ordered by (timestamp, source_line), so
/// the result does not depend on input order. Sessions come back sorted by
/// (start time, user).
std::vector<Session> sessionize( const std::vector<LogEntry>& entries, int idle_gap_seconds = kDefaultIdleGapSeconds );

/// Inserts a synthetic event before every event whose referrer lies on
/// another site. Nothing is inserted when the referrer's site is the same as
/// the event's or the previous event's, or when the referrer is on a
/// `known_domains` site and was already visited earlier in the session.
Session insert_referrer_events( const Session& session, const std::set<std::string>& known_domains );

/// Checks the ordering, contiguity and time-bound invariants.
bool is_well_formed( const Session& session );

} // namespace semlog
