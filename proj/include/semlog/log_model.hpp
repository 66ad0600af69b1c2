#pragma once

#include "semlog/time.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semlog {

enum class LogFormat
{
  common,
  combined
};

LogFormat parse_log_format( std::string_view name );
std::string_view to_string( LogFormat format );

/// One raw access-log record.
struct LogEntry
{
  std::string user_id;
  Instant timestamp{};
  std::string url;
  std::optional<std::string> referrer;
  std::optional<std::string> user_agent;
  std::size_t source_line = 1;

  bool operator==( const LogEntry& ) const = default;
};

/// A query-string variable, percent-decoded.
struct Parameter
{
  std::string name;
  std::string value;

  bool operator==( const Parameter& ) const = default;
  auto operator<=>( const Parameter& ) const = default;
};

struct UrlParts
{
  /// scheme://host[:port], host lowercased, default port dropped
  std::string base;
  std::string path;
  std::vector<Parameter> params;

  bool operator==( const UrlParts& ) const = default;
};

struct BotPolicy
{
  std::vector<std::string> agent_substrings = { "bot", "crawler", "spider", "slurp", "curl", "wget" };
  std::optional<int> max_requests_per_minute;
  bool treat_missing_agent_as_bot = false;
};

/// Parses one access-log record. Relative request targets are resolved
/// against `default_host` (`dbpedia.org` or `http://dbpedia.org`).
///
/// The user id is the authenticated-user field when present and the client
/// host otherwise.
LogEntry parse_log_line( std::string_view line, LogFormat format, std::string_view default_host = {},
                         std::size_t source_line = 1 );

/// Inverse of parse_log_line for entries whose url is absolute. Status and
/// size are written as `200 -`.
std::string serialize_log_line( const LogEntry& entry, LogFormat format );

UrlParts decompose_url( std::string_view url );

/// Canonical URL text for decomposed parts; parameter values are re-encoded.
std::string reassemble_url( const UrlParts& parts );

/// decompose + reassemble
std::string normalize_url( std::string_view url );

/// Normalized `scheme://host[:port]` of a URL or bare base.
std::string normalize_base( std::string_view url );

std::string percent_decode( std::string_view text, bool plus_as_space = false );
std::string percent_encode_query( std::string_view text );

/// User-agent rules only.
bool is_bot( const LogEntry& entry, const BotPolicy& policy );

/// Full policy, including the per-user sliding 60 s rate window. The result
/// is parallel to `entries`.
std::vector<bool> classify_bots( std::span<const LogEntry> entries, const BotPolicy& policy );

struct BotFilterResult
{
  std::vector<LogEntry> kept;
  std::size_t dropped = 0;
};

BotFilterResult filter_bots( std::vector<LogEntry> entries, const BotPolicy& policy );

} // namespace semlog
