#pragma once

#include "semlog/sessionizer.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace semlog {

enum class DayCountMode
{
  /// days from the first to the last session start, both ends included
  calendar_days,
  /// the same interval counted as elapsed days (calendar_days - 1, at least 1)
  span_days
};

DayCountMode parse_day_count_mode( std::string_view name );
std::string_view to_string( DayCountMode mode );

struct Rational
{
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>( num ) / static_cast<double>( den ); }
  bool operator==( const Rational& ) const = default;
};

struct StatsReport
{
  std::size_t session_count = 0;
  std::int64_t monitored_days = 0;
  /// session_count / monitored_days, reduced
  Rational avg_sessions_per_day;

  std::size_t engine_sessions = 0;
  std::size_t direct_sessions = 0;
  std::size_t other_sessions = 0;
  std::size_t sparql_sessions = 0;
  /// engine-initiated sessions per engine base
  std::map<std::string, std::size_t> engine_counts;

  double pct_start_engine = 0;
  double pct_start_direct = 0;
  double pct_start_other = 0;
  std::map<std::string, double> per_engine_shares;
  double pct_sparql_sessions = 0;

  std::size_t triple_count = 0;
};

/// A session starts at an engine when its first event (synthetic or not) is
/// on an engine site, and directly when its first event was logged on one
/// of `registered_domains`. Throws EmptyCorpus.
StatsReport compute_stats( const std::vector<Session>& sessions, const std::set<std::string>& engine_domains,
                           const std::set<std::string>& registered_domains, DayCountMode mode = DayCountMode::calendar_days );

/// count/total as a percentage with one decimal, half rounded up.
std::string format_percentage( std::size_t count, std::size_t total );

/// num/den with two decimals, half rounded up.
std::string format_fixed2( const Rational& r );

std::string format_report_text( const StatsReport& report );

/// Single-line JSON record.
std::string format_report_json( const StatsReport& report );

} // namespace semlog
