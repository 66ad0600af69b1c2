#include "semlog/stats.hpp"

#include "semlog/errors.hpp"
#include "semlog/knowledge_base.hpp"
#include "semlog/store.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semlog {

DayCountMode parse_day_count_mode( std::string_view name )
{
  if ( name == "calendar_days" )
    return DayCountMode::calendar_days;
  if ( name == "span_days" )
    return DayCountMode::span_days;
  throw Error( "unknown day_count_mode: " + std::string( name ) );
}

std::string_view to_string( DayCountMode mode )
{
  return mode == DayCountMode::calendar_days ? "calendar_days" : "span_days";
}

namespace {

double percent( std::size_t count, std::size_t total )
{
  return total == 0 ? 0.0 : 100.0 * static_cast<double>( count ) / static_cast<double>( total );
}

/// floor(value * scale + 1/2) for value = num/den >= 0
std::int64_t round_half_up( std::int64_t num, std::int64_t den, std::int64_t scale )
{
  return ( 2 * num * scale + den ) / ( 2 * den );
}

std::string with_decimals( std::int64_t scaled, int decimals )
{
  std::int64_t unit = decimals == 1 ? 10 : 100;
  std::string frac = std::to_string( scaled % unit );
  while ( static_cast<int>( frac.size() ) < decimals )
    frac.insert( frac.begin(), '0' );
  return std::to_string( scaled / unit ) + "." + frac;
}

} // namespace

StatsReport compute_stats( const std::vector<Session>& sessions, const std::set<std::string>& engine_domains,
                           const std::set<std::string>& registered_domains, DayCountMode mode )
{
  if ( sessions.empty() )
    throw EmptyCorpus();

  StatsReport r;
  r.session_count = sessions.size();

  auto [first, last] = std::minmax_element( sessions.begin(), sessions.end(), []( const Session& a, const Session& b ) {
    return a.start_time < b.start_time;
  } );
  auto first_day = std::chrono::floor<std::chrono::days>( first->start_time );
  auto last_day = std::chrono::floor<std::chrono::days>( last->start_time );
  std::int64_t calendar = ( last_day - first_day ).count() + 1;
  r.monitored_days = mode == DayCountMode::calendar_days ? calendar : std::max<std::int64_t>( 1, calendar - 1 );

  auto total = static_cast<std::int64_t>( r.session_count );
  std::int64_t g = std::gcd( total, r.monitored_days );
  r.avg_sessions_per_day = { total / g, r.monitored_days / g };

  for ( const auto& s : sessions )
  {
    if ( s.events.empty() )
      continue;
    const BrowsingEvent& head = s.events.front();
    if ( engine_domains.count( head.base_url ) )
    {
      ++r.engine_sessions;
      ++r.engine_counts[head.base_url];
    }
    else if ( !head.synthetic && registered_domains.count( head.base_url ) )
    {
      ++r.direct_sessions;
    }
    else
    {
      ++r.other_sessions;
    }

    bool sparql = std::any_of( s.events.begin(), s.events.end(), []( const BrowsingEvent& e ) {
      return e.function_types.count( wam::SparqlQuery ) > 0;
    } );
    if ( sparql )
      ++r.sparql_sessions;
  }

  r.pct_start_engine = percent( r.engine_sessions, r.session_count );
  r.pct_start_direct = percent( r.direct_sessions, r.session_count );
  r.pct_start_other = percent( r.other_sessions, r.session_count );
  r.pct_sparql_sessions = percent( r.sparql_sessions, r.session_count );
  for ( const auto& [engine, count] : r.engine_counts )
    r.per_engine_shares[engine] = percent( count, r.engine_sessions );

  r.triple_count = count_triples( sessions );
  return r;
}

std::string format_percentage( std::size_t count, std::size_t total )
{
  if ( total == 0 )
    return "0.0";
  return with_decimals( round_half_up( static_cast<std::int64_t>( count ), static_cast<std::int64_t>( total ), 1000 ), 1 );
}

std::string format_fixed2( const Rational& r )
{
  return with_decimals( round_half_up( r.num, r.den, 100 ), 2 );
}

std::string format_report_text( const StatsReport& r )
{
  std::ostringstream out;
  out << "sessions:                " << r.session_count << '\n';
  out << "monitored days:          " << r.monitored_days << '\n';
  out << "avg sessions/day:        " << format_fixed2( r.avg_sessions_per_day ) << '\n';
  out << "start at search engine:  " << format_percentage( r.engine_sessions, r.session_count ) << "%\n";
  out << "start directly:          " << format_percentage( r.direct_sessions, r.session_count ) << "%\n";
  out << "start elsewhere:         " << format_percentage( r.other_sessions, r.session_count ) << "%\n";
  for ( const auto& [engine, count] : r.engine_counts )
    out << "  " << engine << ": " << format_percentage( count, r.engine_sessions ) << "% of engine starts\n";
  out << "sessions with SPARQL:    " << format_percentage( r.sparql_sessions, r.session_count ) << "%\n";
  out << "triples:                 " << r.triple_count << '\n';
  return out.str();
}

std::string format_report_json( const StatsReport& r )
{
  auto pct = [&]( std::size_t count, std::size_t total ) { return std::stod( format_percentage( count, total ) ); };

  nlohmann::ordered_json j;
  j["record"] = "stats";
  j["session_count"] = r.session_count;
  j["monitored_days"] = r.monitored_days;
  j["avg_sessions_per_day"] = std::stod( format_fixed2( r.avg_sessions_per_day ) );
  j["avg_sessions_per_day_exact"] = std::to_string( r.avg_sessions_per_day.num ) + "/" + std::to_string( r.avg_sessions_per_day.den );
  j["pct_start_engine"] = pct( r.engine_sessions, r.session_count );
  j["pct_start_direct"] = pct( r.direct_sessions, r.session_count );
  j["pct_start_other"] = pct( r.other_sessions, r.session_count );
  nlohmann::ordered_json shares = nlohmann::ordered_json::object();
  for ( const auto& [engine, count] : r.engine_counts )
    shares[engine] = pct( count, r.engine_sessions );
  j["per_engine_shares"] = std::move( shares );
  j["pct_sparql_sessions"] = pct( r.sparql_sessions, r.session_count );
  j["triple_count"] = r.triple_count;
  return j.dump();
}

} // namespace semlog
