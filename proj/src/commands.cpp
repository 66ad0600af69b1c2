#include "semlog/commands.hpp"

#include "semlog/engine.hpp"
#include "semlog/errors.hpp"
#include "semlog/store.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

namespace semlog {

std::vector<LogEntry> read_log_files( const EngineConfig& config, const std::vector<std::string>& paths,
                                      const IngestOptions& options, std::size_t* skipped )
{
  std::vector<LogEntry> entries;
  std::size_t line_counter = 0;
  std::size_t skip_count = 0;

  for ( const auto& path : paths )
  {
    std::ifstream in( path );
    if ( !in )
      throw IoFailure( "cannot open log file " + path );

    std::string host;
    auto name = std::filesystem::path( path ).filename().string();
    if ( auto it = config.log_hosts.find( name ); it != config.log_hosts.end() )
      host = it->second;
    else if ( config.default_host )
      host = *config.default_host;

    std::string line;
    std::size_t line_no = 0;
    while ( std::getline( in, line ) )
    {
      ++line_no;
      ++line_counter;
      if ( !line.empty() && line.back() == '\r' )
        line.pop_back();
      if ( line.find_first_not_of( " \t" ) == std::string::npos )
        continue;
      try
      {
        LogEntry entry = parse_log_line( line, config.log_format, host, line_counter );
        decompose_url( entry.url );
        entries.push_back( std::move( entry ) );
      }
      catch ( const Error& e )
      {
        if ( !options.skip_malformed )
          throw Error( path + ":" + std::to_string( line_no ) + ": " + e.what() );
        ++skip_count;
      }
    }
    if ( in.bad() )
      throw IoFailure( "error reading " + path );
  }
  if ( skipped )
    *skipped = skip_count;
  return entries;
}

std::vector<Session> formalize( std::vector<LogEntry> entries, const EngineConfig& config, const OntologyRegistry& registry,
                                std::size_t* bots_dropped )
{
  BotFilterResult filtered = filter_bots( std::move( entries ), config.bot_policy );
  if ( bots_dropped )
    *bots_dropped = filtered.dropped;

  std::vector<Session> sessions = sessionize( filtered.kept, config.idle_gap_seconds );

  std::set<std::string> known = config.monitored_domains();
  EnrichmentContext context{ &registry, config.engine_domains, config.function_rules };
  for ( auto& s : sessions )
    s = enrich_session( insert_referrer_events( s, known ), context );
  return sessions;
}

IngestSummary cmd_ingest( const EngineConfig& config, const std::vector<std::string>& log_paths, const std::string& out_path,
                          const IngestOptions& options )
{
  OntologyRegistry registry = load_registry( config );

  IngestSummary summary;
  std::vector<LogEntry> entries = read_log_files( config, log_paths, options, &summary.malformed_skipped );
  summary.entries_read = entries.size() + summary.malformed_skipped;

  std::vector<Session> sessions = formalize( std::move( entries ), config, registry, &summary.bots_dropped );
  summary.sessions_written = write_sessions( out_path, sessions );
  return summary;
}

std::vector<std::string> cmd_query( const EngineConfig&, const std::string& store_path, const std::string& query_text )
{
  Query query = parse_query( query_text );
  return answer( query, read_sessions( store_path ) );
}

void print_query_result( std::ostream& out, const std::vector<std::string>& ids )
{
  for ( const auto& id : ids )
    out << id << '\n';
  out << "count: " << ids.size() << '\n';
}

StatsReport cmd_stats( const EngineConfig& config, const std::string& store_path )
{
  return compute_stats( read_sessions( store_path ), config.engine_domains, config.monitored_domains(), config.day_count_mode );
}

std::size_t cmd_export( const EngineConfig&, const std::string& store_path, const std::string& out_path )
{
  return export_triples( read_sessions( store_path ), out_path );
}

} // namespace semlog
