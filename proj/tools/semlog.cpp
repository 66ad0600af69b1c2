// semlog: formalize web access logs into typed sessions and query them.

#include "semlog/commands.hpp"
#include "semlog/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace semlog;

namespace {

std::string read_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw IoFailure( "cannot open " + path );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Formalize web access logs into typed browsing sessions and query them" };
  app.require_subcommand( 1 );
  app.fallthrough();

  std::string config_path;
  app.add_option( "--config", config_path, "engine config (JSON)" )->check( CLI::ExistingFile );

  std::string format;
  std::optional<int> gap;
  std::string out_path;
  bool skip_malformed = false;
  std::vector<std::string> logs;
  auto* ingest = app.add_subcommand( "ingest", "parse logs and write a session store" );
  ingest->add_option( "--format", format, "log format" )->check( CLI::IsMember( { "common", "combined" } ) );
  ingest->add_option( "--gap", gap, "idle gap in seconds" )->check( CLI::PositiveNumber );
  ingest->add_option( "--out", out_path, "session store to write" )->required();
  ingest->add_flag( "--skip-malformed", skip_malformed, "skip unparsable lines" );
  ingest->add_option( "logs", logs, "access log files" )->check( CLI::ExistingFile );

  std::string store_path;
  std::string query_text;
  std::string query_file;
  auto* query = app.add_subcommand( "query", "print the ids of matching sessions" );
  query->add_option( "store", store_path, "session store" )->required()->check( CLI::ExistingFile );
  auto* query_arg = query->add_option( "query", query_text, "query text" );
  auto* query_file_opt = query->add_option( "--query-file", query_file, "read the query from a file" )->check( CLI::ExistingFile );
  query_arg->excludes( query_file_opt );

  bool json = false;
  auto* stats = app.add_subcommand( "stats", "usage statistics of a session store" );
  stats->add_option( "store", store_path, "session store" )->required()->check( CLI::ExistingFile );
  stats->add_flag( "--json", json, "single-line JSON record" );

  auto* exporter = app.add_subcommand( "export", "write the sessions as N-Triples" );
  exporter->add_option( "store", store_path, "session store" )->required()->check( CLI::ExistingFile );
  exporter->add_option( "--out", out_path, "triple file to write" )->required();

  CLI11_PARSE( app, argc, argv );

  try
  {
    EngineConfig config = config_path.empty() ? EngineConfig{} : load_config( config_path );

    if ( *ingest )
    {
      if ( !format.empty() )
        config.log_format = parse_log_format( format );
      if ( gap )
        config.idle_gap_seconds = *gap;
      IngestSummary s = cmd_ingest( config, logs, out_path, { skip_malformed } );
      std::cout << "entries read: " << s.entries_read << '\n'
                << "bots dropped: " << s.bots_dropped << '\n';
      if ( skip_malformed )
        std::cout << "malformed skipped: " << s.malformed_skipped << '\n';
      std::cout << "sessions written: " << s.sessions_written << '\n';
    }
    else if ( *query )
    {
      if ( !query_file.empty() )
        query_text = read_file( query_file );
      if ( query_text.empty() )
        throw Error( "no query given" );
      print_query_result( std::cout, cmd_query( config, store_path, query_text ) );
    }
    else if ( *stats )
    {
      StatsReport r = cmd_stats( config, store_path );
      std::cout << ( json ? format_report_json( r ) + "\n" : format_report_text( r ) );
    }
    else if ( *exporter )
    {
      std::cout << "triples: " << cmd_export( config, store_path, out_path ) << '\n';
    }
  }
  catch ( const std::exception& e )
  {
    std::cerr << "semlog: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
