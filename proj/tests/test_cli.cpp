#include "fixtures.hpp"

#include "semlog/errors.hpp"
#include "semlog/knowledge_base.hpp"
#include "semlog/store.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace semlog;
using namespace semlog::testing;
namespace fs = std::filesystem;

namespace {

struct CliRun
{
  int status = 0;
  std::string out;
  std::string err;
};

std::string quote( const std::string& s )
{
  std::string q = "'";
  for ( char c : s )
    q += c == '\'' ? std::string( "'\\''" ) : std::string( 1, c );
  return q + "'";
}

CliRun run_cli( const std::vector<std::string>& args, const TempDir& dir )
{
  std::string cmd = quote( SEMLOG_CLI );
  for ( const auto& a : args )
    cmd += " " + quote( a );
  fs::path err = dir / "stderr.txt";
  cmd += " 2>" + quote( err.string() );
  CliRun r;
  FILE* pipe = ::popen( cmd.c_str(), "r" );
  if ( !pipe )
    return { -1, {}, {} };
  std::array<char, 4096> buf;
  std::size_t n;
  while ( ( n = std::fread( buf.data(), 1, buf.size(), pipe ) ) > 0 )
    r.out.append( buf.data(), n );
  int raw = ::pclose( pipe );
  r.status = WIFEXITED( raw ) ? WEXITSTATUS( raw ) : -1;
  r.err = read_text( err );
  return r;
}

const char* kThreeLines =
    "1.2.3.4 - - [01/Jul/2009:10:00:00 +0000] \"GET /a HTTP/1.1\" 200 10 \"-\" \"Mozilla/5.0\"\n"
    "1.2.3.4 - - [01/Jul/2009:10:01:00 +0000] \"GET /b HTTP/1.1\" 200 10 \"-\" \"Mozilla/5.0\"\n"
    "5.6.7.8 - - [01/Jul/2009:10:02:00 +0000] \"GET /a HTTP/1.1\" 200 10 \"-\" \"Googlebot/2.1\"\n";

EngineConfig small_config()
{
  return parse_config( R"({"default_host": "http://a.org"})" );
}

} // namespace

TEST( Commands, IngestThreeLines )
{
  TempDir dir;
  write_text( dir / "access.log", kThreeLines );
  IngestSummary s = cmd_ingest( small_config(), { ( dir / "access.log" ).string() }, ( dir / "store.jsonl" ).string() );
  EXPECT_EQ( s, ( IngestSummary{ 3, 1, 0, 1 } ) );
  auto sessions = read_sessions( ( dir / "store.jsonl" ).string() );
  ASSERT_EQ( sessions.size(), 1u );
  EXPECT_EQ( sessions[0].user, "1.2.3.4" );
  EXPECT_EQ( sessions[0].events.size(), 2u );
}

TEST( Commands, IngestEmptyFile )
{
  TempDir dir;
  write_text( dir / "empty.log", "" );
  IngestSummary s = cmd_ingest( small_config(), { ( dir / "empty.log" ).string() }, ( dir / "store.jsonl" ).string() );
  EXPECT_EQ( s, ( IngestSummary{ 0, 0, 0, 0 } ) );
  EXPECT_TRUE( cmd_query( small_config(), ( dir / "store.jsonl" ).string(), "SESSIONS MATCH TRUE" ).empty() );
  EXPECT_THROW( cmd_stats( small_config(), ( dir / "store.jsonl" ).string() ), EmptyCorpus );
}

TEST( Commands, MalformedLineNamesItsLocation )
{
  TempDir dir;
  write_text( dir / "bad.log", std::string( kThreeLines ) + "garbage\n" );
  try
  {
    cmd_ingest( small_config(), { ( dir / "bad.log" ).string() }, ( dir / "store.jsonl" ).string() );
    FAIL() << "expected an error";
  }
  catch ( const Error& e )
  {
    EXPECT_NE( std::string( e.what() ).find( "bad.log:4" ), std::string::npos ) << e.what();
  }
  IngestSummary s = cmd_ingest( small_config(), { ( dir / "bad.log" ).string() }, ( dir / "store.jsonl" ).string(), { true } );
  EXPECT_EQ( s, ( IngestSummary{ 4, 1, 1, 1 } ) );
}

TEST( Commands, MissingLogFile )
{
  TempDir dir;
  EXPECT_THROW( cmd_ingest( small_config(), { ( dir / "nope.log" ).string() }, ( dir / "store.jsonl" ).string() ), IoFailure );
}

TEST( Commands, CorpusIngest )
{
  TempDir dir;
  auto labels = load_corpus_labels();
  IngestSummary s = ingest_corpus( dir / "store.jsonl" );
  EXPECT_EQ( s.entries_read, labels.log_lines );
  EXPECT_EQ( s.bots_dropped, labels.bot_lines );
  EXPECT_EQ( s.sessions_written, labels.sessions );
  EXPECT_EQ( cmd_export( corpus_config(), ( dir / "store.jsonl" ).string(), ( dir / "out.nt" ).string() ),
             count_triples( read_sessions( ( dir / "store.jsonl" ).string() ) ) );
}

TEST( Commands, PrintQueryResult )
{
  std::ostringstream out;
  print_query_result( out, { "a@x", "b@y" } );
  EXPECT_EQ( out.str(), "a@x\nb@y\ncount: 2\n" );
  std::ostringstream none;
  print_query_result( none, {} );
  EXPECT_EQ( none.str(), "count: 0\n" );
}

TEST( Config, UnknownKeysAreRejected )
{
  EXPECT_THROW( parse_config( R"({"colour": 1})" ), ConfigError );
  EXPECT_THROW( parse_config( R"({"bot_policy": {"limit": 5}})" ), ConfigError );
  EXPECT_THROW( parse_config( "{" ), ConfigError );
}

TEST( Config, MissingOntologyFile )
{
  TempDir dir;
  EXPECT_THROW( parse_config( R"({"ontologies": [{"domain": "http://a.org", "file": "missing.nt"}]})", dir.path().string() ),
                ConfigError );
}

TEST( Config, Defaults )
{
  EngineConfig c = parse_config( "{}" );
  EXPECT_EQ( c.idle_gap_seconds, 1800 );
  EXPECT_TRUE( c.engine_domains.count( "http://www.google.com" ) );
  EXPECT_EQ( c.day_count_mode, DayCountMode::calendar_days );
}

TEST( Cli, IngestQueryStats )
{
  TempDir dir;
  write_text( dir / "access.log", kThreeLines );
  write_text( dir / "config.json", R"({"default_host": "http://a.org"})" );
  std::string config = ( dir / "config.json" ).string();
  std::string store = ( dir / "store.jsonl" ).string();

  CliRun ingest = run_cli( { "--config", config, "ingest", "--out", store, ( dir / "access.log" ).string() }, dir );
  ASSERT_EQ( ingest.status, 0 ) << ingest.err;
  EXPECT_NE( ingest.out.find( "entries read: 3" ), std::string::npos ) << ingest.out;
  EXPECT_NE( ingest.out.find( "bots dropped: 1" ), std::string::npos );
  EXPECT_NE( ingest.out.find( "sessions written: 1" ), std::string::npos );

  CliRun query = run_cli( { "--config", config, "query", store, "SESSIONS MATCH F url(\"http://a.org/b\")" }, dir );
  ASSERT_EQ( query.status, 0 ) << query.err;
  EXPECT_EQ( query.out, "1.2.3.4@2009-07-01T10:00:00Z\ncount: 1\n" );

  CliRun stats = run_cli( { "--config", config, "stats", store, "--json" }, dir );
  ASSERT_EQ( stats.status, 0 ) << stats.err;
  EXPECT_NE( stats.out.find( "\"session_count\":1" ), std::string::npos ) << stats.out;
}

TEST( Cli, MalformedQueryFails )
{
  TempDir dir;
  write_text( dir / "store.jsonl", "" );
  CliRun r = run_cli( { "query", ( dir / "store.jsonl" ).string(), "SESSIONS MATCH content(a) AND" }, dir );
  EXPECT_NE( r.status, 0 );
  EXPECT_NE( r.err.find( "29" ), std::string::npos ) << r.err;
  EXPECT_TRUE( r.out.empty() );
}

TEST( Cli, EmptyStoreQuery )
{
  TempDir dir;
  write_text( dir / "store.jsonl", "" );
  CliRun r = run_cli( { "query", ( dir / "store.jsonl" ).string(), "SESSIONS MATCH TRUE" }, dir );
  EXPECT_EQ( r.status, 0 ) << r.err;
  EXPECT_EQ( r.out, "count: 0\n" );
}

TEST( Cli, BadConfigFails )
{
  TempDir dir;
  write_text( dir / "config.json", R"({"idle_gap": 5})" );
  write_text( dir / "store.jsonl", "" );
  CliRun r = run_cli( { "--config", ( dir / "config.json" ).string(), "query", ( dir / "store.jsonl" ).string(), "SESSIONS MATCH TRUE" },
                   dir );
  EXPECT_NE( r.status, 0 );
  EXPECT_NE( r.err.find( "semlog:" ), std::string::npos );
}

TEST( Cli, OutputsAreDeterministic )
{
  TempDir dir;
  std::string config = fixture_path( "corpus/config.json" ).string();
  std::vector<std::string> logs = { fixture_path( "corpus/dbpedia.log" ).string(), fixture_path( "corpus/swdf.log" ).string() };
  std::string first;
  std::string first_stats;
  std::string first_export;
  for ( int round = 0; round < 2; ++round )
  {
    std::string store = ( dir / ( "store" + std::to_string( round ) + ".jsonl" ) ).string();
    std::string nt = ( dir / ( "out" + std::to_string( round ) + ".nt" ) ).string();
    std::vector<std::string> args = { "--config", config, "ingest", "--out", store };
    args.insert( args.end(), logs.begin(), logs.end() );
    ASSERT_EQ( run_cli( args, dir ).status, 0 );
    CliRun stats = run_cli( { "--config", config, "stats", store }, dir );
    ASSERT_EQ( run_cli( { "--config", config, "export", store, "--out", nt }, dir ).status, 0 );
    if ( round == 0 )
    {
      first = read_text( store );
      first_stats = stats.out;
      first_export = read_text( nt );
    }
    else
    {
      EXPECT_EQ( read_text( store ), first );
      EXPECT_EQ( stats.out, first_stats );
      EXPECT_EQ( read_text( nt ), first_export );
    }
  }
  EXPECT_FALSE( first.empty() );
  EXPECT_NE( first_stats.find( "avg sessions/day:        4.17" ), std::string::npos ) << first_stats;
}
