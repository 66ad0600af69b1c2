#include "fixtures.hpp"
#include "generators.hpp"

#include "semlog/errors.hpp"
#include "semlog/store.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace semlog;

namespace {

const std::string kSwrc = "http://swrc.ontoware.org/ontology#";

Session one_event_session()
{
  BrowsingEvent e;
  e.full_url = "http://data.semanticweb.org/conference/www/2009/paper/1";
  e.base_url = "http://data.semanticweb.org";
  e.time = make_instant( 2009, 7, 1, 17, 11, 49 );
  e.order = 1;
  e.content_types = { kSwrc + "InProceedings", kSwrc + "Publication" };
  e.function_types = { wam::Informative };
  Session s;
  s.user = "u1";
  s.start_time = s.end_time = e.time;
  s.id = make_session_id( s.user, s.start_time );
  s.events.push_back( e );
  return s;
}

Session lyon_session()
{
  Session s = one_event_session();
  BrowsingEvent e = s.events[0];
  e.full_url = "http://dbpedia.org/page/Lyon";
  e.base_url = "http://dbpedia.org";
  e.time += std::chrono::seconds{ 60 };
  e.order = 2;
  e.content_types = { "http://dbpedia.org/ontology/City" };
  e.referrer = "http://google.com/search?q=lyon";
  s.events.push_back( e );
  s.end_time = e.time;
  return s;
}

} // namespace

TEST( Store, ThirteenTriplesForOneEvent )
{
  Session s = one_event_session();
  auto triples = session_triples( s );
  EXPECT_EQ( triples.size(), 13u );
  EXPECT_EQ( count_triples( { s } ), 13u );
  std::ostringstream out;
  EXPECT_EQ( export_triples( { s }, out ), 13u );
  std::string text = out.str();
  EXPECT_EQ( std::count( text.begin(), text.end(), '\n' ), 13 );
}

TEST( Store, EmptyExport )
{
  std::ostringstream out;
  EXPECT_EQ( export_triples( {}, out ), 0u );
  EXPECT_TRUE( out.str().empty() );
}

TEST( Store, TripleVocabulary )
{
  Session s = lyon_session();
  auto triples = session_triples( s );
  EXPECT_EQ( triples.size(), count_triples( { s } ) );
  const std::string e2 = event_iri( s, s.events[1] );
  auto has = [&]( const std::string& subj, const std::string& pred, const Term& obj ) {
    return std::find( triples.begin(), triples.end(), Triple{ Term::iri( subj ), Term::iri( pred ), obj } ) != triples.end();
  };
  EXPECT_TRUE( has( e2, wam::baseURL, Term::literal( "http://dbpedia.org" ) ) );
  EXPECT_TRUE( has( e2, wam::fullURL, Term::literal( "http://dbpedia.org/page/Lyon" ) ) );
  EXPECT_TRUE( has( e2, wam::time, Term::literal( "2009-07-01T17:12:49Z", vocab::xsd_dateTime ) ) );
  EXPECT_TRUE( has( e2, wam::order, Term::literal( "2", vocab::xsd_integer ) ) );
  EXPECT_TRUE( has( e2, vocab::rdf_type, Term::iri( wam::EndEvent ) ) );
  EXPECT_TRUE( has( event_iri( s, s.events[0] ), vocab::rdf_type, Term::iri( wam::StartEvent ) ) );
  EXPECT_TRUE( has( session_iri( s ), wam::hasEvent, Term::iri( e2 ) ) );
  EXPECT_TRUE( has( session_iri( s ), vocab::rdf_type, Term::iri( wam::Session ) ) );
  EXPECT_TRUE( has( e2, wam::contentType, Term::iri( "http://dbpedia.org/ontology/City" ) ) );
}

TEST( Store, TripleCountFormulaOnRandomSessions )
{
  semlog::testing::Rng rng( 11 );
  for ( int i = 0; i < 300; ++i )
  {
    Session s = semlog::testing::random_session( rng );
    std::size_t types = 0;
    for ( const auto& e : s.events )
      types += e.content_types.size() + e.function_types.size();
    EXPECT_EQ( session_triples( s ).size(), 4 + 6 * s.events.size() + types );
  }
}

TEST( Store, ExportIsReadableAsTriples )
{
  std::ostringstream out;
  export_triples( { lyon_session() }, out );
  std::istringstream in( out.str() );
  std::size_t n = 0;
  read_triples( in, [&]( const Triple&, std::size_t ) { ++n; } );
  EXPECT_EQ( n, count_triples( { lyon_session() } ) );
}

TEST( Store, WriteReadFiles )
{
  semlog::testing::TempDir dir;
  EXPECT_EQ( write_sessions( ( dir / "empty.jsonl" ).string(), {} ), 0u );
  EXPECT_TRUE( semlog::testing::read_text( dir / "empty.jsonl" ).empty() );
  EXPECT_TRUE( read_sessions( ( dir / "empty.jsonl" ).string() ).empty() );

  std::vector<Session> three = { one_event_session(), lyon_session(), one_event_session() };
  three[2].user = "u2";
  three[2].id = make_session_id( "u2", three[2].start_time );
  EXPECT_EQ( write_sessions( ( dir / "three.jsonl" ).string(), three ), 3u );
  std::string text = semlog::testing::read_text( dir / "three.jsonl" );
  EXPECT_EQ( std::count( text.begin(), text.end(), '\n' ), 3 );
  EXPECT_EQ( read_sessions( ( dir / "three.jsonl" ).string() ), three );
}

TEST( Store, FiveHundredRandomSessionsRoundTrip )
{
  semlog::testing::Rng rng( 500 );
  std::vector<Session> sessions;
  for ( int i = 0; i < 500; ++i )
    sessions.push_back( semlog::testing::random_session( rng ) );
  semlog::testing::TempDir dir;
  write_sessions( ( dir / "s.jsonl" ).string(), sessions );
  EXPECT_EQ( read_sessions( ( dir / "s.jsonl" ).string() ), sessions );
}

TEST( Store, RecordLayout )
{
  std::string line = encode_session( lyon_session() );
  EXPECT_EQ( line.rfind( R"({"schema_version":1,"id":"u1@2009-07-01T17:11:49Z","user":"u1")", 0 ), 0u );
  EXPECT_EQ( line.find( '\n' ), std::string::npos );
  EXPECT_NE( line.find( R"("referrer":"http://google.com/search?q=lyon")" ), std::string::npos );
}

TEST( Store, Errors )
{
  std::string good = encode_session( one_event_session() );
  std::string future = good;
  future.replace( future.find( "\"schema_version\":1" ), 18, "\"schema_version\":2" );
  try
  {
    decode_session( future, 4 );
    FAIL() << "expected SchemaMismatch";
  }
  catch ( const SchemaMismatch& e )
  {
    EXPECT_EQ( e.line(), 4u );
    EXPECT_EQ( e.version(), 2 );
  }
  EXPECT_THROW( decode_session( "{not json", 1 ), MalformedRecord );
  EXPECT_THROW( decode_session( R"({"schema_version":1})", 1 ), MalformedRecord );

  std::string broken = good;
  broken.replace( broken.find( "\"order\":1" ), 9, "\"order\":2" );
  EXPECT_THROW( decode_session( broken, 1 ), MalformedRecord );

  std::istringstream in( good + "\n\n" + "[]\n" );
  try
  {
    read_sessions( in );
    FAIL() << "expected MalformedRecord";
  }
  catch ( const MalformedRecord& e )
  {
    EXPECT_EQ( e.line(), 3u );
  }
  EXPECT_THROW( read_sessions( "/nonexistent/dir/store.jsonl" ), IoFailure );
  EXPECT_THROW( write_sessions( "/nonexistent/dir/store.jsonl", {} ), IoFailure );
}
