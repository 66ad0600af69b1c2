#include "semlog/errors.hpp"
#include "semlog/knowledge_base.hpp"
#include "semlog/query_language.hpp"

#include <gtest/gtest.h>

using namespace semlog;

namespace {

Formula content( const std::string& name )
{
  return Formula::atom( atoms::Content{ ClassRef{ name, false } } );
}

Formula base( const std::string& url )
{
  return Formula::atom( atoms::BaseUrl{ url } );
}

std::size_t syntax_error_position( const std::string& text )
{
  try
  {
    parse_query( text );
  }
  catch ( const SyntaxError& e )
  {
    return e.position();
  }
  return std::string::npos;
}

} // namespace

TEST( ParseQuery, PrecedenceGoldenAst )
{
  Formula f = parse_formula( "NOT X content(a) U content(b) AND content(c) OR content(d)" );
  Formula expected = Formula::disjunction(
      Formula::conjunction( Formula::until( Formula::negation( Formula::next( content( "a" ) ) ), content( "b" ) ), content( "c" ) ),
      content( "d" ) );
  EXPECT_EQ( f, expected ) << to_string( f );
}

TEST( ParseQuery, UntilIsRightAssociativeAndOthersLeft )
{
  EXPECT_EQ( parse_formula( "content(a) U content(b) U content(c)" ),
             Formula::until( content( "a" ), Formula::until( content( "b" ), content( "c" ) ) ) );
  EXPECT_EQ( parse_formula( "content(a) AND content(b) AND content(c)" ),
             Formula::conjunction( Formula::conjunction( content( "a" ), content( "b" ) ), content( "c" ) ) );
  EXPECT_EQ( parse_formula( "content(a) OR content(b) OR content(c)" ),
             Formula::disjunction( Formula::disjunction( content( "a" ), content( "b" ) ), content( "c" ) ) );
  EXPECT_EQ( parse_formula( "X content(a) AND content(b)" ), Formula::conjunction( Formula::next( content( "a" ) ), content( "b" ) ) );
  EXPECT_EQ( parse_formula( "NOT (content(a) OR TRUE)" ), Formula::negation( Formula::disjunction( content( "a" ), Formula::truth() ) ) );
  EXPECT_EQ( parse_formula( "F G FALSE" ), Formula::eventually( Formula::always( Formula::falsity() ) ) );
}

TEST( ParseQuery, EngineThenSiteQuery )
{
  Query q = parse_query( R"(SESSIONS WHERE starts_after("2009-07-01T00:00:00Z") MATCH function(EngineSearch) AND X baseurl("http://dbpedia.org"))" );
  ASSERT_EQ( q.session_atoms.size(), 1u );
  EXPECT_EQ( q.session_atoms[0], Atom( atoms::StartsAfter{ make_instant( 2009, 7, 1 ) } ) );
  EXPECT_EQ( q.formula, Formula::conjunction( Formula::atom( atoms::Function{ ClassRef{ wam::EngineSearch, true } } ),
                                              Formula::next( base( "http://dbpedia.org" ) ) ) );
}

TEST( ParseQuery, AlwaysOnTwoSites )
{
  Query q = parse_query( R"(SESSIONS MATCH G (baseurl("http://a.org") OR baseurl("http://b.org")))" );
  EXPECT_TRUE( q.session_atoms.empty() );
  EXPECT_EQ( q.formula, Formula::always( Formula::disjunction( base( "http://a.org" ), base( "http://b.org" ) ) ) );
}

TEST( ParseQuery, EventuallyEnglishArtists )
{
  EXPECT_EQ( parse_query( "SESSIONS MATCH F content(EnglishArtists)" ).formula, Formula::eventually( content( "EnglishArtists" ) ) );
}

TEST( ParseQuery, AtomArguments )
{
  Query q = parse_query( R"(SESSIONS WHERE user("10.0.0.1") AND ends_before("2009-08-01") AND is(Session) )"
                         R"(MATCH content(swrc:Publication) AND content(<http://x.org/C>) AND url("HTTP://DBpedia.org:80/page/Lyon") )"
                         R"(AND param(q, "lyon") AND param("a b", "c\"d"))" );
  ASSERT_EQ( q.session_atoms.size(), 3u );
  EXPECT_EQ( q.session_atoms[0], Atom( atoms::User{ "10.0.0.1" } ) );
  EXPECT_EQ( q.session_atoms[1], Atom( atoms::EndsBefore{ make_instant( 2009, 8, 1 ) } ) );
  EXPECT_EQ( q.session_atoms[2], Atom( atoms::Class{ ClassRef{ wam::Session, true } } ) );
  std::string text = to_string( q );
  EXPECT_EQ( parse_query( text ), q ) << text;
  EXPECT_NE( text.find( "http://dbpedia.org/page/Lyon" ), std::string::npos );
  EXPECT_NE( text.find( "swrc.ontoware.org" ), std::string::npos );
}

TEST( ParseQuery, Errors )
{
  EXPECT_EQ( syntax_error_position( "SESSIONS MATCH content(a) AND" ), 29u );
  EXPECT_EQ( syntax_error_position( "SESSION MATCH TRUE" ), 0u );
  EXPECT_EQ( syntax_error_position( "SESSIONS MATCH (TRUE" ), 20u );
  EXPECT_EQ( syntax_error_position( "SESSIONS MATCH TRUE TRUE" ), 20u );
  EXPECT_NE( syntax_error_position( R"(SESSIONS WHERE content(a) MATCH TRUE)" ), std::string::npos );
  EXPECT_NE( syntax_error_position( R"(SESSIONS MATCH starts_after("July"))" ), std::string::npos );
  EXPECT_NE( syntax_error_position( R"(SESSIONS MATCH baseurl("/relative"))" ), std::string::npos );
  EXPECT_NE( syntax_error_position( R"(SESSIONS MATCH content(nope:X))" ), std::string::npos );
  EXPECT_NE( syntax_error_position( R"(SESSIONS MATCH user("unterminated)" ), std::string::npos );
  EXPECT_NE( syntax_error_position( "sessions match true" ), std::string::npos );
  try
  {
    parse_query( "SESSIONS MATCH colour(red)" );
    FAIL() << "expected UnknownAtom";
  }
  catch ( const UnknownAtom& e )
  {
    EXPECT_EQ( e.name(), "colour" );
  }
}

TEST( Desugar, Definitions )
{
  Formula a = content( "a" );
  EXPECT_EQ( desugar( Formula::eventually( a ) ), Formula::until( Formula::truth(), a ) );
  EXPECT_EQ( desugar( Formula::always( a ) ),
             Formula::negation( Formula::until( Formula::truth(), Formula::negation( a ) ) ) );
  EXPECT_EQ( desugar( Formula::next( Formula::eventually( a ) ) ), Formula::next( Formula::until( Formula::truth(), a ) ) );
  EXPECT_TRUE( is_core( desugar( parse_formula( "G (F content(a) OR X G content(b))" ) ) ) );
  EXPECT_FALSE( is_core( parse_formula( "X F content(a)" ) ) );
}

TEST( Formula, ShapeMeasures )
{
  Formula f = parse_formula( "NOT X content(a) U content(b)" );
  EXPECT_EQ( f.depth(), 4u );
  EXPECT_EQ( f.size(), 5u );
  EXPECT_EQ( Formula::truth().depth(), 1u );
}

TEST( Printer, ParenthesizesOnlyWhenNeeded )
{
  EXPECT_EQ( to_string( parse_formula( "(content(a) OR content(b)) AND content(c)" ) ), "(content(a) OR content(b)) AND content(c)" );
  EXPECT_EQ( to_string( parse_formula( "content(a) OR (content(b) AND content(c))" ) ), "content(a) OR content(b) AND content(c)" );
  EXPECT_EQ( to_string( parse_formula( "(content(a) U content(b)) U content(c)" ) ), "(content(a) U content(b)) U content(c)" );
  EXPECT_EQ( to_string( parse_formula( "NOT (X content(a))" ) ), "NOT X content(a)" );
}
