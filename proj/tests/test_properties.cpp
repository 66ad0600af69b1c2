#include "properties.hpp"

#include <gtest/gtest.h>

using namespace semlog::testing;

namespace {

void expect_holds( const PropertyResult& r )
{
  EXPECT_GE( r.cases, 1000u );
  EXPECT_EQ( r.failures, 0u ) << r.name << ": " << r.first_failure;
}

} // namespace

TEST( Properties, OracleEquivalence ) { expect_holds( oracle_equivalence( kDefaultSeed, 1000 ) ); }
TEST( Properties, SessionizeOrdering ) { expect_holds( sessionize_ordering( kDefaultSeed, 1000 ) ); }
TEST( Properties, SessionizeDeterminism ) { expect_holds( sessionize_determinism( kDefaultSeed, 1000 ) ); }
TEST( Properties, EventConservation ) { expect_holds( event_conservation( kDefaultSeed, 1000 ) ); }
TEST( Properties, StoreRoundTrip ) { expect_holds( store_roundtrip( kDefaultSeed, 1000 ) ); }
TEST( Properties, ParserFixpoint ) { expect_holds( parser_fixpoint( kDefaultSeed, 1000 ) ); }
TEST( Properties, LtlIdentities ) { expect_holds( ltl_identities( kDefaultSeed, 1000 ) ); }
TEST( Properties, ClosureClosedness ) { expect_holds( closure_closedness( kDefaultSeed, 1000 ) ); }
TEST( Properties, BotWindow ) { expect_holds( bot_window( kDefaultSeed, 1000 ) ); }
TEST( Properties, UrlNormalization ) { expect_holds( url_normalization( kDefaultSeed, 1000 ) ); }
TEST( Properties, LogLineRoundTrip ) { expect_holds( log_line_roundtrip( kDefaultSeed, 1000 ) ); }
TEST( Properties, AnswerPermutation ) { expect_holds( answer_permutation( kDefaultSeed, 1000 ) ); }
