#include "semlog/errors.hpp"
#include "semlog/time.hpp"

#include <gtest/gtest.h>

using namespace semlog;

TEST( Time, ParsesClfAndConvertsOffset )
{
  EXPECT_EQ( parse_clf_time( "01/Jul/2009:17:11:49 +0000" ), make_instant( 2009, 7, 1, 17, 11, 49 ) );
  EXPECT_EQ( parse_clf_time( "01/Jul/2009:19:11:49 +0200" ), make_instant( 2009, 7, 1, 17, 11, 49 ) );
  EXPECT_EQ( parse_clf_time( "30/Jun/2009:23:30:00 -0100" ), make_instant( 2009, 7, 1, 0, 30, 0 ) );
}

TEST( Time, ClfRoundTrip )
{
  Instant t = make_instant( 2009, 12, 31, 23, 59, 59 );
  EXPECT_EQ( format_clf_time( t ), "31/Dec/2009:23:59:59 +0000" );
  EXPECT_EQ( parse_clf_time( format_clf_time( t ) ), t );
}

TEST( Time, RejectsOutOfRangeFields )
{
  EXPECT_THROW( parse_clf_time( "32/Jul/2009:17:11:49 +0000" ), InvalidTimestamp );
  EXPECT_THROW( parse_clf_time( "29/Feb/2009:00:00:00 +0000" ), InvalidTimestamp );
  EXPECT_THROW( parse_clf_time( "01/Jux/2009:00:00:00 +0000" ), InvalidTimestamp );
  EXPECT_THROW( parse_clf_time( "01/Jul/2009:24:00:00 +0000" ), InvalidTimestamp );
  EXPECT_THROW( parse_clf_time( "01/Jul/2009:23:00:60 +0000" ), InvalidTimestamp );
  EXPECT_THROW( parse_clf_time( "01/Jul/2009 17:11:49" ), InvalidTimestamp );
  EXPECT_NO_THROW( parse_clf_time( "29/Feb/2008:00:00:00 +0000" ) );
}

TEST( Time, Iso8601 )
{
  Instant t = make_instant( 2009, 7, 1 );
  EXPECT_EQ( parse_iso8601( "2009-07-01T00:00:00Z" ), t );
  EXPECT_EQ( parse_iso8601( "2009-07-01" ), t );
  EXPECT_EQ( parse_iso8601( "2009-07-01T02:00:00+02:00" ), t );
  EXPECT_EQ( format_iso8601( make_instant( 2009, 7, 1, 17, 11, 49 ) ), "2009-07-01T17:11:49Z" );
  EXPECT_THROW( parse_iso8601( "2009-13-01T00:00:00Z" ), InvalidTimestamp );
  EXPECT_THROW( parse_iso8601( "2009-07-01T00:00:00" ), InvalidTimestamp );
  EXPECT_THROW( parse_iso8601( "yesterday" ), InvalidTimestamp );
}
