#include "semlog/time.hpp"

#include "semlog/errors.hpp"

#include <array>
#include <cstdio>

namespace semlog {

namespace {

constexpr std::array<std::string_view, 12> kMonths = { "Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                       "Jul", "Aug", "Sep", "Oct", "Nov", "Dec" };

bool read_digits( std::string_view text, std::size_t pos, std::size_t count, int& out )
{
  if ( pos + count > text.size() )
    return false;
  int value = 0;
  for ( std::size_t i = pos; i < pos + count; ++i )
  {
    char c = text[i];
    if ( c < '0' || c > '9' )
      return false;
    value = value * 10 + ( c - '0' );
  }
  out = value;
  return true;
}

bool expect_char( std::string_view text, std::size_t pos, char c )
{
  return pos < text.size() && text[pos] == c;
}

} // namespace

Instant make_instant( int year, unsigned month, unsigned day, int hour, int minute, int second )
{
  using namespace std::chrono;
  year_month_day ymd{ std::chrono::year{ year }, std::chrono::month{ month }, std::chrono::day{ day } };
  if ( !ymd.ok() || hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 || second > 59 )
  {
    char buf[64];
    std::snprintf( buf, sizeof buf, "%04d-%02u-%02u %02d:%02d:%02d", year, month, day, hour, minute, second );
    throw InvalidTimestamp( buf );
  }
  return sys_days{ ymd } + hours{ hour } + minutes{ minute } + seconds{ second };
}

Instant parse_clf_time( std::string_view text )
{
  // dd/Mon/yyyy:hh:mm:ss +zzzz
  int day = 0, year = 0, hour = 0, minute = 0, second = 0, zh = 0, zm = 0;
  if ( text.size() != 26 || !read_digits( text, 0, 2, day ) || !expect_char( text, 2, '/' ) ||
       !expect_char( text, 6, '/' ) || !read_digits( text, 7, 4, year ) || !expect_char( text, 11, ':' ) ||
       !read_digits( text, 12, 2, hour ) || !expect_char( text, 14, ':' ) || !read_digits( text, 15, 2, minute ) ||
       !expect_char( text, 17, ':' ) || !read_digits( text, 18, 2, second ) || !expect_char( text, 20, ' ' ) ||
       !( text[21] == '+' || text[21] == '-' ) || !read_digits( text, 22, 2, zh ) || !read_digits( text, 24, 2, zm ) )
  {
    throw InvalidTimestamp( std::string( text ) );
  }
  unsigned month = 0;
  for ( unsigned m = 0; m < kMonths.size(); ++m )
  {
    if ( text.substr( 3, 3 ) == kMonths[m] )
      month = m + 1;
  }
  if ( month == 0 || zm > 59 )
    throw InvalidTimestamp( std::string( text ) );

  Instant local = make_instant( year, month, static_cast<unsigned>( day ), hour, minute, second );
  auto offset = std::chrono::hours{ zh } + std::chrono::minutes{ zm };
  return text[21] == '+' ? local - offset : local + offset;
}

std::string format_clf_time( Instant t )
{
  using namespace std::chrono;
  auto day_point = floor<days>( t );
  year_month_day ymd{ day_point };
  hh_mm_ss hms{ t - day_point };
  char buf[40];
  std::snprintf( buf, sizeof buf, "%02u/%s/%04d:%02d:%02d:%02d +0000", static_cast<unsigned>( ymd.day() ),
                 kMonths[static_cast<unsigned>( ymd.month() ) - 1].data(), static_cast<int>( ymd.year() ),
                 static_cast<int>( hms.hours().count() ), static_cast<int>( hms.minutes().count() ),
                 static_cast<int>( hms.seconds().count() ) );
  return buf;
}

Instant parse_iso8601( std::string_view text )
{
  int year = 0, month = 0, day = 0;
  if ( !read_digits( text, 0, 4, year ) || !expect_char( text, 4, '-' ) || !read_digits( text, 5, 2, month ) ||
       !expect_char( text, 7, '-' ) || !read_digits( text, 8, 2, day ) )
  {
    throw InvalidTimestamp( std::string( text ) );
  }
  if ( text.size() == 10 )
    return make_instant( year, static_cast<unsigned>( month ), static_cast<unsigned>( day ) );

  int hour = 0, minute = 0, second = 0;
  if ( !expect_char( text, 10, 'T' ) || !read_digits( text, 11, 2, hour ) || !expect_char( text, 13, ':' ) ||
       !read_digits( text, 14, 2, minute ) || !expect_char( text, 16, ':' ) || !read_digits( text, 17, 2, second ) )
  {
    throw InvalidTimestamp( std::string( text ) );
  }
  Instant local = make_instant( year, static_cast<unsigned>( month ), static_cast<unsigned>( day ), hour, minute, second );

  std::string_view zone = text.substr( 19 );
  if ( zone == "Z" )
    return local;
  int zh = 0, zm = 0;
  if ( zone.size() == 6 && ( zone[0] == '+' || zone[0] == '-' ) && read_digits( zone, 1, 2, zh ) &&
       expect_char( zone, 3, ':' ) && read_digits( zone, 4, 2, zm ) && zm < 60 )
  {
    auto offset = std::chrono::hours{ zh } + std::chrono::minutes{ zm };
    return zone[0] == '+' ? local - offset : local + offset;
  }
  throw InvalidTimestamp( std::string( text ) );
}

std::string format_iso8601( Instant t )
{
  using namespace std::chrono;
  auto day_point = floor<days>( t );
  year_month_day ymd{ day_point };
  hh_mm_ss hms{ t - day_point };
  char buf[32];
  std::snprintf( buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>( ymd.year() ),
                 static_cast<unsigned>( ymd.month() ), static_cast<unsigned>( ymd.day() ),
                 static_cast<int>( hms.hours().count() ), static_cast<int>( hms.minutes().count() ),
                 static_cast<int>( hms.seconds().count() ) );
  return buf;
}

} // namespace semlog
