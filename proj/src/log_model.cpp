#include "semlog/log_model.hpp"

#include "semlog/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace semlog {

namespace {

std::string to_lower( std::string_view text )
{
  std::string out( text );
  std::transform( out.begin(), out.end(), out.begin(), []( unsigned char c ) { return static_cast<char>( std::tolower( c ) ); } );
  return out;
}

/// Cursor over one log line.
class LineScanner
{
public:
  explicit LineScanner( std::string_view line ) : line_( line ) {}

  bool at_end() const { return pos_ >= line_.size(); }

  void skip_spaces()
  {
    while ( pos_ < line_.size() && ( line_[pos_] == ' ' || line_[pos_] == '\t' ) )
      ++pos_;
  }

  std::string_view token( const char* what )
  {
    skip_spaces();
    std::size_t start = pos_;
    while ( pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t' )
      ++pos_;
    if ( start == pos_ )
      throw MalformedLine( std::string( "missing " ) + what );
    return line_.substr( start, pos_ - start );
  }

  std::string_view bracketed()
  {
    skip_spaces();
    if ( at_end() || line_[pos_] != '[' )
      throw MalformedLine( "expected '[' before timestamp" );
    std::size_t close = line_.find( ']', pos_ );
    if ( close == std::string_view::npos )
      throw MalformedLine( "unterminated timestamp" );
    std::string_view inside = line_.substr( pos_ + 1, close - pos_ - 1 );
    pos_ = close + 1;
    return inside;
  }

  std::string quoted( const char* what )
  {
    skip_spaces();
    if ( at_end() || line_[pos_] != '"' )
      throw MalformedLine( std::string( "expected quoted " ) + what );
    ++pos_;
    std::string out;
    while ( pos_ < line_.size() && line_[pos_] != '"' )
    {
      if ( line_[pos_] == '\\' && pos_ + 1 < line_.size() )
        ++pos_;
      out.push_back( line_[pos_++] );
    }
    if ( at_end() )
      throw MalformedLine( std::string( "unterminated " ) + what );
    ++pos_;
    return out;
  }

private:
  std::string_view line_;
  std::size_t pos_ = 0;
};

bool all_digits( std::string_view s )
{
  return !s.empty() && std::all_of( s.begin(), s.end(), []( unsigned char c ) { return std::isdigit( c ) != 0; } );
}

std::optional<std::string> dash_absent( std::string value )
{
  if ( value.empty() || value == "-" )
    return std::nullopt;
  return value;
}

bool is_absolute( std::string_view target )
{
  auto sep = target.find( "://" );
  if ( sep == std::string_view::npos || sep == 0 )
    return false;
  return std::all_of( target.begin(), target.begin() + static_cast<std::ptrdiff_t>( sep ), []( unsigned char c ) {
    return std::isalnum( c ) || c == '+' || c == '-' || c == '.';
  } );
}

std::string quote_field( std::string_view value )
{
  std::string out = "\"";
  for ( char c : value )
  {
    if ( c == '"' || c == '\\' )
      out.push_back( '\\' );
    out.push_back( c );
  }
  out.push_back( '"' );
  return out;
}

int hex_value( char c )
{
  if ( c >= '0' && c <= '9' )
    return c - '0';
  if ( c >= 'a' && c <= 'f' )
    return c - 'a' + 10;
  if ( c >= 'A' && c <= 'F' )
    return c - 'A' + 10;
  return -1;
}

std::string_view default_port( std::string_view scheme )
{
  if ( scheme == "http" )
    return "80";
  if ( scheme == "https" )
    return "443";
  return {};
}

} // namespace

LogFormat parse_log_format( std::string_view name )
{
  if ( name == "common" )
    return LogFormat::common;
  if ( name == "combined" )
    return LogFormat::combined;
  throw Error( "unknown log format: " + std::string( name ) );
}

std::string_view to_string( LogFormat format )
{
  return format == LogFormat::common ? "common" : "combined";
}

LogEntry parse_log_line( std::string_view line, LogFormat format, std::string_view default_host, std::size_t source_line )
{
  while ( !line.empty() && ( line.back() == '\r' || line.back() == '\n' ) )
    line.remove_suffix( 1 );

  LineScanner scan( line );
  std::string_view host = scan.token( "client host" );
  scan.token( "ident field" );
  std::string_view authuser = scan.token( "user field" );
  Instant timestamp = parse_clf_time( scan.bracketed() );
  std::string request = scan.quoted( "request" );
  std::string_view status = scan.token( "status" );
  std::string_view bytes = scan.token( "size" );
  if ( !( all_digits( status ) || status == "-" ) )
    throw MalformedLine( "bad status field" );
  if ( !( all_digits( bytes ) || bytes == "-" ) )
    throw MalformedLine( "bad size field" );

  LogEntry entry;
  entry.user_id = std::string( authuser != "-" ? authuser : host );
  entry.timestamp = timestamp;
  entry.source_line = source_line;

  if ( format == LogFormat::combined )
  {
    entry.referrer = dash_absent( scan.quoted( "referrer" ) );
    entry.user_agent = dash_absent( scan.quoted( "user agent" ) );
  }
  scan.skip_spaces();
  if ( !scan.at_end() )
    throw MalformedLine( "trailing content" );

  // METHOD target [PROTOCOL]
  std::string_view req( request );
  auto first_space = req.find( ' ' );
  if ( first_space == std::string_view::npos )
    throw MalformedLine( "request has no target" );
  std::string_view target = req.substr( first_space + 1 );
  auto last_space = target.rfind( ' ' );
  if ( last_space != std::string_view::npos && target.substr( last_space + 1 ).starts_with( "HTTP/" ) )
    target = target.substr( 0, last_space );
  if ( target.empty() )
    throw MalformedLine( "empty request target" );

  if ( is_absolute( target ) )
  {
    entry.url = std::string( target );
  }
  else
  {
    if ( default_host.empty() )
      throw MalformedLine( "relative request target and no host configured" );
    entry.url = normalize_base( default_host );
    if ( target.front() != '/' )
      entry.url.push_back( '/' );
    entry.url.append( target );
  }
  return entry;
}

std::string serialize_log_line( const LogEntry& entry, LogFormat format )
{
  std::string out = entry.user_id + " - - [" + format_clf_time( entry.timestamp ) + "] " +
                    quote_field( "GET " + entry.url + " HTTP/1.1" ) + " 200 -";
  if ( format == LogFormat::combined )
  {
    out += " " + quote_field( entry.referrer.value_or( "-" ) );
    out += " " + quote_field( entry.user_agent.value_or( "-" ) );
  }
  return out;
}

std::string percent_decode( std::string_view text, bool plus_as_space )
{
  std::string out;
  out.reserve( text.size() );
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    char c = text[i];
    if ( c == '%' && i + 2 < text.size() && hex_value( text[i + 1] ) >= 0 && hex_value( text[i + 2] ) >= 0 )
    {
      out.push_back( static_cast<char>( hex_value( text[i + 1] ) * 16 + hex_value( text[i + 2] ) ) );
      i += 2;
    }
    else if ( c == '+' && plus_as_space )
    {
      out.push_back( ' ' );
    }
    else
    {
      out.push_back( c );
    }
  }
  return out;
}

std::string percent_encode_query( std::string_view text )
{
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for ( unsigned char c : text )
  {
    if ( std::isalnum( c ) || std::string_view( "-._~:/@!$'()*,;" ).find( static_cast<char>( c ) ) != std::string_view::npos )
    {
      out.push_back( static_cast<char>( c ) );
    }
    else
    {
      out.push_back( '%' );
      out.push_back( kHex[c >> 4] );
      out.push_back( kHex[c & 15] );
    }
  }
  return out;
}

UrlParts decompose_url( std::string_view url )
{
  if ( !is_absolute( url ) )
    throw NotAbsoluteUrl( std::string( url ) );

  auto sep = url.find( "://" );
  std::string scheme = to_lower( url.substr( 0, sep ) );
  std::string_view rest = url.substr( sep + 3 );

  auto authority_end = rest.find_first_of( "/?#" );
  std::string_view authority = rest.substr( 0, authority_end );
  std::string_view tail = authority_end == std::string_view::npos ? std::string_view{} : rest.substr( authority_end );

  if ( auto at = authority.rfind( '@' ); at != std::string_view::npos )
    authority = authority.substr( at + 1 );

  std::string_view host = authority;
  std::string_view port;
  if ( auto colon = authority.rfind( ':' ); colon != std::string_view::npos && authority.find( ']' , colon ) == std::string_view::npos )
  {
    host = authority.substr( 0, colon );
    port = authority.substr( colon + 1 );
  }
  if ( host.empty() )
    throw NotAbsoluteUrl( std::string( url ) );

  UrlParts parts;
  parts.base = scheme + "://" + to_lower( host );
  if ( !port.empty() && port != default_port( scheme ) )
    parts.base += ":" + std::string( port );

  if ( auto hash = tail.find( '#' ); hash != std::string_view::npos )
    tail = tail.substr( 0, hash );

  std::string_view query;
  if ( auto q = tail.find( '?' ); q != std::string_view::npos )
  {
    query = tail.substr( q + 1 );
    tail = tail.substr( 0, q );
  }
  parts.path = std::string( tail );

  while ( !query.empty() )
  {
    auto amp = query.find( '&' );
    std::string_view pair = query.substr( 0, amp );
    query = amp == std::string_view::npos ? std::string_view{} : query.substr( amp + 1 );
    if ( pair.empty() )
      continue;
    auto eq = pair.find( '=' );
    Parameter p;
    p.name = percent_decode( pair.substr( 0, eq ), true );
    p.value = eq == std::string_view::npos ? std::string{} : percent_decode( pair.substr( eq + 1 ), true );
    if ( !p.name.empty() )
      parts.params.push_back( std::move( p ) );
  }
  return parts;
}

std::string reassemble_url( const UrlParts& parts )
{
  std::string out = parts.base + parts.path;
  char sep = '?';
  for ( const auto& p : parts.params )
  {
    out.push_back( sep );
    out += percent_encode_query( p.name );
    out.push_back( '=' );
    out += percent_encode_query( p.value );
    sep = '&';
  }
  return out;
}

std::string normalize_url( std::string_view url )
{
  return reassemble_url( decompose_url( url ) );
}

std::string normalize_base( std::string_view url )
{
  if ( is_absolute( url ) )
    return decompose_url( url ).base;
  return decompose_url( "http://" + std::string( url ) ).base;
}

bool is_bot( const LogEntry& entry, const BotPolicy& policy )
{
  if ( !entry.user_agent )
    return policy.treat_missing_agent_as_bot;
  std::string agent = to_lower( *entry.user_agent );
  return std::any_of( policy.agent_substrings.begin(), policy.agent_substrings.end(), [&]( const std::string& s ) {
    return !s.empty() && agent.find( to_lower( s ) ) != std::string::npos;
  } );
}

std::vector<bool> classify_bots( std::span<const LogEntry> entries, const BotPolicy& policy )
{
  std::vector<bool> flagged( entries.size() );
  for ( std::size_t i = 0; i < entries.size(); ++i )
    flagged[i] = is_bot( entries[i], policy );

  if ( !policy.max_requests_per_minute )
    return flagged;
  const auto limit = static_cast<std::size_t>( std::max( 0, *policy.max_requests_per_minute ) );

  std::map<std::string_view, std::vector<std::size_t>> by_user;
  for ( std::size_t i = 0; i < entries.size(); ++i )
    by_user[entries[i].user_id].push_back( i );

  for ( auto& [user, idx] : by_user )
  {
    std::stable_sort( idx.begin(), idx.end(), [&]( std::size_t a, std::size_t b ) {
      return entries[a].timestamp < entries[b].timestamp;
    } );
    // coverage[k] > 0 iff idx[k] lies in some 60 s window holding more than `limit` requests
    std::vector<int> coverage( idx.size() + 1, 0 );
    std::size_t hi = 0;
    for ( std::size_t lo = 0; lo < idx.size(); ++lo )
    {
      hi = std::max( hi, lo );
      while ( hi < idx.size() && entries[idx[hi]].timestamp - entries[idx[lo]].timestamp < std::chrono::seconds{ 60 } )
        ++hi;
      if ( hi - lo > limit )
      {
        ++coverage[lo];
        --coverage[hi];
      }
    }
    int running = 0;
    for ( std::size_t k = 0; k < idx.size(); ++k )
    {
      running += coverage[k];
      if ( running > 0 )
        flagged[idx[k]] = true;
    }
  }
  return flagged;
}

BotFilterResult filter_bots( std::vector<LogEntry> entries, const BotPolicy& policy )
{
  auto flagged = classify_bots( entries, policy );
  BotFilterResult result;
  for ( std::size_t i = 0; i < entries.size(); ++i )
  {
    if ( flagged[i] )
      ++result.dropped;
    else
      result.kept.push_back( std::move( entries[i] ) );
  }
  return result;
}

} // namespace semlog
