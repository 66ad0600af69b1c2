#include "semlog/store.hpp"

#include "semlog/errors.hpp"
#include "semlog/knowledge_base.hpp"

#include <json.hpp>

#include <fstream>

namespace semlog {

using json = nlohmann::ordered_json;

namespace {

json encode_event( const BrowsingEvent& e )
{
  json params = json::array();
  for ( const auto& p : e.params )
    params.push_back( json::array( { p.name, p.value } ) );
  json out;
  out["order"] = e.order;
  out["full_url"] = e.full_url;
  out["base_url"] = e.base_url;
  out["params"] = std::move( params );
  out["time"] = format_iso8601( e.time );
  out["content_types"] = e.content_types;
  out["function_types"] = e.function_types;
  out["synthetic"] = e.synthetic;
  out["referrer"] = e.referrer ? json( *e.referrer ) : json( nullptr );
  return out;
}

class RecordReader
{
public:
  explicit RecordReader( std::size_t line ) : line_( line ) {}

  [[noreturn]] void fail( const std::string& reason ) const { throw MalformedRecord( line_, reason ); }

  const json& field( const json& obj, const char* key ) const
  {
    auto it = obj.find( key );
    if ( it == obj.end() )
      fail( std::string( "missing field '" ) + key + "'" );
    return *it;
  }

  std::string string( const json& obj, const char* key ) const
  {
    const json& v = field( obj, key );
    if ( !v.is_string() )
      fail( std::string( "field '" ) + key + "' is not a string" );
    return v.get<std::string>();
  }

  Instant instant( const json& obj, const char* key ) const
  {
    try
    {
      return parse_iso8601( string( obj, key ) );
    }
    catch ( const InvalidTimestamp& e )
    {
      fail( e.what() );
    }
  }

  std::set<std::string> string_set( const json& obj, const char* key ) const
  {
    const json& v = field( obj, key );
    if ( !v.is_array() )
      fail( std::string( "field '" ) + key + "' is not an array" );
    std::set<std::string> out;
    for ( const auto& item : v )
    {
      if ( !item.is_string() )
        fail( std::string( "field '" ) + key + "' holds a non-string" );
      out.insert( item.get<std::string>() );
    }
    return out;
  }

  BrowsingEvent event( const json& obj ) const
  {
    if ( !obj.is_object() )
      fail( "event is not an object" );
    BrowsingEvent e;
    const json& order = field( obj, "order" );
    if ( !order.is_number_integer() )
      fail( "field 'order' is not an integer" );
    e.order = order.get<int>();
    e.full_url = string( obj, "full_url" );
    e.base_url = string( obj, "base_url" );
    const json& params = field( obj, "params" );
    if ( !params.is_array() )
      fail( "field 'params' is not an array" );
    for ( const auto& p : params )
    {
      if ( !p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string() )
        fail( "parameter is not a [name, value] pair" );
      e.params.push_back( { p[0].get<std::string>(), p[1].get<std::string>() } );
    }
    e.time = instant( obj, "time" );
    e.content_types = string_set( obj, "content_types" );
    e.function_types = string_set( obj, "function_types" );
    const json& synthetic = field( obj, "synthetic" );
    if ( !synthetic.is_boolean() )
      fail( "field 'synthetic' is not a boolean" );
    e.synthetic = synthetic.get<bool>();
    const json& referrer = field( obj, "referrer" );
    if ( referrer.is_string() )
      e.referrer = referrer.get<std::string>();
    else if ( !referrer.is_null() )
      fail( "field 'referrer' is neither a string nor null" );
    return e;
  }

private:
  std::size_t line_;
};

Triple iri_triple( const std::string& s, const std::string& p, const std::string& o )
{
  return { Term::iri( s ), Term::iri( p ), Term::iri( o ) };
}

Triple literal_triple( const std::string& s, const std::string& p, std::string value, std::string datatype = {} )
{
  return { Term::iri( s ), Term::iri( p ), Term::literal( std::move( value ), std::move( datatype ) ) };
}

} // namespace

std::string encode_session( const Session& session )
{
  json out;
  out["schema_version"] = kSchemaVersion;
  out["id"] = session.id;
  out["user"] = session.user;
  out["start"] = format_iso8601( session.start_time );
  out["end"] = format_iso8601( session.end_time );
  json events = json::array();
  for ( const auto& e : session.events )
    events.push_back( encode_event( e ) );
  out["events"] = std::move( events );
  return out.dump( -1, ' ', false, json::error_handler_t::replace );
}

Session decode_session( const std::string& line, std::size_t line_number )
{
  RecordReader reader( line_number );
  json obj;
  try
  {
    obj = json::parse( line );
  }
  catch ( const json::parse_error& e )
  {
    reader.fail( e.what() );
  }
  if ( !obj.is_object() )
    reader.fail( "record is not an object" );

  const json& version = reader.field( obj, "schema_version" );
  if ( !version.is_number_integer() )
    reader.fail( "field 'schema_version' is not an integer" );
  if ( version.get<long long>() != kSchemaVersion )
    throw SchemaMismatch( line_number, version.get<long long>() );

  Session s;
  s.id = reader.string( obj, "id" );
  s.user = reader.string( obj, "user" );
  s.start_time = reader.instant( obj, "start" );
  s.end_time = reader.instant( obj, "end" );
  const json& events = reader.field( obj, "events" );
  if ( !events.is_array() )
    reader.fail( "field 'events' is not an array" );
  for ( const auto& e : events )
    s.events.push_back( reader.event( e ) );
  if ( !is_well_formed( s ) )
    reader.fail( "session violates ordering or time-bound invariants" );
  return s;
}

void write_sessions( std::ostream& out, const std::vector<Session>& sessions )
{
  for ( const auto& s : sessions )
    out << encode_session( s ) << '\n';
}

std::size_t write_sessions( const std::string& path, const std::vector<Session>& sessions )
{
  std::ofstream out( path, std::ios::binary | std::ios::trunc );
  if ( !out )
    throw IoFailure( "cannot open " + path + " for writing" );
  write_sessions( out, sessions );
  out.flush();
  if ( !out )
    throw IoFailure( "write to " + path + " failed" );
  return sessions.size();
}

std::vector<Session> read_sessions( std::istream& in )
{
  std::vector<Session> sessions;
  std::string line;
  std::size_t number = 0;
  while ( std::getline( in, line ) )
  {
    ++number;
    if ( line.empty() )
      continue;
    sessions.push_back( decode_session( line, number ) );
  }
  if ( in.bad() )
    throw IoFailure( "read failed" );
  return sessions;
}

std::vector<Session> read_sessions( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw IoFailure( "cannot open " + path );
  return read_sessions( in );
}

std::string session_iri( const Session& session )
{
  return "http://greenlinkeddata.org/wam/session/" + percent_encode_query( session.id );
}

std::string event_iri( const Session& session, const BrowsingEvent& event )
{
  return session_iri( session ) + "/e" + std::to_string( event.order );
}

std::vector<Triple> session_triples( const Session& session )
{
  std::vector<Triple> out;
  const std::string s = session_iri( session );
  out.push_back( iri_triple( s, vocab::rdf_type, wam::Session ) );
  out.push_back( literal_triple( s, wam::user, session.user ) );
  for ( const auto& e : session.events )
    out.push_back( iri_triple( s, wam::hasEvent, event_iri( session, e ) ) );

  for ( const auto& e : session.events )
  {
    const std::string ev = event_iri( session, e );
    out.push_back( iri_triple( ev, vocab::rdf_type, wam::Event ) );
    out.push_back( literal_triple( ev, wam::fullURL, e.full_url ) );
    out.push_back( literal_triple( ev, wam::baseURL, e.base_url ) );
    out.push_back( literal_triple( ev, wam::time, format_iso8601( e.time ), vocab::xsd_dateTime ) );
    out.push_back( literal_triple( ev, wam::order, std::to_string( e.order ), vocab::xsd_integer ) );
    for ( const auto& c : e.content_types )
      out.push_back( iri_triple( ev, wam::contentType, c ) );
    for ( const auto& f : e.function_types )
      out.push_back( iri_triple( ev, wam::functionType, f ) );
  }

  if ( !session.events.empty() )
  {
    out.push_back( iri_triple( event_iri( session, session.events.front() ), vocab::rdf_type, wam::StartEvent ) );
    out.push_back( iri_triple( event_iri( session, session.events.back() ), vocab::rdf_type, wam::EndEvent ) );
  }
  return out;
}

std::size_t count_triples( const std::vector<Session>& sessions )
{
  std::size_t total = 0;
  for ( const auto& s : sessions )
  {
    total += 4 + 6 * s.events.size();
    for ( const auto& e : s.events )
      total += e.content_types.size() + e.function_types.size();
  }
  return total;
}

std::size_t export_triples( const std::vector<Session>& sessions, std::ostream& out )
{
  std::size_t count = 0;
  for ( const auto& s : sessions )
  {
    for ( const auto& t : session_triples( s ) )
    {
      out << format_triple( t ) << '\n';
      ++count;
    }
  }
  return count;
}

std::size_t export_triples( const std::vector<Session>& sessions, const std::string& path )
{
  std::ofstream out( path, std::ios::binary | std::ios::trunc );
  if ( !out )
    throw IoFailure( "cannot open " + path + " for writing" );
  std::size_t count = export_triples( sessions, out );
  out.flush();
  if ( !out )
    throw IoFailure( "write to " + path + " failed" );
  return count;
}

} // namespace semlog
