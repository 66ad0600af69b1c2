#include "semlog/sessionizer.hpp"

#include "semlog/errors.hpp"

#include <algorithm>
#include <map>

namespace semlog {

std::string make_session_id( const std::string& user, Instant start )
{
  return user + "@" + format_iso8601( start );
}

BrowsingEvent make_event( const LogEntry& entry )
{
  UrlParts parts = decompose_url( entry.url );
  BrowsingEvent event;
  event.full_url = reassemble_url( parts );
  event.base_url = std::move( parts.base );
  event.params = std::move( parts.params );
  event.time = entry.timestamp;
  event.referrer = entry.referrer;
  return event;
}

namespace {

Session close_session( const std::string& user, std::vector<BrowsingEvent> events )
{
  Session s;
  s.user = user;
  s.start_time = events.front().time;
  s.end_time = events.back().time;
  s.id = make_session_id( user, s.start_time );
  for ( std::size_t i = 0; i < events.size(); ++i )
    events[i].order = static_cast<int>( i + 1 );
  s.events = std::move( events );
  return s;
}

} // namespace

std::vector<Session> sessionize( const std::vector<LogEntry>& entries, int idle_gap_seconds )
{
  std::map<std::string, std::vector<const LogEntry*>> by_user;
  for ( const auto& e : entries )
    by_user[e.user_id].push_back( &e );

  const std::chrono::seconds gap{ idle_gap_seconds };
  std::vector<Session> sessions;
  for ( auto& [user, stream] : by_user )
  {
    std::sort( stream.begin(), stream.end(), []( const LogEntry* a, const LogEntry* b ) {
      return std::tie( a->timestamp, a->source_line ) < std::tie( b->timestamp, b->source_line );
    } );

    std::vector<BrowsingEvent> current;
    for ( const LogEntry* entry : stream )
    {
      if ( !current.empty() && entry->timestamp - current.back().time > gap )
        sessions.push_back( close_session( user, std::exchange( current, {} ) ) );
      current.push_back( make_event( *entry ) );
    }
    if ( !current.empty() )
      sessions.push_back( close_session( user, std::move( current ) ) );
  }

  std::sort( sessions.begin(), sessions.end(), []( const Session& a, const Session& b ) {
    return std::tie( a.start_time, a.user ) < std::tie( b.start_time, b.user );
  } );
  return sessions;
}

Session insert_referrer_events( const Session& session, const std::set<std::string>& known_domains )
{
  Session out = session;
  out.events.clear();
  out.events.reserve( session.events.size() );

  for ( std::size_t i = 0; i < session.events.size(); ++i )
  {
    const BrowsingEvent& event = session.events[i];
    if ( event.referrer && !event.synthetic )
    {
      std::optional<UrlParts> ref;
      try
      {
        ref = decompose_url( *event.referrer );
      }
      catch ( const NotAbsoluteUrl& )
      {
      }

      bool insert = ref && ref->base != event.base_url;
      if ( insert && i > 0 && session.events[i - 1].base_url == ref->base )
        insert = false;
      if ( insert && known_domains.count( ref->base ) )
      {
        std::string ref_url = reassemble_url( *ref );
        insert = std::none_of( session.events.begin(), session.events.begin() + static_cast<std::ptrdiff_t>( i ),
                               [&]( const BrowsingEvent& prev ) { return prev.full_url == ref_url; } );
      }

      if ( insert )
      {
        BrowsingEvent synthetic;
        synthetic.full_url = reassemble_url( *ref );
        synthetic.base_url = ref->base;
        synthetic.params = ref->params;
        synthetic.time = event.time;
        synthetic.synthetic = true;
        out.events.push_back( std::move( synthetic ) );
      }
    }
    out.events.push_back( event );
  }

  for ( std::size_t i = 0; i < out.events.size(); ++i )
    out.events[i].order = static_cast<int>( i + 1 );
  return out;
}

bool is_well_formed( const Session& session )
{
  if ( session.events.empty() )
    return false;
  if ( session.start_time != session.events.front().time || session.end_time != session.events.back().time )
    return false;
  for ( std::size_t i = 0; i < session.events.size(); ++i )
  {
    const auto& e = session.events[i];
    if ( e.order != static_cast<int>( i + 1 ) )
      return false;
    if ( e.time < session.start_time || e.time > session.end_time )
      return false;
    if ( i + 1 < session.events.size() && e.time > session.events[i + 1].time )
      return false;
  }
  return true;
}

} // namespace semlog
