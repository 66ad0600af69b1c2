#pragma once

#include "semlog/sessionizer.hpp"
#include "semlog/triples.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace semlog {

inline constexpr int kSchemaVersion = 1;

/// One JSON object per line:
///
///   {"schema_version":1,"id":...,"user":...,"start":"<ISO>","end":"<ISO>",
///    "events":[{"order":1,"full_url":...,"base_url":...,"params":[[name,value],...],
///               "time":"<ISO>","content_types":[...],"function_types":[...],
///               "synthetic":false,"referrer":null}, ...]}
std::string encode_session( const Session& session );
Session decode_session( const std::string& line, std::size_t line_number );

/// Throws IoFailure.
std::size_t write_sessions( const std::string& path, const std::vector<Session>& sessions );
void write_sessions( std::ostream& out, const std::vector<Session>& sessions );

/// Throws IoFailure, SchemaMismatch or MalformedRecord.
std::vector<Session> read_sessions( const std::string& path );
std::vector<Session> read_sessions( std::istream& in );

std::string session_iri( const Session& session );
std::string event_iri( const Session& session, const BrowsingEvent& event );

/// The ABox of one session in browsing-activity-model terms.
std::vector<Triple> session_triples( const Session& session );

/// 4 + 6 per event + one per content and function type.
std::size_t count_triples( const std::vector<Session>& sessions );

/// Throws IoFailure.
std::size_t export_triples( const std::vector<Session>& sessions, const std::string& path );
std::size_t export_triples( const std::vector<Session>& sessions, std::ostream& out );

} // namespace semlog
