#pragma once

#include "semlog/config.hpp"
#include "semlog/stats.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace semlog {

struct IngestSummary
{
  std::size_t entries_read = 0;
  std::size_t bots_dropped = 0;
  std::size_t malformed_skipped = 0;
  std::size_t sessions_written = 0;

  bool operator==( const IngestSummary& ) const = default;
};

struct IngestOptions
{
  /// skip unparsable lines instead of failing
  bool skip_malformed = false;
};

/// Reads access logs. Relative URLs take the host configured for the file's
/// name, else the default host. Line numbers keep counting across files so
/// that ties between files break deterministically. Throws IoFailure, or
/// Error naming `path:line` for a bad line unless skipping.
std::vector<LogEntry> read_log_files( const EngineConfig& config, const std::vector<std::string>& paths,
                                      const IngestOptions& options = {}, std::size_t* skipped = nullptr );

/// Bot filtering, sessionization, referrer insertion and enrichment.
std::vector<Session> formalize( std::vector<LogEntry> entries, const EngineConfig& config, const OntologyRegistry& registry,
                                std::size_t* bots_dropped = nullptr );

IngestSummary cmd_ingest( const EngineConfig& config, const std::vector<std::string>& log_paths, const std::string& out_path,
                          const IngestOptions& options = {} );

/// Matching ids in store order. Throws SyntaxError or UnknownAtom for a bad
/// query.
std::vector<std::string> cmd_query( const EngineConfig& config, const std::string& store_path, const std::string& query_text );

/// Ids one per line, then `count: N`.
void print_query_result( std::ostream& out, const std::vector<std::string>& ids );

/// Throws EmptyCorpus for an empty store.
StatsReport cmd_stats( const EngineConfig& config, const std::string& store_path );

std::size_t cmd_export( const EngineConfig& config, const std::string& store_path, const std::string& out_path );

} // namespace semlog
