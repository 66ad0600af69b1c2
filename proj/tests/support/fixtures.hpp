#pragma once

#include "semlog/commands.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>

namespace semlog::testing {

std::filesystem::path fixture_path( const std::string& relative );

/// Hand labels of the query-suite corpus (tests/fixtures/corpus).
struct CorpusLabels
{
  std::map<std::string, std::string> queries;
  std::map<std::string, std::set<std::string>> expected;
  std::size_t sessions = 0;
  std::size_t engine = 0;
  std::size_t direct = 0;
  std::size_t other = 0;
  std::size_t sparql = 0;
  std::map<std::string, std::size_t> engine_counts;
  std::size_t log_lines = 0;
  std::size_t bot_lines = 0;
};

CorpusLabels load_corpus_labels();

EngineConfig corpus_config();

/// Ingests both corpus logs into `store`.
IngestSummary ingest_corpus( const std::filesystem::path& store );

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir
{
public:
  TempDir();
  ~TempDir();
  TempDir( const TempDir& ) = delete;
  TempDir& operator=( const TempDir& ) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/( const std::string& name ) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

void write_text( const std::filesystem::path& path, const std::string& text );
std::string read_text( const std::filesystem::path& path );

} // namespace semlog::testing
