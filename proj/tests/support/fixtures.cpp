#include "fixtures.hpp"

#include <json.hpp>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace semlog::testing {

namespace fs = std::filesystem;

fs::path fixture_path( const std::string& relative )
{
  return fs::path( SEMLOG_FIXTURE_DIR ) / relative;
}

CorpusLabels load_corpus_labels()
{
  auto j = nlohmann::json::parse( read_text( fixture_path( "corpus/labels.json" ) ) );
  CorpusLabels labels;
  labels.queries = j["queries"].get<std::map<std::string, std::string>>();
  for ( const auto& [q, ids] : j["expected"].items() )
    labels.expected[q] = ids.get<std::set<std::string>>();
  const auto& st = j["stats"];
  labels.sessions = st["sessions"];
  labels.engine = st["engine"];
  labels.direct = st["direct"];
  labels.other = st["other"];
  labels.sparql = st["sparql"];
  labels.engine_counts = st["engine_counts"].get<std::map<std::string, std::size_t>>();
  labels.log_lines = j["log_lines"];
  labels.bot_lines = j["bot_lines"];
  return labels;
}

EngineConfig corpus_config()
{
  return load_config( fixture_path( "corpus/config.json" ).string() );
}

IngestSummary ingest_corpus( const fs::path& store )
{
  return cmd_ingest( corpus_config(),
                     { fixture_path( "corpus/dbpedia.log" ).string(), fixture_path( "corpus/swdf.log" ).string() },
                     store.string() );
}

TempDir::TempDir()
{
  static std::atomic<int> counter{ 0 };
  path_ = fs::temp_directory_path() /
          ( "semlog-test-" + std::to_string( ::getpid() ) + "-" + std::to_string( counter++ ) );
  fs::remove_all( path_ );
  fs::create_directories( path_ );
}

TempDir::~TempDir()
{
  std::error_code ec;
  fs::remove_all( path_, ec );
}

void write_text( const fs::path& path, const std::string& text )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot write " + path.string() );
  out << text;
}

std::string read_text( const fs::path& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot read " + path.string() );
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace semlog::testing
