#pragma once

#include "semlog/enricher.hpp"
#include "semlog/knowledge_base.hpp"
#include "semlog/log_model.hpp"
#include "semlog/sessionizer.hpp"
#include "semlog/stats.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace semlog {

struct OntologySource
{
  /// normalized base URL of the site
  std::string domain;
  /// path of the triple file, resolved against the config file's directory
  std::string file;
  std::vector<MappingRule> rules;
};

/// Everything the pipeline needs besides its inputs. Loaded from a JSON file:
///
///   {
///     "log_format": "combined",
///     "default_host": "dbpedia.org",
///     "log_hosts": { "swdf.log": "data.semanticweb.org" },
///     "idle_gap_seconds": 1800,
///     "bot_policy": { "agent_substrings": [...], "max_requests_per_minute": 120,
///                     "treat_missing_agent_as_bot": false },
///     "engine_domains": [ "http://www.google.com", ... ],
///     "ontologies": [ { "domain": "http://dbpedia.org", "file": "dbpedia.nt",
///                       "rules": [ { "match": "/page/(.*)", "rewrite": "http://dbpedia.org/resource/$1" } ] } ],
///     "function_rules": [ { "type": "Reserve", "path": "/reserve", "params": [...], "bases": [...] } ],
///     "day_count_mode": "calendar_days"
///   }
///
/// Every key is optional; unknown keys are rejected.
struct EngineConfig
{
  LogFormat log_format = LogFormat::combined;
  std::optional<std::string> default_host;
  /// log file name (without directory) -> host its relative URLs belong to
  std::map<std::string, std::string> log_hosts;
  int idle_gap_seconds = kDefaultIdleGapSeconds;
  BotPolicy bot_policy;
  std::set<std::string> engine_domains = default_engine_domains();
  std::vector<OntologySource> ontologies;
  std::vector<FunctionRule> function_rules;
  DayCountMode day_count_mode = DayCountMode::calendar_days;

  static std::set<std::string> default_engine_domains();

  /// Sites whose traffic is logged or described by an ontology.
  std::set<std::string> monitored_domains() const;
};

/// Throws ConfigError.
EngineConfig parse_config( std::string_view json_text, const std::string& base_dir = "." );
EngineConfig load_config( const std::string& path );

/// Loads every configured ontology. Throws IoFailure, MalformedTriple or
/// CyclicHierarchy.
OntologyRegistry load_registry( const EngineConfig& config );

} // namespace semlog
