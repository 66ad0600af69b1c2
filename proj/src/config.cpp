#include "semlog/config.hpp"

#include "semlog/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace semlog {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::set<std::string> EngineConfig::default_engine_domains()
{
  std::set<std::string> out;
  for ( const char* host : { "www.google.com", "google.com", "www.google.de", "www.bing.com", "bing.com", "search.yahoo.com" } )
  {
    out.insert( std::string( "http://" ) + host );
    out.insert( std::string( "https://" ) + host );
  }
  return out;
}

std::set<std::string> EngineConfig::monitored_domains() const
{
  std::set<std::string> out;
  for ( const auto& o : ontologies )
    out.insert( o.domain );
  if ( default_host )
    out.insert( normalize_base( *default_host ) );
  for ( const auto& [file, host] : log_hosts )
    out.insert( normalize_base( host ) );
  return out;
}

namespace {

void check_keys( const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where )
{
  if ( !obj.is_object() )
    throw ConfigError( where + " must be an object" );
  for ( const auto& [key, value] : obj.items() )
  {
    if ( std::find( allowed.begin(), allowed.end(), key ) == allowed.end() )
      throw ConfigError( "unknown key '" + key + "' in " + where );
  }
}

template<typename T>
T get_as( const json& v, const std::string& where )
{
  try
  {
    return v.get<T>();
  }
  catch ( const json::exception& )
  {
    throw ConfigError( where + " has the wrong type" );
  }
}

std::string base_of( const std::string& text, const std::string& where )
{
  try
  {
    return normalize_base( text );
  }
  catch ( const NotAbsoluteUrl& )
  {
    throw ConfigError( where + ": '" + text + "' is not a host or base URL" );
  }
}

std::string class_iri( const std::string& name )
{
  if ( name.find( "://" ) != std::string::npos )
    return name;
  if ( name.find( ':' ) != std::string::npos )
  {
    if ( auto expanded = expand_prefixed( name ) )
      return *expanded;
    throw ConfigError( "unknown prefix in '" + name + "'" );
  }
  return wam::iri( name );
}

} // namespace

EngineConfig parse_config( std::string_view json_text, const std::string& base_dir )
{
  json root;
  try
  {
    root = json::parse( json_text );
  }
  catch ( const json::parse_error& e )
  {
    throw ConfigError( std::string( "config is not valid JSON: " ) + e.what() );
  }
  check_keys( root,
              { "log_format", "default_host", "log_hosts", "idle_gap_seconds", "bot_policy", "engine_domains", "ontologies",
                "function_rules", "day_count_mode" },
              "config" );

  EngineConfig cfg;
  try
  {
    if ( root.contains( "log_format" ) )
      cfg.log_format = parse_log_format( get_as<std::string>( root["log_format"], "log_format" ) );
    if ( root.contains( "day_count_mode" ) )
      cfg.day_count_mode = parse_day_count_mode( get_as<std::string>( root["day_count_mode"], "day_count_mode" ) );
  }
  catch ( const ConfigError& )
  {
    throw;
  }
  catch ( const Error& e )
  {
    throw ConfigError( e.what() );
  }

  if ( root.contains( "default_host" ) )
    cfg.default_host = base_of( get_as<std::string>( root["default_host"], "default_host" ), "default_host" );
  if ( root.contains( "log_hosts" ) )
  {
    for ( const auto& [file, host] : get_as<std::map<std::string, std::string>>( root["log_hosts"], "log_hosts" ) )
      cfg.log_hosts[file] = base_of( host, "log_hosts" );
  }
  if ( root.contains( "idle_gap_seconds" ) )
  {
    cfg.idle_gap_seconds = get_as<int>( root["idle_gap_seconds"], "idle_gap_seconds" );
    if ( cfg.idle_gap_seconds <= 0 )
      throw ConfigError( "idle_gap_seconds must be positive" );
  }

  if ( root.contains( "bot_policy" ) )
  {
    const json& bp = root["bot_policy"];
    check_keys( bp, { "agent_substrings", "max_requests_per_minute", "treat_missing_agent_as_bot" }, "bot_policy" );
    if ( bp.contains( "agent_substrings" ) )
      cfg.bot_policy.agent_substrings = get_as<std::vector<std::string>>( bp["agent_substrings"], "bot_policy.agent_substrings" );
    if ( bp.contains( "max_requests_per_minute" ) && !bp["max_requests_per_minute"].is_null() )
    {
      int limit = get_as<int>( bp["max_requests_per_minute"], "bot_policy.max_requests_per_minute" );
      if ( limit <= 0 )
        throw ConfigError( "bot_policy.max_requests_per_minute must be positive" );
      cfg.bot_policy.max_requests_per_minute = limit;
    }
    if ( bp.contains( "treat_missing_agent_as_bot" ) )
      cfg.bot_policy.treat_missing_agent_as_bot = get_as<bool>( bp["treat_missing_agent_as_bot"], "bot_policy.treat_missing_agent_as_bot" );
  }

  if ( root.contains( "engine_domains" ) )
  {
    cfg.engine_domains.clear();
    for ( const auto& d : get_as<std::vector<std::string>>( root["engine_domains"], "engine_domains" ) )
      cfg.engine_domains.insert( base_of( d, "engine_domains" ) );
  }

  if ( root.contains( "ontologies" ) )
  {
    if ( !root["ontologies"].is_array() )
      throw ConfigError( "ontologies must be an array" );
    for ( const auto& o : root["ontologies"] )
    {
      check_keys( o, { "domain", "file", "rules" }, "ontologies entry" );
      if ( !o.contains( "domain" ) || !o.contains( "file" ) )
        throw ConfigError( "ontologies entry needs 'domain' and 'file'" );
      OntologySource src;
      src.domain = base_of( get_as<std::string>( o["domain"], "ontologies.domain" ), "ontologies.domain" );
      fs::path file = get_as<std::string>( o["file"], "ontologies.file" );
      if ( file.is_relative() )
        file = fs::path( base_dir ) / file;
      if ( !fs::exists( file ) )
        throw ConfigError( "ontology file does not exist: " + file.string() );
      src.file = file.string();
      if ( o.contains( "rules" ) )
      {
        if ( !o["rules"].is_array() )
          throw ConfigError( "ontologies.rules must be an array" );
        for ( const auto& r : o["rules"] )
        {
          check_keys( r, { "match", "rewrite" }, "mapping rule" );
          if ( !r.contains( "match" ) || !r.contains( "rewrite" ) )
            throw ConfigError( "mapping rule needs 'match' and 'rewrite'" );
          try
          {
            src.rules.emplace_back( get_as<std::string>( r["match"], "rule.match" ), get_as<std::string>( r["rewrite"], "rule.rewrite" ) );
          }
          catch ( const InvalidRule& e )
          {
            throw ConfigError( e.what() );
          }
        }
      }
      cfg.ontologies.push_back( std::move( src ) );
    }
  }

  if ( root.contains( "function_rules" ) )
  {
    if ( !root["function_rules"].is_array() )
      throw ConfigError( "function_rules must be an array" );
    for ( const auto& r : root["function_rules"] )
    {
      check_keys( r, { "type", "path", "params", "bases" }, "function rule" );
      if ( !r.contains( "type" ) )
        throw ConfigError( "function rule needs 'type'" );
      FunctionRule rule;
      rule.function_type = class_iri( get_as<std::string>( r["type"], "function_rules.type" ) );
      if ( r.contains( "path" ) )
        rule.path_pattern = get_as<std::string>( r["path"], "function_rules.path" );
      if ( r.contains( "params" ) )
        for ( const auto& p : get_as<std::vector<std::string>>( r["params"], "function_rules.params" ) )
          rule.param_names.insert( p );
      if ( r.contains( "bases" ) )
        for ( const auto& b : get_as<std::vector<std::string>>( r["bases"], "function_rules.bases" ) )
          rule.bases.insert( base_of( b, "function_rules.bases" ) );
      try
      {
        rule.compile();
      }
      catch ( const InvalidRule& e )
      {
        throw ConfigError( e.what() );
      }
      cfg.function_rules.push_back( std::move( rule ) );
    }
  }
  return cfg;
}

EngineConfig load_config( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
    throw ConfigError( "cannot open config file " + path );
  std::stringstream buffer;
  buffer << in.rdbuf();
  fs::path dir = fs::path( path ).parent_path();
  return parse_config( buffer.str(), dir.empty() ? "." : dir.string() );
}

OntologyRegistry load_registry( const EngineConfig& config )
{
  OntologyRegistry registry;
  for ( const auto& src : config.ontologies )
    registry.insert_or_assign( src.domain, load_ontology_file( src.file, src.domain, src.rules ) );
  return registry;
}

} // namespace semlog
