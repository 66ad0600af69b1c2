#include "semlog/enricher.hpp"

#include "semlog/errors.hpp"

#include <algorithm>
#include <cctype>

namespace semlog {

namespace {

bool contains_nocase( std::string_view haystack, std::string_view needle )
{
  auto it = std::search( haystack.begin(), haystack.end(), needle.begin(), needle.end(), []( char a, char b ) {
    return std::tolower( static_cast<unsigned char>( a ) ) == std::tolower( static_cast<unsigned char>( b ) );
  } );
  return it != haystack.end();
}

bool has_param( const UrlParts& parts, std::string_view name )
{
  return std::any_of( parts.params.begin(), parts.params.end(), [&]( const Parameter& p ) { return p.name == name; } );
}

const std::string& default_function_type( const UrlParts& parts, const std::set<std::string>& engine_domains )
{
  if ( engine_domains.count( parts.base ) && ( has_param( parts, "q" ) || contains_nocase( parts.path, "search" ) ) )
    return wam::EngineSearch;
  if ( parts.path.empty() || parts.path == "/" )
    return wam::Homepage;
  if ( contains_nocase( parts.path, "sparql" ) )
    return wam::SparqlQuery;
  if ( std::any_of( parts.params.begin(), parts.params.end(), []( const Parameter& p ) { return contains_nocase( p.name, "search" ); } ) )
    return wam::SiteSearch;
  return wam::Informative;
}

} // namespace

void FunctionRule::compile()
{
  if ( function_type.empty() )
    throw InvalidRule( "function rule has no type" );
  if ( !path_pattern && param_names.empty() && bases.empty() )
    throw InvalidRule( "function rule for " + function_type + " has no condition" );
  if ( path_pattern )
  {
    try
    {
      compiled_ = std::make_shared<const std::regex>( *path_pattern );
    }
    catch ( const std::regex_error& e )
    {
      throw InvalidRule( "function rule path pattern '" + *path_pattern + "' does not compile: " + e.what() );
    }
  }
}

bool FunctionRule::matches( const UrlParts& parts ) const
{
  if ( !bases.empty() && !bases.count( parts.base ) )
    return false;
  if ( !param_names.empty() &&
       std::none_of( parts.params.begin(), parts.params.end(), [&]( const Parameter& p ) { return param_names.count( p.name ) > 0; } ) )
    return false;
  if ( path_pattern )
  {
    auto re = compiled_ ? compiled_ : std::make_shared<const std::regex>( *path_pattern );
    if ( !std::regex_search( parts.path, *re ) )
      return false;
  }
  return true;
}

std::set<std::string> classify_function( const UrlParts& parts, const std::set<std::string>& engine_domains,
                                         const std::vector<FunctionRule>& rules )
{
  std::set<std::string> types;
  for ( const auto& rule : rules )
  {
    if ( rule.matches( parts ) )
      types.insert( rule.function_type );
  }
  if ( types.empty() )
    types.insert( default_function_type( parts, engine_domains ) );
  return types;
}

BrowsingEvent enrich_event( BrowsingEvent event, const EnrichmentContext& context )
{
  event.content_types.clear();
  if ( context.registry )
  {
    if ( auto it = context.registry->find( event.base_url ); it != context.registry->end() )
    {
      if ( auto resource = resolve_resource( event.full_url, it->second ) )
        event.content_types = class_membership( *resource, it->second );
    }
  }

  UrlParts parts{ event.base_url, {}, event.params };
  parts.path = decompose_url( event.full_url ).path;
  event.function_types = classify_function( parts, context.engine_domains, context.rules );
  return event;
}

Session enrich_session( Session session, const EnrichmentContext& context )
{
  for ( auto& event : session.events )
    event = enrich_event( std::move( event ), context );
  return session;
}

} // namespace semlog
