#pragma once

#include "semlog/knowledge_base.hpp"
#include "semlog/log_model.hpp"
#include "semlog/sessionizer.hpp"

#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

namespace semlog {

/// A user-supplied function-type rule. Every condition that is set must hold.
struct FunctionRule
{
  std::string function_type;
  /// searched (not fully matched) in the URL path
  std::optional<std::string> path_pattern;
  /// matches when any query parameter has one of these names
  std::set<std::string> param_names;
  /// matches when the URL base is one of these
  std::set<std::string> bases;

  /// Throws InvalidRule for an empty type, a rule with no condition, or a
  /// path pattern that does not compile.
  void compile();
  bool matches( const UrlParts& parts ) const;

private:
  std::shared_ptr<const std::regex> compiled_;
};

/// Function types of a URL: the union of every matching user rule, or, when
/// none matches, the first hit of the default chain (EngineSearch, Homepage,
/// SparqlQuery, SiteSearch, Informative).
std::set<std::string> classify_function( const UrlParts& parts, const std::set<std::string>& engine_domains,
                                         const std::vector<FunctionRule>& rules );

using OntologyRegistry = std::map<std::string, Ontology>;

struct EnrichmentContext
{
  const OntologyRegistry* registry = nullptr;
  std::set<std::string> engine_domains;
  std::vector<FunctionRule> rules;
};

/// Content types from the site's ontology (empty for unregistered sites or
/// unresolvable URLs) and function types from the URL.
BrowsingEvent enrich_event( BrowsingEvent event, const EnrichmentContext& context );

Session enrich_session( Session session, const EnrichmentContext& context );

} // namespace semlog
