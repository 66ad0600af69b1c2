#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semlog {

/// IRIs of the browsing activity model.
namespace wam {

inline constexpr std::string_view ns = "http://greenlinkeddata.org/wam.owl#";

inline std::string iri( std::string_view local ) { return std::string( ns ) + std::string( local ); }

// classes
inline const std::string Event = iri( "Event" );
inline const std::string Session = iri( "Session" );
inline const std::string User = iri( "User" );
inline const std::string StartEvent = iri( "StartEvent" );
inline const std::string EndEvent = iri( "EndEvent" );
inline const std::string ContentType = iri( "ContentType" );
inline const std::string FunctionType = iri( "FunctionType" );

// properties
inline const std::string hasEvent = iri( "hasEvent" );
inline const std::string fullURL = iri( "fullURL" );
inline const std::string baseURL = iri( "baseURL" );
inline const std::string time = iri( "time" );
inline const std::string order = iri( "order" );
inline const std::string contentType = iri( "contentType" );
inline const std::string functionType = iri( "functionType" );
inline const std::string user = iri( "user" );

// function types
inline const std::string EngineSearch = iri( "EngineSearch" );
inline const std::string SiteSearch = iri( "SiteSearch" );
inline const std::string Homepage = iri( "Homepage" );
inline const std::string SparqlQuery = iri( "SparqlQuery" );
inline const std::string Informative = iri( "Informative" );

} // namespace wam

namespace vocab {

inline const std::string rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string rdfs_subClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline const std::string xsd_dateTime = "http://www.w3.org/2001/XMLSchema#dateTime";
inline const std::string xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";

} // namespace vocab

/// Expands `prefix:Local` for the built-in prefixes (wam, rdf, rdfs, owl,
/// xsd, swrc, swc, foaf, dbo, yago). Returns nullopt for unknown prefixes.
std::optional<std::string> expand_prefixed( std::string_view name );

/// Text after the last '#' or '/'.
std::string_view local_name( std::string_view iri );

/// Rewrites a URL to the IRI of the resource it shows. The pattern must match
/// the whole path-and-query of the URL; `$0`..`$9` in the template refer to
/// the captures.
class MappingRule
{
public:
  /// Throws InvalidRule when the pattern does not compile or the template
  /// references an undefined capture.
  MappingRule( std::string match_pattern, std::string rewrite_template );

  const std::string& match_pattern() const { return pattern_text_; }
  const std::string& rewrite_template() const { return template_; }

  std::optional<std::string> apply( std::string_view path_and_query ) const;

private:
  std::string pattern_text_;
  std::string template_;
  std::regex pattern_;
};

/// Classes, subclass edges and type assertions for one Web site, plus the
/// URL rules that locate its resources.
class Ontology
{
public:
  Ontology() = default;
  Ontology( std::string domain_base, std::vector<MappingRule> rules );

  const std::string& domain_base() const { return domain_base_; }
  const std::set<std::string>& classes() const { return classes_; }
  const std::set<std::pair<std::string, std::string>>& subclass_edges() const { return edges_; }
  const std::set<std::pair<std::string, std::string>>& type_assertions() const { return assertions_; }
  const std::vector<MappingRule>& url_rules() const { return rules_; }

  void add_type( const std::string& resource, const std::string& cls );
  void add_subclass( const std::string& sub, const std::string& super );

  /// Computes superclass closures; throws CyclicHierarchy. Must be called
  /// after the last add_*.
  void finalize();

  /// Reflexive-transitive superclasses of a class (just the class itself
  /// when unknown).
  std::set<std::string> superclasses( const std::string& cls ) const;

  /// Classes asserted for a resource.
  std::set<std::string> asserted_types( const std::string& resource ) const;

  bool operator==( const Ontology& other ) const
  {
    return domain_base_ == other.domain_base_ && classes_ == other.classes_ && edges_ == other.edges_ &&
           assertions_ == other.assertions_;
  }

private:
  std::string domain_base_;
  std::set<std::string> classes_;
  std::set<std::pair<std::string, std::string>> edges_;
  std::set<std::pair<std::string, std::string>> assertions_;
  std::vector<MappingRule> rules_;

  std::map<std::string, std::set<std::string>> closure_;
  std::multimap<std::string, std::string> types_of_;
};

/// Reads rdf:type and rdfs:subClassOf statements; other predicates are
/// ignored. Throws MalformedTriple or CyclicHierarchy.
Ontology load_ontology( std::istream& document, const std::string& domain_base, std::vector<MappingRule> rules );
Ontology load_ontology_file( const std::string& path, const std::string& domain_base, std::vector<MappingRule> rules );

/// First matching rule wins. Absent when no rule matches or the URL belongs
/// to another site.
std::optional<std::string> resolve_resource( std::string_view url, const Ontology& ontology );

std::set<std::string> class_membership( const std::string& resource, const Ontology& ontology );

} // namespace semlog
