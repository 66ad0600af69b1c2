#include "semlog/knowledge_base.hpp"

#include "semlog/errors.hpp"
#include "semlog/log_model.hpp"
#include "semlog/triples.hpp"

#include <fstream>
#include <functional>

namespace semlog {

std::optional<std::string> expand_prefixed( std::string_view name )
{
  static const std::map<std::string_view, std::string_view> kPrefixes = {
    { "wam", "http://greenlinkeddata.org/wam.owl#" },
    { "rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#" },
    { "rdfs", "http://www.w3.org/2000/01/rdf-schema#" },
    { "owl", "http://www.w3.org/2002/07/owl#" },
    { "xsd", "http://www.w3.org/2001/XMLSchema#" },
    { "swrc", "http://swrc.ontoware.org/ontology#" },
    { "swc", "http://data.semanticweb.org/ns/swc/ontology#" },
    { "foaf", "http://xmlns.com/foaf/0.1/" },
    { "dbo", "http://dbpedia.org/ontology/" },
    { "yago", "http://dbpedia.org/class/yago/" },
  };
  auto colon = name.find( ':' );
  if ( colon == std::string_view::npos )
    return std::nullopt;
  auto it = kPrefixes.find( name.substr( 0, colon ) );
  if ( it == kPrefixes.end() )
    return std::nullopt;
  return std::string( it->second ) + std::string( name.substr( colon + 1 ) );
}

std::string_view local_name( std::string_view iri )
{
  auto cut = iri.find_last_of( "#/" );
  return cut == std::string_view::npos ? iri : iri.substr( cut + 1 );
}

namespace {

/// Calls `on_literal(text)` and `on_group(n)` in template order; returns false
/// on a dangling '$'.
template<typename Literal, typename Group>
bool walk_template( std::string_view tmpl, Literal&& on_literal, Group&& on_group )
{
  std::size_t i = 0;
  while ( i < tmpl.size() )
  {
    auto dollar = tmpl.find( '$', i );
    on_literal( tmpl.substr( i, dollar == std::string_view::npos ? std::string_view::npos : dollar - i ) );
    if ( dollar == std::string_view::npos )
      break;
    if ( dollar + 1 >= tmpl.size() )
      return false;
    char next = tmpl[dollar + 1];
    if ( next == '$' )
      on_literal( "$" );
    else if ( next >= '0' && next <= '9' )
      on_group( static_cast<std::size_t>( next - '0' ) );
    else
      return false;
    i = dollar + 2;
  }
  return true;
}

} // namespace

MappingRule::MappingRule( std::string match_pattern, std::string rewrite_template )
  : pattern_text_( std::move( match_pattern ) ), template_( std::move( rewrite_template ) )
{
  try
  {
    pattern_ = std::regex( pattern_text_, std::regex::ECMAScript );
  }
  catch ( const std::regex_error& e )
  {
    throw InvalidRule( "mapping pattern '" + pattern_text_ + "' does not compile: " + e.what() );
  }
  std::size_t groups = pattern_.mark_count();
  std::size_t worst = 0;
  bool ok = walk_template( template_, []( std::string_view ) {}, [&]( std::size_t g ) { worst = std::max( worst, g ); } );
  if ( !ok )
    throw InvalidRule( "rewrite template '" + template_ + "' has a dangling '$'" );
  if ( worst > groups )
    throw InvalidRule( "rewrite template '" + template_ + "' references $" + std::to_string( worst ) + " but the pattern has " +
                       std::to_string( groups ) + " capture(s)" );
}

std::optional<std::string> MappingRule::apply( std::string_view path_and_query ) const
{
  std::match_results<std::string_view::const_iterator> m;
  if ( !std::regex_match( path_and_query.begin(), path_and_query.end(), m, pattern_ ) )
    return std::nullopt;
  std::string out;
  walk_template(
    template_, [&]( std::string_view lit ) { out.append( lit ); }, [&]( std::size_t g ) { out.append( m[g].str() ); } );
  return out;
}

Ontology::Ontology( std::string domain_base, std::vector<MappingRule> rules )
  : domain_base_( std::move( domain_base ) ), rules_( std::move( rules ) )
{
}

void Ontology::add_type( const std::string& resource, const std::string& cls )
{
  classes_.insert( cls );
  if ( assertions_.emplace( resource, cls ).second )
    types_of_.emplace( resource, cls );
}

void Ontology::add_subclass( const std::string& sub, const std::string& super )
{
  classes_.insert( sub );
  classes_.insert( super );
  // A ⊑ A holds anyway
  if ( sub != super )
    edges_.emplace( sub, super );
}

void Ontology::finalize()
{
  std::multimap<std::string, std::string> parents;
  for ( const auto& [sub, super] : edges_ )
    parents.emplace( sub, super );

  enum class Mark
  {
    fresh,
    active,
    done
  };
  std::map<std::string, Mark> marks;
  closure_.clear();

  std::function<const std::set<std::string>&( const std::string& )> visit = [&]( const std::string& cls ) -> const std::set<std::string>& {
    Mark& mark = marks[cls];
    if ( mark == Mark::active )
      throw CyclicHierarchy( cls );
    if ( mark == Mark::done )
      return closure_[cls];
    mark = Mark::active;
    std::set<std::string> up{ cls };
    auto [lo, hi] = parents.equal_range( cls );
    for ( auto it = lo; it != hi; ++it )
    {
      const auto& above = visit( it->second );
      up.insert( above.begin(), above.end() );
    }
    marks[cls] = Mark::done;
    return closure_[cls] = std::move( up );
  };
  for ( const auto& cls : classes_ )
    visit( cls );
}

std::set<std::string> Ontology::superclasses( const std::string& cls ) const
{
  auto it = closure_.find( cls );
  if ( it == closure_.end() )
    return { cls };
  return it->second;
}

std::set<std::string> Ontology::asserted_types( const std::string& resource ) const
{
  std::set<std::string> out;
  auto [lo, hi] = types_of_.equal_range( resource );
  for ( auto it = lo; it != hi; ++it )
    out.insert( it->second );
  return out;
}

Ontology load_ontology( std::istream& document, const std::string& domain_base, std::vector<MappingRule> rules )
{
  Ontology onto( domain_base, std::move( rules ) );
  read_triples( document, [&]( const Triple& t, std::size_t line ) {
    const bool is_type = t.predicate.value == vocab::rdf_type;
    const bool is_sub = t.predicate.value == vocab::rdfs_subClassOf;
    if ( !is_type && !is_sub )
      return;
    if ( t.object.kind == Term::Kind::literal )
      throw MalformedTriple( line, "class position holds a literal" );
    auto name = []( const Term& term ) { return term.kind == Term::Kind::blank ? "_:" + term.value : term.value; };
    if ( is_type )
      onto.add_type( name( t.subject ), name( t.object ) );
    else
      onto.add_subclass( name( t.subject ), name( t.object ) );
  } );
  onto.finalize();
  return onto;
}

Ontology load_ontology_file( const std::string& path, const std::string& domain_base, std::vector<MappingRule> rules )
{
  std::ifstream in( path );
  if ( !in )
    throw IoFailure( "cannot open ontology file " + path );
  return load_ontology( in, domain_base, std::move( rules ) );
}

std::optional<std::string> resolve_resource( std::string_view url, const Ontology& ontology )
{
  UrlParts parts;
  try
  {
    parts = decompose_url( url );
  }
  catch ( const NotAbsoluteUrl& )
  {
    return std::nullopt;
  }
  if ( parts.base != ontology.domain_base() )
    return std::nullopt;
  std::string normalized = reassemble_url( parts );
  std::string_view rest = std::string_view( normalized ).substr( parts.base.size() );
  for ( const auto& rule : ontology.url_rules() )
  {
    if ( auto iri = rule.apply( rest ) )
      return iri;
  }
  return std::nullopt;
}

std::set<std::string> class_membership( const std::string& resource, const Ontology& ontology )
{
  std::set<std::string> out;
  for ( const auto& cls : ontology.asserted_types( resource ) )
  {
    auto up = ontology.superclasses( cls );
    out.insert( up.begin(), up.end() );
  }
  return out;
}

} // namespace semlog
