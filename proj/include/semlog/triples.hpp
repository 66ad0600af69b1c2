#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace semlog {

/// A term of a line-delimited triple document.
struct Term
{
  enum class Kind
  {
    iri,
    blank,
    literal
  };

  Kind kind = Kind::iri;
  /// IRI text, blank-node label, or unescaped literal lexical form
  std::string value;
  /// datatype IRI of a typed literal
  std::string datatype;
  std::string language;

  static Term iri( std::string v ) { return { Kind::iri, std::move( v ), {}, {} }; }
  static Term literal( std::string v, std::string datatype = {} ) { return { Kind::literal, std::move( v ), std::move( datatype ), {} }; }

  bool operator==( const Term& ) const = default;
};

struct Triple
{
  Term subject;
  Term predicate;
  Term object;

  bool operator==( const Triple& ) const = default;
};

/// Parses `<s> <p> <o> .` lines. Blank lines and `#` comments are skipped.
/// Calls `sink` once per triple with its line number. Throws MalformedTriple.
void read_triples( std::istream& in, const std::function<void( const Triple&, std::size_t )>& sink );

Triple parse_triple_line( std::string_view line, std::size_t line_number );

std::string format_term( const Term& term );
std::string format_triple( const Triple& triple );

} // namespace semlog
