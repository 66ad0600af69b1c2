#include "semlog/triples.hpp"

#include "semlog/errors.hpp"

#include <cctype>
#include <istream>

namespace semlog {

namespace {

class TermScanner
{
public:
  TermScanner( std::string_view line, std::size_t line_number ) : line_( line ), line_number_( line_number ) {}

  void skip_ws()
  {
    while ( pos_ < line_.size() && ( line_[pos_] == ' ' || line_[pos_] == '\t' ) )
      ++pos_;
  }

  bool at_end()
  {
    skip_ws();
    return pos_ >= line_.size();
  }

  char peek()
  {
    skip_ws();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }

  Term term( bool allow_literal )
  {
    char c = peek();
    if ( c == '<' )
      return Term::iri( iri() );
    if ( c == '_' && pos_ + 1 < line_.size() && line_[pos_ + 1] == ':' )
    {
      pos_ += 2;
      std::size_t start = pos_;
      while ( pos_ < line_.size() && line_[pos_] != ' ' && line_[pos_] != '\t' )
        ++pos_;
      if ( start == pos_ )
        fail( "empty blank node label" );
      return { Term::Kind::blank, std::string( line_.substr( start, pos_ - start ) ), {}, {} };
    }
    if ( c == '"' && allow_literal )
      return literal();
    fail( allow_literal ? "expected IRI, blank node or literal" : "expected IRI or blank node" );
  }

  void expect_dot()
  {
    if ( peek() != '.' )
      fail( "expected '.'" );
    ++pos_;
    skip_ws();
    if ( pos_ < line_.size() && line_[pos_] != '#' )
      fail( "trailing content after '.'" );
  }

  [[noreturn]] void fail( const std::string& reason ) const { throw MalformedTriple( line_number_, reason ); }

private:
  std::string iri()
  {
    ++pos_;
    std::size_t close = line_.find( '>', pos_ );
    if ( close == std::string_view::npos )
      fail( "unterminated IRI" );
    std::string value( line_.substr( pos_, close - pos_ ) );
    if ( value.empty() || value.find_first_of( " \t<\"" ) != std::string::npos )
      fail( "invalid IRI" );
    pos_ = close + 1;
    return value;
  }

  Term literal()
  {
    ++pos_;
    std::string value;
    bool closed = false;
    while ( pos_ < line_.size() )
    {
      char c = line_[pos_++];
      if ( c == '"' )
      {
        closed = true;
        break;
      }
      if ( c == '\\' )
      {
        if ( pos_ >= line_.size() )
          break;
        char esc = line_[pos_++];
        switch ( esc )
        {
        case 'n': value.push_back( '\n' ); break;
        case 't': value.push_back( '\t' ); break;
        case 'r': value.push_back( '\r' ); break;
        case '"': value.push_back( '"' ); break;
        case '\\': value.push_back( '\\' ); break;
        default: fail( std::string( "unknown escape \\" ) + esc );
        }
        continue;
      }
      value.push_back( c );
    }
    if ( !closed )
      fail( "unterminated literal" );

    Term t = Term::literal( std::move( value ) );
    if ( line_.substr( pos_ ).starts_with( "^^" ) )
    {
      pos_ += 2;
      if ( pos_ >= line_.size() || line_[pos_] != '<' )
        fail( "expected datatype IRI" );
      t.datatype = iri();
    }
    else if ( pos_ < line_.size() && line_[pos_] == '@' )
    {
      std::size_t start = ++pos_;
      while ( pos_ < line_.size() && ( std::isalnum( static_cast<unsigned char>( line_[pos_] ) ) || line_[pos_] == '-' ) )
        ++pos_;
      if ( start == pos_ )
        fail( "empty language tag" );
      t.language = std::string( line_.substr( start, pos_ - start ) );
    }
    return t;
  }

  std::string_view line_;
  std::size_t line_number_;
  std::size_t pos_ = 0;
};

std::string escape_literal( std::string_view v )
{
  std::string out;
  for ( char c : v )
  {
    switch ( c )
    {
    case '\n': out += "\\n"; break;
    case '\t': out += "\\t"; break;
    case '\r': out += "\\r"; break;
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    default: out.push_back( c );
    }
  }
  return out;
}

} // namespace

Triple parse_triple_line( std::string_view line, std::size_t line_number )
{
  TermScanner scan( line, line_number );
  Triple t;
  t.subject = scan.term( false );
  t.predicate = scan.term( false );
  if ( t.predicate.kind != Term::Kind::iri )
    scan.fail( "predicate must be an IRI" );
  t.object = scan.term( true );
  scan.expect_dot();
  return t;
}

void read_triples( std::istream& in, const std::function<void( const Triple&, std::size_t )>& sink )
{
  std::string line;
  std::size_t number = 0;
  while ( std::getline( in, line ) )
  {
    ++number;
    std::string_view view( line );
    while ( !view.empty() && ( view.back() == '\r' || view.back() == ' ' || view.back() == '\t' ) )
      view.remove_suffix( 1 );
    while ( !view.empty() && ( view.front() == ' ' || view.front() == '\t' ) )
      view.remove_prefix( 1 );
    if ( view.empty() || view.front() == '#' )
      continue;
    sink( parse_triple_line( view, number ), number );
  }
}

std::string format_term( const Term& term )
{
  switch ( term.kind )
  {
  case Term::Kind::iri: return "<" + term.value + ">";
  case Term::Kind::blank: return "_:" + term.value;
  case Term::Kind::literal:
  {
    std::string out = "\"" + escape_literal( term.value ) + "\"";
    if ( !term.datatype.empty() )
      out += "^^<" + term.datatype + ">";
    else if ( !term.language.empty() )
      out += "@" + term.language;
    return out;
  }
  }
  return {};
}

std::string format_triple( const Triple& triple )
{
  return format_term( triple.subject ) + " " + format_term( triple.predicate ) + " " + format_term( triple.object ) + " .";
}

} // namespace semlog
