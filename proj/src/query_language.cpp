#include "semlog/query_language.hpp"

#include "semlog/errors.hpp"
#include "semlog/knowledge_base.hpp"
#include "semlog/log_model.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace semlog {

// ---------------------------------------------------------------------------
// AST

bool ClassRef::matches( std::string_view iri ) const
{
  return full_iri ? iri == text : local_name( iri ) == text;
}

bool is_session_atom( const Atom& atom )
{
  return std::holds_alternative<atoms::User>( atom ) || std::holds_alternative<atoms::StartsAfter>( atom ) ||
         std::holds_alternative<atoms::EndsBefore>( atom ) || std::holds_alternative<atoms::Class>( atom );
}

struct Formula::Node
{
  Kind kind;
  std::optional<Atom> atom;
  std::vector<Formula> children;
};

Formula Formula::truth()
{
  static const Formula f( std::make_shared<const Node>( Node{ Kind::True, std::nullopt, {} } ) );
  return f;
}

Formula Formula::falsity()
{
  static const Formula f( std::make_shared<const Node>( Node{ Kind::False, std::nullopt, {} } ) );
  return f;
}

Formula Formula::atom( Atom a )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::Atom, std::move( a ), {} } ) );
}

Formula Formula::negation( Formula f )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::Not, std::nullopt, { std::move( f ) } } ) );
}

Formula Formula::conjunction( Formula lhs, Formula rhs )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::And, std::nullopt, { std::move( lhs ), std::move( rhs ) } } ) );
}

Formula Formula::disjunction( Formula lhs, Formula rhs )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::Or, std::nullopt, { std::move( lhs ), std::move( rhs ) } } ) );
}

Formula Formula::next( Formula f )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::Next, std::nullopt, { std::move( f ) } } ) );
}

Formula Formula::until( Formula lhs, Formula rhs )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::Until, std::nullopt, { std::move( lhs ), std::move( rhs ) } } ) );
}

Formula Formula::eventually( Formula f )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::Eventually, std::nullopt, { std::move( f ) } } ) );
}

Formula Formula::always( Formula f )
{
  return Formula( std::make_shared<const Node>( Node{ Kind::Always, std::nullopt, { std::move( f ) } } ) );
}

Formula::Kind Formula::kind() const
{
  return node_->kind;
}

const Atom& Formula::atom() const
{
  return *node_->atom;
}

const Formula& Formula::lhs() const
{
  return node_->children.at( 0 );
}

const Formula& Formula::rhs() const
{
  return node_->children.at( 1 );
}

std::size_t Formula::depth() const
{
  std::size_t d = 0;
  for ( const auto& c : node_->children )
    d = std::max( d, c.depth() );
  return d + 1;
}

std::size_t Formula::size() const
{
  std::size_t n = 1;
  for ( const auto& c : node_->children )
    n += c.size();
  return n;
}

bool Formula::operator==( const Formula& other ) const
{
  if ( node_ == other.node_ )
    return true;
  return node_->kind == other.node_->kind && node_->atom == other.node_->atom && node_->children == other.node_->children;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok
{
  Ident,
  String,
  Iri,
  LParen,
  RParen,
  Comma,
  End
};

struct Token
{
  Tok type;
  std::string text;
  std::size_t pos;
};

bool ident_start( char c )
{
  return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_';
}

bool ident_char( char c )
{
  return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '.' || c == '-' || c == ':';
}

std::vector<Token> tokenize( std::string_view text )
{
  std::vector<Token> out;
  std::size_t i = 0;
  while ( i < text.size() )
  {
    char c = text[i];
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      ++i;
      continue;
    }
    std::size_t start = i;
    if ( c == '(' || c == ')' || c == ',' )
    {
      out.push_back( { c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : Tok::Comma, std::string( 1, c ), start } );
      ++i;
    }
    else if ( c == '"' )
    {
      std::string value;
      ++i;
      bool closed = false;
      while ( i < text.size() )
      {
        char d = text[i++];
        if ( d == '"' )
        {
          closed = true;
          break;
        }
        if ( d == '\\' && i < text.size() )
          d = text[i++];
        value.push_back( d );
      }
      if ( !closed )
        throw SyntaxError( start, "closing '\"'" );
      out.push_back( { Tok::String, std::move( value ), start } );
    }
    else if ( c == '<' )
    {
      auto close = text.find( '>', i );
      if ( close == std::string_view::npos )
        throw SyntaxError( start, "closing '>'" );
      out.push_back( { Tok::Iri, std::string( text.substr( i + 1, close - i - 1 ) ), start } );
      i = close + 1;
    }
    else if ( ident_start( c ) )
    {
      while ( i < text.size() && ident_char( text[i] ) )
        ++i;
      out.push_back( { Tok::Ident, std::string( text.substr( start, i - start ) ), start } );
    }
    else
    {
      throw SyntaxError( start, "a keyword, atom, '(' or ')'" );
    }
  }
  out.push_back( { Tok::End, {}, text.size() } );
  return out;
}

const char* const kSessionAtomsExpected = "session atom (user, starts_after, ends_before, is)";

class Parser
{
public:
  explicit Parser( std::string_view text ) : tokens_( tokenize( text ) ) {}

  Query query()
  {
    Query q;
    expect_keyword( "SESSIONS" );
    if ( at_keyword( "WHERE" ) )
    {
      advance();
      q.session_atoms.push_back( session_atom() );
      while ( at_keyword( "AND" ) )
      {
        advance();
        q.session_atoms.push_back( session_atom() );
      }
    }
    expect_keyword( "MATCH" );
    q.formula = disjunction();
    expect_end();
    return q;
  }

  Formula formula_only()
  {
    Formula f = disjunction();
    expect_end();
    return f;
  }

private:
  const Token& cur() const { return tokens_[pos_]; }
  void advance()
  {
    if ( pos_ + 1 < tokens_.size() )
      ++pos_;
  }

  bool at_keyword( std::string_view kw ) const { return cur().type == Tok::Ident && cur().text == kw; }

  void expect_keyword( std::string_view kw )
  {
    if ( !at_keyword( kw ) )
      throw SyntaxError( cur().pos, "'" + std::string( kw ) + "'" );
    advance();
  }

  void expect( Tok type, const char* what )
  {
    if ( cur().type != type )
      throw SyntaxError( cur().pos, what );
    advance();
  }

  void expect_end()
  {
    if ( cur().type != Tok::End )
      throw SyntaxError( cur().pos, "end of query" );
  }

  Formula disjunction()
  {
    Formula left = conjunction();
    while ( at_keyword( "OR" ) )
    {
      advance();
      left = Formula::disjunction( left, conjunction() );
    }
    return left;
  }

  Formula conjunction()
  {
    Formula left = until();
    while ( at_keyword( "AND" ) )
    {
      advance();
      left = Formula::conjunction( left, until() );
    }
    return left;
  }

  Formula until()
  {
    Formula left = unary();
    if ( at_keyword( "U" ) )
    {
      advance();
      return Formula::until( left, until() );
    }
    return left;
  }

  Formula unary()
  {
    if ( at_keyword( "NOT" ) )
      return advance(), Formula::negation( unary() );
    if ( at_keyword( "X" ) )
      return advance(), Formula::next( unary() );
    if ( at_keyword( "F" ) )
      return advance(), Formula::eventually( unary() );
    if ( at_keyword( "G" ) )
      return advance(), Formula::always( unary() );
    if ( at_keyword( "TRUE" ) )
      return advance(), Formula::truth();
    if ( at_keyword( "FALSE" ) )
      return advance(), Formula::falsity();
    if ( cur().type == Tok::LParen )
    {
      advance();
      Formula inner = disjunction();
      expect( Tok::RParen, "')'" );
      return inner;
    }
    if ( cur().type == Tok::Ident )
      return Formula::atom( atom() );
    throw SyntaxError( cur().pos, "formula" );
  }

  Atom session_atom()
  {
    std::size_t at = cur().pos;
    if ( cur().type != Tok::Ident )
      throw SyntaxError( at, kSessionAtomsExpected );
    Atom a = atom();
    if ( !is_session_atom( a ) )
      throw SyntaxError( at, kSessionAtomsExpected );
    return a;
  }

  std::string string_arg( const char* what )
  {
    if ( cur().type != Tok::String )
      throw SyntaxError( cur().pos, what );
    std::string v = cur().text;
    advance();
    return v;
  }

  Instant instant_arg()
  {
    std::size_t at = cur().pos;
    std::string text = string_arg( "quoted ISO-8601 timestamp" );
    try
    {
      return parse_iso8601( text );
    }
    catch ( const InvalidTimestamp& )
    {
      throw SyntaxError( at, "ISO-8601 timestamp" );
    }
  }

  std::string url_arg( bool base_only )
  {
    std::size_t at = cur().pos;
    std::string text = string_arg( "quoted absolute URL" );
    try
    {
      return base_only ? normalize_base( text ) : normalize_url( text );
    }
    catch ( const NotAbsoluteUrl& )
    {
      throw SyntaxError( at, "absolute URL" );
    }
  }

  /// Bare names expand into the activity-model namespace when `bare_is_wam`.
  ClassRef class_arg( bool bare_is_wam )
  {
    const Token tok = cur();
    if ( tok.type == Tok::Iri )
    {
      advance();
      if ( tok.text.empty() )
        throw SyntaxError( tok.pos, "non-empty IRI" );
      return { tok.text, true };
    }
    if ( tok.type == Tok::Ident || tok.type == Tok::String )
    {
      advance();
      if ( tok.text.empty() )
        throw SyntaxError( tok.pos, "class name" );
      if ( tok.text.find( "://" ) != std::string::npos )
        return { tok.text, true };
      if ( tok.text.find( ':' ) != std::string::npos )
      {
        auto expanded = expand_prefixed( tok.text );
        if ( !expanded )
          throw SyntaxError( tok.pos, "known prefix (wam, rdf, rdfs, owl, xsd, swrc, swc, foaf, dbo, yago)" );
        return { *expanded, true };
      }
      if ( bare_is_wam )
        return { wam::iri( tok.text ), true };
      return { tok.text, false };
    }
    throw SyntaxError( tok.pos, "class name or <IRI>" );
  }

  Atom atom()
  {
    const Token name = cur();
    static const std::vector<std::string_view> kKnown = { "user", "starts_after", "ends_before", "is", "content",
                                                          "function", "baseurl", "url", "param" };
    if ( std::find( kKnown.begin(), kKnown.end(), name.text ) == kKnown.end() )
      throw UnknownAtom( name.pos, name.text );
    advance();
    expect( Tok::LParen, "'(' after atom name" );

    Atom result;
    if ( name.text == "user" )
      result = atoms::User{ string_arg( "quoted user id" ) };
    else if ( name.text == "starts_after" )
      result = atoms::StartsAfter{ instant_arg() };
    else if ( name.text == "ends_before" )
      result = atoms::EndsBefore{ instant_arg() };
    else if ( name.text == "is" )
      result = atoms::Class{ class_arg( true ) };
    else if ( name.text == "content" )
      result = atoms::Content{ class_arg( false ) };
    else if ( name.text == "function" )
      result = atoms::Function{ class_arg( true ) };
    else if ( name.text == "baseurl" )
      result = atoms::BaseUrl{ url_arg( true ) };
    else if ( name.text == "url" )
      result = atoms::FullUrl{ url_arg( false ) };
    else
    {
      std::string pname;
      if ( cur().type == Tok::Ident || cur().type == Tok::String )
      {
        pname = cur().text;
        advance();
      }
      if ( pname.empty() )
        throw SyntaxError( cur().pos, "parameter name" );
      expect( Tok::Comma, "','" );
      result = atoms::Param{ pname, string_arg( "quoted parameter value" ) };
    }
    expect( Tok::RParen, "')'" );
    return result;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

std::string quote( std::string_view s )
{
  std::string out = "\"";
  for ( char c : s )
  {
    if ( c == '"' || c == '\\' )
      out.push_back( '\\' );
    out.push_back( c );
  }
  out.push_back( '"' );
  return out;
}

bool is_plain_ident( std::string_view s )
{
  static const std::vector<std::string_view> kKeywords = { "SESSIONS", "WHERE", "MATCH", "AND", "OR", "NOT",
                                                           "X",        "F",     "G",     "U",   "TRUE", "FALSE" };
  if ( s.empty() || !ident_start( s.front() ) )
    return false;
  if ( std::find( kKeywords.begin(), kKeywords.end(), s ) != kKeywords.end() )
    return false;
  return std::all_of( s.begin(), s.end(), []( char c ) { return ident_char( c ) && c != ':'; } );
}

std::string print_class( const ClassRef& ref, bool bare_is_wam )
{
  if ( ref.full_iri )
  {
    if ( bare_is_wam && ref.text.starts_with( wam::ns ) && is_plain_ident( ref.text.substr( wam::ns.size() ) ) )
      return ref.text.substr( wam::ns.size() );
    return "<" + ref.text + ">";
  }
  if ( is_plain_ident( ref.text ) )
    return ref.text;
  return quote( ref.text );
}

int precedence( Formula::Kind k )
{
  switch ( k )
  {
  case Formula::Kind::Or: return 1;
  case Formula::Kind::And: return 2;
  case Formula::Kind::Until: return 3;
  case Formula::Kind::Not:
  case Formula::Kind::Next:
  case Formula::Kind::Eventually:
  case Formula::Kind::Always: return 4;
  default: return 5;
  }
}

std::string print( const Formula& f, int min_prec )
{
  std::string out;
  switch ( f.kind() )
  {
  case Formula::Kind::True: out = "TRUE"; break;
  case Formula::Kind::False: out = "FALSE"; break;
  case Formula::Kind::Atom: out = to_string( f.atom() ); break;
  case Formula::Kind::Not: out = "NOT " + print( f.lhs(), 4 ); break;
  case Formula::Kind::Next: out = "X " + print( f.lhs(), 4 ); break;
  case Formula::Kind::Eventually: out = "F " + print( f.lhs(), 4 ); break;
  case Formula::Kind::Always: out = "G " + print( f.lhs(), 4 ); break;
  case Formula::Kind::And: out = print( f.lhs(), 2 ) + " AND " + print( f.rhs(), 3 ); break;
  case Formula::Kind::Or: out = print( f.lhs(), 1 ) + " OR " + print( f.rhs(), 2 ); break;
  case Formula::Kind::Until: out = print( f.lhs(), 4 ) + " U " + print( f.rhs(), 3 ); break;
  }
  if ( precedence( f.kind() ) < min_prec )
    return "(" + out + ")";
  return out;
}

} // namespace

Query parse_query( std::string_view text )
{
  return Parser( text ).query();
}

Formula parse_formula( std::string_view text )
{
  return Parser( text ).formula_only();
}

std::string to_string( const Atom& atom )
{
  return std::visit(
    []( const auto& a ) -> std::string {
      using T = std::decay_t<decltype( a )>;
      if constexpr ( std::is_same_v<T, atoms::Class> )
        return "is(" + print_class( a.cls, true ) + ")";
      else if constexpr ( std::is_same_v<T, atoms::Content> )
        return "content(" + print_class( a.cls, false ) + ")";
      else if constexpr ( std::is_same_v<T, atoms::Function> )
        return "function(" + print_class( a.cls, true ) + ")";
      else if constexpr ( std::is_same_v<T, atoms::BaseUrl> )
        return "baseurl(" + quote( a.base ) + ")";
      else if constexpr ( std::is_same_v<T, atoms::FullUrl> )
        return "url(" + quote( a.url ) + ")";
      else if constexpr ( std::is_same_v<T, atoms::Param> )
        return "param(" + ( is_plain_ident( a.name ) ? a.name : quote( a.name ) ) + ", " + quote( a.value ) + ")";
      else if constexpr ( std::is_same_v<T, atoms::User> )
        return "user(" + quote( a.user ) + ")";
      else if constexpr ( std::is_same_v<T, atoms::StartsAfter> )
        return "starts_after(" + quote( format_iso8601( a.bound ) ) + ")";
      else
        return "ends_before(" + quote( format_iso8601( a.bound ) ) + ")";
    },
    atom );
}

std::string to_string( const Formula& formula )
{
  return print( formula, 0 );
}

std::string to_string( const Query& query )
{
  std::string out = "SESSIONS";
  for ( std::size_t i = 0; i < query.session_atoms.size(); ++i )
    out += ( i == 0 ? " WHERE " : " AND " ) + to_string( query.session_atoms[i] );
  return out + " MATCH " + to_string( query.formula );
}

Formula desugar( const Formula& f )
{
  switch ( f.kind() )
  {
  case Formula::Kind::True:
  case Formula::Kind::False:
  case Formula::Kind::Atom: return f;
  case Formula::Kind::Not: return Formula::negation( desugar( f.lhs() ) );
  case Formula::Kind::Next: return Formula::next( desugar( f.lhs() ) );
  case Formula::Kind::And: return Formula::conjunction( desugar( f.lhs() ), desugar( f.rhs() ) );
  case Formula::Kind::Or: return Formula::disjunction( desugar( f.lhs() ), desugar( f.rhs() ) );
  case Formula::Kind::Until: return Formula::until( desugar( f.lhs() ), desugar( f.rhs() ) );
  case Formula::Kind::Eventually: return Formula::until( Formula::truth(), desugar( f.lhs() ) );
  case Formula::Kind::Always:
    return Formula::negation( Formula::until( Formula::truth(), Formula::negation( desugar( f.lhs() ) ) ) );
  }
  return f;
}

bool is_core( const Formula& f )
{
  switch ( f.kind() )
  {
  case Formula::Kind::Eventually:
  case Formula::Kind::Always: return false;
  case Formula::Kind::True:
  case Formula::Kind::False:
  case Formula::Kind::Atom: return true;
  case Formula::Kind::Not:
  case Formula::Kind::Next: return is_core( f.lhs() );
  default: return is_core( f.lhs() ) && is_core( f.rhs() );
  }
}

} // namespace semlog
