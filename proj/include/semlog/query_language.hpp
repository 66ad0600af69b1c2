#pragma once

#include "semlog/time.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace semlog {

/// Reference to a class: a full IRI, or a short name compared against the
/// local part of IRIs.
struct ClassRef
{
  std::string text;
  bool full_iri = false;

  bool matches( std::string_view iri ) const;
  bool operator==( const ClassRef& ) const = default;
};

namespace atoms {

/// Structural class of the subject: wam:Session for a session, wam:Event plus
/// wam:StartEvent / wam:EndEvent for an event.
struct Class
{
  ClassRef cls;
  bool operator==( const Class& ) const = default;
};
struct Content
{
  ClassRef cls;
  bool operator==( const Content& ) const = default;
};
struct Function
{
  ClassRef cls;
  bool operator==( const Function& ) const = default;
};
struct BaseUrl
{
  std::string base;
  bool operator==( const BaseUrl& ) const = default;
};
struct FullUrl
{
  std::string url;
  bool operator==( const FullUrl& ) const = default;
};
struct Param
{
  std::string name;
  std::string value;
  bool operator==( const Param& ) const = default;
};
struct User
{
  std::string user;
  bool operator==( const User& ) const = default;
};
struct StartsAfter
{
  Instant bound;
  bool operator==( const StartsAfter& ) const = default;
};
struct EndsBefore
{
  Instant bound;
  bool operator==( const EndsBefore& ) const = default;
};

} // namespace atoms

using Atom = std::variant<atoms::Class, atoms::Content, atoms::Function, atoms::BaseUrl, atoms::FullUrl, atoms::Param,
                          atoms::User, atoms::StartsAfter, atoms::EndsBefore>;

/// Atoms allowed in the session-constraint part of a query.
bool is_session_atom( const Atom& atom );

/// Immutable formula tree; copies share structure.
class Formula
{
public:
  enum class Kind
  {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Next,
    Until,
    Eventually,
    Always
  };

  static Formula truth();
  static Formula falsity();
  static Formula atom( Atom a );
  static Formula negation( Formula f );
  static Formula conjunction( Formula lhs, Formula rhs );
  static Formula disjunction( Formula lhs, Formula rhs );
  static Formula next( Formula f );
  static Formula until( Formula lhs, Formula rhs );
  static Formula eventually( Formula f );
  static Formula always( Formula f );

  Kind kind() const;
  const Atom& atom() const;
  /// operand of a unary node, left side of a binary one
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::size_t depth() const;
  std::size_t size() const;

  bool operator==( const Formula& other ) const;

private:
  struct Node;
  explicit Formula( std::shared_ptr<const Node> node ) : node_( std::move( node ) ) {}
  std::shared_ptr<const Node> node_;
};

struct Query
{
  std::vector<Atom> session_atoms;
  Formula formula = Formula::truth();

  bool operator==( const Query& ) const = default;
};

/// Grammar:
///
///   query   := SESSIONS [WHERE atom (AND atom)*] MATCH formula
///   formula := or
///   or      := and (OR and)*
///   and     := until (AND until)*
///   until   := unary [U until]
///   unary   := (NOT | X | F | G) unary | TRUE | FALSE | '(' formula ')' | atom
///   atom    := user("..") | starts_after("ISO") | ends_before("ISO") | is(Class)
///            | content(Class) | function(Name) | baseurl("..") | url("..")
///            | param(name, "..")
///
/// Class arguments are a short name, a `prefix:Name`, an `<IRI>` or a quoted
/// string. Throws SyntaxError or UnknownAtom.
Query parse_query( std::string_view text );

/// Parses only the formula part.
Formula parse_formula( std::string_view text );

std::string to_string( const Atom& atom );
std::string to_string( const Formula& formula );
std::string to_string( const Query& query );

/// Rewrites F and G in terms of U: F a = TRUE U a, G a = NOT (TRUE U NOT a).
Formula desugar( const Formula& formula );

/// True when the formula has no F or G node.
bool is_core( const Formula& formula );

} // namespace semlog
