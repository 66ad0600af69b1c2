#include "semlog/engine.hpp"

#include <stdexcept>

namespace semlog {

bool oracle_eval( const Session& session, const Formula& formula, std::size_t index )
{
  const std::size_t n = session.events.size();
  if ( index >= n )
    throw std::out_of_range( "oracle_eval: index past the end of the session" );

  switch ( formula.kind() )
  {
  case Formula::Kind::True: return true;
  case Formula::Kind::False: return false;
  case Formula::Kind::Atom: return eval_atom( formula.atom(), StateContext{ &session, index } );
  case Formula::Kind::Not: return !oracle_eval( session, formula.lhs(), index );
  case Formula::Kind::And: return oracle_eval( session, formula.lhs(), index ) && oracle_eval( session, formula.rhs(), index );
  case Formula::Kind::Or: return oracle_eval( session, formula.lhs(), index ) || oracle_eval( session, formula.rhs(), index );
  case Formula::Kind::Next: return index + 1 < n && oracle_eval( session, formula.lhs(), index + 1 );
  case Formula::Kind::Until:
    // exists k >= index with rhs at k and lhs on [index, k)
    for ( std::size_t k = index; k < n; ++k )
    {
      if ( !oracle_eval( session, formula.rhs(), k ) )
        continue;
      bool held = true;
      for ( std::size_t j = index; j < k && held; ++j )
        held = oracle_eval( session, formula.lhs(), j );
      if ( held )
        return true;
    }
    return false;
  case Formula::Kind::Eventually:
    for ( std::size_t k = index; k < n; ++k )
      if ( oracle_eval( session, formula.lhs(), k ) )
        return true;
    return false;
  case Formula::Kind::Always:
    for ( std::size_t k = index; k < n; ++k )
      if ( !oracle_eval( session, formula.lhs(), k ) )
        return false;
    return true;
  }
  throw std::invalid_argument( "oracle_eval: unknown formula kind" );
}

} // namespace semlog
