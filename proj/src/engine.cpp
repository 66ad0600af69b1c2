#include "semlog/engine.hpp"

#include "semlog/errors.hpp"
#include "semlog/knowledge_base.hpp"

#include <algorithm>
#include <stdexcept>

namespace semlog {

SessionAutomaton::SessionAutomaton( const Session& session ) : session_( &session )
{
  if ( session.events.empty() )
    throw EmptySession();
  states_.reserve( session.events.size() );
  for ( std::size_t i = 0; i < session.events.size(); ++i )
    states_.push_back( StateContext{ &session, i } );
}

std::vector<std::pair<std::size_t, std::size_t>> SessionAutomaton::transitions() const
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for ( std::size_t i = 0; i + 1 < states_.size(); ++i )
    out.emplace_back( i, i + 1 );
  return out;
}

SessionAutomaton build_automaton( const Session& session )
{
  return SessionAutomaton( session );
}

std::size_t StateSet::count() const
{
  return static_cast<std::size_t>( std::count( bits_.begin(), bits_.end(), true ) );
}

std::vector<std::size_t> StateSet::indices() const
{
  std::vector<std::size_t> out;
  for ( std::size_t i = 0; i < bits_.size(); ++i )
  {
    if ( bits_[i] )
      out.push_back( i );
  }
  return out;
}

namespace {

bool any_matches( const ClassRef& ref, const std::set<std::string>& iris )
{
  if ( ref.full_iri )
    return iris.count( ref.text ) > 0;
  return std::any_of( iris.begin(), iris.end(), [&]( const std::string& iri ) { return ref.matches( iri ); } );
}

} // namespace

bool eval_atom( const Atom& atom, const StateContext& state )
{
  const BrowsingEvent& event = state.event();
  const Session& session = *state.session;
  return std::visit(
    [&]( const auto& a ) -> bool {
      using T = std::decay_t<decltype( a )>;
      if constexpr ( std::is_same_v<T, atoms::Class> )
      {
        return a.cls.matches( wam::Session ) || a.cls.matches( wam::Event ) ||
               ( state.is_first() && a.cls.matches( wam::StartEvent ) ) ||
               ( state.is_last() && a.cls.matches( wam::EndEvent ) );
      }
      else if constexpr ( std::is_same_v<T, atoms::Content> )
        return any_matches( a.cls, event.content_types );
      else if constexpr ( std::is_same_v<T, atoms::Function> )
        return any_matches( a.cls, event.function_types );
      else if constexpr ( std::is_same_v<T, atoms::BaseUrl> )
        return event.base_url == a.base;
      else if constexpr ( std::is_same_v<T, atoms::FullUrl> )
        return event.full_url == a.url;
      else if constexpr ( std::is_same_v<T, atoms::Param> )
        return std::find( event.params.begin(), event.params.end(), Parameter{ a.name, a.value } ) != event.params.end();
      else if constexpr ( std::is_same_v<T, atoms::User> )
        return session.user == a.user;
      else if constexpr ( std::is_same_v<T, atoms::StartsAfter> )
        return session.start_time >= a.bound;
      else
        return session.end_time <= a.bound;
    },
    atom );
}

bool eval_session_constraints( const Session& session, const std::vector<Atom>& atoms )
{
  if ( atoms.empty() )
    return true;
  SessionAutomaton automaton( session );
  const StateContext& start = automaton.state( automaton.start() );
  return std::all_of( atoms.begin(), atoms.end(), [&]( const Atom& a ) { return eval_atom( a, start ); } );
}

StateSet satisfying_states( const SessionAutomaton& automaton, const Formula& formula )
{
  const std::size_t n = automaton.state_count();
  switch ( formula.kind() )
  {
  case Formula::Kind::True: return StateSet( n, true );
  case Formula::Kind::False: return StateSet( n, false );
  case Formula::Kind::Atom:
  {
    StateSet out( n );
    for ( std::size_t i = 0; i < n; ++i )
      out.set( i, eval_atom( formula.atom(), automaton.state( i ) ) );
    return out;
  }
  case Formula::Kind::Not:
  {
    StateSet sub = satisfying_states( automaton, formula.lhs() );
    StateSet out( n );
    for ( std::size_t i = 0; i < n; ++i )
      out.set( i, !sub.contains( i ) );
    return out;
  }
  case Formula::Kind::And:
  case Formula::Kind::Or:
  {
    StateSet a = satisfying_states( automaton, formula.lhs() );
    StateSet b = satisfying_states( automaton, formula.rhs() );
    const bool conj = formula.kind() == Formula::Kind::And;
    StateSet out( n );
    for ( std::size_t i = 0; i < n; ++i )
      out.set( i, conj ? a.contains( i ) && b.contains( i ) : a.contains( i ) || b.contains( i ) );
    return out;
  }
  case Formula::Kind::Next:
  {
    StateSet sub = satisfying_states( automaton, formula.lhs() );
    StateSet out( n );
    // strong next: the last state has no successor
    for ( std::size_t i = 0; i + 1 < n; ++i )
      out.set( i, sub.contains( i + 1 ) );
    return out;
  }
  case Formula::Kind::Until:
  {
    StateSet hold = satisfying_states( automaton, formula.lhs() );
    StateSet goal = satisfying_states( automaton, formula.rhs() );
    StateSet out( n );
    bool later = false;
    for ( std::size_t i = n; i-- > 0; )
    {
      later = goal.contains( i ) || ( hold.contains( i ) && later );
      out.set( i, later );
    }
    return out;
  }
  case Formula::Kind::Eventually:
  case Formula::Kind::Always: break;
  }
  throw std::invalid_argument( "satisfying_states needs a desugared formula: " + to_string( formula ) );
}

std::vector<std::string> answer( const Query& query, const std::vector<Session>& sessions )
{
  const Formula core = desugar( query.formula );
  std::vector<std::string> ids;
  for ( const auto& session : sessions )
  {
    if ( session.events.empty() || !eval_session_constraints( session, query.session_atoms ) )
      continue;
    SessionAutomaton automaton( session );
    if ( satisfying_states( automaton, core ).contains( automaton.start() ) )
      ids.push_back( session.id );
  }
  return ids;
}

} // namespace semlog
