#pragma once

#include "semlog/query_language.hpp"
#include "semlog/sessionizer.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace semlog {

/// One automaton state: the session's metadata plus the single event at
/// `index`.
struct StateContext
{
  const Session* session = nullptr;
  std::size_t index = 0;

  const BrowsingEvent& event() const { return session->events[index]; }
  bool is_first() const { return index == 0; }
  bool is_last() const { return index + 1 == session->events.size(); }
};

/// Linear automaton over a session: state i holds event i, start state is 0,
/// and the only transitions are i -> i+1.
class SessionAutomaton
{
public:
  /// Throws EmptySession.
  explicit SessionAutomaton( const Session& session );

  std::size_t state_count() const { return states_.size(); }
  std::size_t start() const { return 0; }
  const StateContext& state( std::size_t i ) const { return states_.at( i ); }
  const std::vector<StateContext>& states() const { return states_; }
  const Session& session() const { return *session_; }

  /// (i, i+1) for every state but the last
  std::vector<std::pair<std::size_t, std::size_t>> transitions() const;

private:
  const Session* session_;
  std::vector<StateContext> states_;
};

/// The automaton refers to `session`, which must outlive it.
SessionAutomaton build_automaton( const Session& session );

/// Set of state indices, stored as a membership bitmap.
class StateSet
{
public:
  StateSet() = default;
  explicit StateSet( std::size_t n, bool value = false ) : bits_( n, value ) {}

  std::size_t universe() const { return bits_.size(); }
  bool contains( std::size_t i ) const { return i < bits_.size() && bits_[i]; }
  void set( std::size_t i, bool value = true ) { bits_.at( i ) = value; }
  std::size_t count() const;
  std::vector<std::size_t> indices() const;

  bool operator==( const StateSet& ) const = default;

private:
  std::vector<bool> bits_;
};

/// Closed-world atom check at one state. Session atoms look at the session
/// metadata; event atoms at the state's event.
bool eval_atom( const Atom& atom, const StateContext& state );

/// Conjunction of the session atoms, checked at the start state.
bool eval_session_constraints( const Session& session, const std::vector<Atom>& atoms );

/// Finite-trace semantics with strong next. Each operator node is computed
/// over all states at once; Until takes one backward pass. The formula must
/// be desugared (throws std::invalid_argument otherwise).
StateSet satisfying_states( const SessionAutomaton& automaton, const Formula& formula );

/// Ids of the sessions meeting the session constraints whose start state
/// satisfies the formula, in input order.
std::vector<std::string> answer( const Query& query, const std::vector<Session>& sessions );

/// Direct recursive transcription of the finite-trace semantics, one index
/// at a time and without memoization. Reference for testing.
bool oracle_eval( const Session& session, const Formula& formula, std::size_t index );

} // namespace semlog
