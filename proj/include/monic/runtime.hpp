#pragma once

/*!
  \file runtime.hpp
  \brief Online monitor sessions with state-level pruning

  A session is disposable once no registered handler can fire any more.
  The decision needs only the current state's output and the handler
  policy, so each step costs O(1) beyond the table lookup.
*/

#include "monitorability.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monic
{

struct handler_policy
{
  bool on_satisfaction = true;
  bool on_violation = true;

  static handler_policy both() { return { true, true }; }
  static handler_policy satisfaction_only() { return { true, false }; }
  static handler_policy violation_only() { return { false, true }; }

  friend bool operator==( handler_policy, handler_policy ) = default;
};

enum class session_state
{
  running,
  concluded,
  removable,
};

struct session_status
{
  session_state state = session_state::running;
  /// Set when concluded.
  std::optional<bool> verdict;
  /// Set when removable.
  std::string reason;

  friend bool operator==( session_status const&, session_status const& ) = default;
};

inline std::string to_string( session_status const& s )
{
  switch ( s.state )
  {
  case session_state::running:
    return "RUNNING";
  case session_state::concluded:
    return std::string( "CONCLUDED(" ) + ( *s.verdict ? "true" : "false" ) + ")";
  case session_state::removable:
    return "REMOVABLE(" + s.reason + ")";
  }
  return {};
}

/*! \brief Status for a session sitting in a state with output `v`.

  A final verdict takes precedence over removability.
*/
inline session_status evaluate_status( verdict6 v, handler_policy p )
{
  if ( v == verdict6::top )
    return { session_state::concluded, true, {} };
  if ( v == verdict6::bottom )
    return { session_state::concluded, false, {} };
  if ( v == verdict6::inconclusive )
    return { session_state::removable, std::nullopt, "inconclusive state" };
  if ( !p.on_satisfaction && !p.on_violation )
    return { session_state::removable, std::nullopt, "no handlers registered" };
  switch ( vtom( v ) )
  {
  case monitorability4::positive:
    if ( !p.on_satisfaction )
      return { session_state::removable, std::nullopt, "state weakly positively monitorable; no satisfaction handler" };
    break;
  case monitorability4::negative:
    if ( !p.on_violation )
      return { session_state::removable, std::nullopt, "state weakly negatively monitorable; no violation handler" };
    break;
  default:
    break;
  }
  return {};
}

/// Raised when stepping a session that already left the running state.
class session_misuse : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

class session
{
public:
  session( std::shared_ptr<monitor const> m, handler_policy p )
      : m_( std::move( m ) ), policy_( p ), state_( m_->initial() ), status_( evaluate_status( m_->output( state_ ), p ) )
  {
  }

  void step( symbol e )
  {
    if ( status_.state != session_state::running )
      throw session_misuse( "step on a session that is " + to_string( status_ ) );
    state_ = m_->run_from( state_, { e } );
    ++events_;
    status_ = evaluate_status( m_->output( state_ ), policy_ );
  }

  int state() const { return state_; }
  verdict6 verdict() const { return m_->output( state_ ); }
  session_status const& status() const { return status_; }
  bool running() const { return status_.state == session_state::running; }
  std::size_t events() const { return events_; }
  handler_policy policy() const { return policy_; }
  monitor const& get_monitor() const { return *m_; }

private:
  std::shared_ptr<monitor const> m_;
  handler_policy policy_;
  int state_;
  session_status status_;
  std::size_t events_ = 0;
};

inline session open_session( std::shared_ptr<monitor const> m, handler_policy p )
{
  return session( std::move( m ), p );
}

struct trace_report
{
  /// Verdict after each event of the trace.
  std::vector<verdict6> verdicts;
  session_status final_status;
  /// Number of events read when the session stopped running (0 = before any event).
  std::optional<std::size_t> first_removable;
  std::size_t events_saved = 0;

  friend bool operator==( trace_report const&, trace_report const& ) = default;
};

/*! \brief Replays `trace` through a fresh session.

  The session is stepped until it stops running; verdicts for the
  remaining events are still reported from the underlying monitor so the
  verdict stream always covers the whole trace.
*/
inline trace_report run_trace( std::shared_ptr<monitor const> m, finite_word const& trace, handler_policy p )
{
  trace_report r;
  auto s = open_session( m, p );
  int q = m->initial();
  if ( !s.running() )
    r.first_removable = 0;
  for ( auto e : trace )
  {
    q = m->run_from( q, { e } );
    r.verdicts.push_back( m->output( q ) );
    if ( s.running() )
    {
      s.step( e );
      if ( !s.running() )
        r.first_removable = s.events();
    }
  }
  r.final_status = s.status();
  if ( r.first_removable )
    r.events_saved = trace.size() - *r.first_removable;
  return r;
}

} // namespace monic
