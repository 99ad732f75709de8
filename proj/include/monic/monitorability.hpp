#pragma once

/*!
  \file monitorability.hpp
  \brief Language- and state-level monitorability from six-valued monitors
*/

#include "monitor.hpp"

#include <stdexcept>
#include <string>

namespace monic
{

enum class monitorability4 : std::uint8_t
{
  positive,
  negative,
  neutral,
  non,
};

/// Prose spelling: "positively monitorable", ..., "non-monitorable".
inline char const* to_string( monitorability4 m )
{
  switch ( m )
  {
  case monitorability4::positive: return "positively monitorable";
  case monitorability4::negative: return "negatively monitorable";
  case monitorability4::neutral: return "neutrally monitorable";
  case monitorability4::non: return "non-monitorable";
  }
  return "";
}

/// Short spelling for tables and annotations: positive, negative, neutral, non.
inline char const* short_name( monitorability4 m )
{
  switch ( m )
  {
  case monitorability4::positive: return "positive";
  case monitorability4::negative: return "negative";
  case monitorability4::neutral: return "neutral";
  case monitorability4::non: return "non";
  }
  return "";
}

inline monitorability4 dual( monitorability4 m )
{
  if ( m == monitorability4::positive )
    return monitorability4::negative;
  if ( m == monitorability4::negative )
    return monitorability4::positive;
  return m;
}

/// Value-to-weak-monitorability: which verdicts remain reachable from a state with output `v`.
inline monitorability4 vtom( verdict6 v )
{
  switch ( v )
  {
  case verdict6::top:
  case verdict6::possibly_true:
    return monitorability4::positive;
  case verdict6::bottom:
  case verdict6::possibly_false:
    return monitorability4::negative;
  case verdict6::possibly_conclusive:
    return monitorability4::neutral;
  case verdict6::inconclusive:
    return monitorability4::non;
  }
  return monitorability4::non;
}

class unknown_state : public std::out_of_range
{
public:
  explicit unknown_state( int q ) : std::out_of_range( "unknown monitor state " + std::to_string( q ) ) {}
};

namespace detail
{

struct output_set
{
  bool seen[6] = {};
  bool has( verdict6 v ) const { return seen[static_cast<int>( v )]; }
};

inline output_set reachable_outputs( monitor const& m, int from )
{
  output_set out;
  auto r = forward_reachable( m.graph(), from );
  for ( std::size_t q = 0; q < m.size(); ++q )
    if ( r[q] )
      out.seen[static_cast<int>( m.output( static_cast<int>( q ) ) )] = true;
  return out;
}

inline void check_state( monitor const& m, int q )
{
  if ( !m.valid_state( q ) )
    throw unknown_state( q );
}

} // namespace detail

/*! \brief Four-valued monitorability of the monitored language.

  non if an inconclusive state is reachable; otherwise positive if no
  bottom state is reachable, negative if no top state is, else neutral.
*/
inline monitorability4 monitorability( monitor const& m )
{
  auto seen = detail::reachable_outputs( m, m.initial() );
  if ( seen.has( verdict6::inconclusive ) )
    return monitorability4::non;
  if ( !seen.has( verdict6::bottom ) )
    return monitorability4::positive;
  if ( !seen.has( verdict6::top ) )
    return monitorability4::negative;
  return monitorability4::neutral;
}

/// Classical monitorability: no reachable state is inconclusive.
inline bool is_monitorable( monitor const& m )
{
  return monitorability( m ) != monitorability4::non;
}

/// Some verdict is still detectable from the initial state.
inline bool is_weakly_monitorable( monitor const& m )
{
  return m.output( m.initial() ) != verdict6::inconclusive;
}

inline monitorability4 state_weak_monitorability( monitor const& m, int q )
{
  detail::check_state( m, q );
  return vtom( m.output( q ) );
}

/*! \brief Strong state-level monitorability.

  Quantifies over every state reachable from `q`, each judged by its weak
  monitorability.
*/
inline monitorability4 state_strong_monitorability( monitor const& m, int q )
{
  detail::check_state( m, q );
  auto seen = detail::reachable_outputs( m, q );
  if ( seen.has( verdict6::inconclusive ) )
    return monitorability4::non;
  bool pos = seen.has( verdict6::top ) || seen.has( verdict6::possibly_true );
  bool neg = seen.has( verdict6::bottom ) || seen.has( verdict6::possibly_false );
  if ( !seen.has( verdict6::possibly_conclusive ) && !neg )
    return monitorability4::positive;
  if ( !seen.has( verdict6::possibly_conclusive ) && !pos )
    return monitorability4::negative;
  return monitorability4::neutral;
}

/*! \brief Prefix class of `u`, encoded as the six-valued verdict.

  top/bottom/possibly_true/possibly_false/possibly_conclusive/inconclusive
  mean good/bad/positive/negative/neutral/ugly; see prefix_class().
*/
inline verdict6 classify_prefix( monitor const& m, finite_word const& u )
{
  return read_word( m, u );
}

} // namespace monic
