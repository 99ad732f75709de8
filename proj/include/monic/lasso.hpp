#pragma once

/*!
  \file lasso.hpp
  \brief LTL semantics on ultimately periodic words

  Direct evaluation of the formula tree over the finitely many positions of
  a lasso, with least (U) and greatest (R) fixpoints computed by iteration
  along the successor function. Shares no code with the automata pipeline
  and serves as its reference semantics in tests.
*/

#include "ltl.hpp"

#include <vector>

namespace monic
{

namespace detail
{

inline std::vector<bool> eval_positions( formula const& f, alphabet const& sigma, lasso_word const& w )
{
  std::size_t const n = w.positions();
  std::vector<bool> v( n );
  auto fix = [&]( std::vector<bool> const& a, std::vector<bool> const& b, bool least ) {
    // least:    v = b | (a & v')   from all-false
    // greatest: v = b & (a | v')   from all-true
    std::vector<bool> cur( n, !least );
    for ( bool changed = true; changed; )
    {
      changed = false;
      for ( std::size_t k = n; k-- > 0; )
      {
        bool next = cur[w.successor( k )];
        bool val = least ? ( b[k] || ( a[k] && next ) ) : ( b[k] && ( a[k] || next ) );
        if ( val != cur[k] )
        {
          cur[k] = val;
          changed = true;
        }
      }
    }
    return cur;
  };

  switch ( f.kind() )
  {
  case op::tt:
    v.assign( n, true );
    return v;
  case op::ff:
    v.assign( n, false );
    return v;
  case op::atom:
  {
    auto idx = sigma.index_of( f.name() );
    if ( !idx )
      throw std::invalid_argument( "eval_lasso: proposition '" + f.name() + "' not in the word's alphabet" );
    for ( std::size_t k = 0; k < n; ++k )
      v[k] = w.at( k ).has( *idx );
    return v;
  }
  default:
    break;
  }

  auto a = eval_positions( f.lhs(), sigma, w );
  std::vector<bool> b;
  if ( is_binary( f.kind() ) )
    b = eval_positions( f.rhs(), sigma, w );

  switch ( f.kind() )
  {
  case op::not_:
    for ( std::size_t k = 0; k < n; ++k )
      v[k] = !a[k];
    return v;
  case op::and_:
    for ( std::size_t k = 0; k < n; ++k )
      v[k] = a[k] && b[k];
    return v;
  case op::or_:
    for ( std::size_t k = 0; k < n; ++k )
      v[k] = a[k] || b[k];
    return v;
  case op::implies:
    for ( std::size_t k = 0; k < n; ++k )
      v[k] = !a[k] || b[k];
    return v;
  case op::next:
    for ( std::size_t k = 0; k < n; ++k )
      v[k] = a[w.successor( k )];
    return v;
  case op::until:
    return fix( a, b, true );
  case op::release:
    return fix( a, b, false );
  case op::finally:
    return fix( std::vector<bool>( n, true ), a, true );
  case op::globally:
    return fix( std::vector<bool>( n, false ), a, false );
  default:
    break;
  }
  throw std::logic_error( "eval_lasso: unknown operator" );
}

} // namespace detail

/// True iff prefix . loop^omega satisfies `f`; symbols are read over `sigma`.
inline bool eval_lasso( formula const& f, alphabet const& sigma, lasso_word const& w )
{
  return detail::eval_positions( f, sigma, w )[0];
}

} // namespace monic
