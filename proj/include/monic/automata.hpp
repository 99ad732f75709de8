#pragma once

/*!
  \file automata.hpp
  \brief Determinization and the three-valued product monitor
*/

#include "machine.hpp"
#include "nba.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

namespace monic
{

/// Raised when a pipeline stage observes a state its inputs rule out.
class internal_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

struct dfa
{
  alphabet sigma;
  /// NBA states making up each DFA state.
  std::vector<std::vector<int>> subsets;
  std::vector<int> delta;
  int initial = 0;
  std::vector<bool> accepting;

  std::size_t size() const { return subsets.size(); }
  int next( int q, symbol s ) const { return delta[static_cast<std::size_t>( q ) * sigma.symbol_count() + s.bits]; }
  bool accepts( finite_word const& u ) const
  {
    int q = initial;
    for ( auto s : u )
      q = next( q, s );
    return accepting[q];
  }
};

namespace detail
{

/*! \brief Marked part of an NBA, read as an NFA and quotiented by the
    coarsest forward bisimulation over syntactic (guard, target) edges.

  Bisimilar states accept the same finite words, so determinizing the
  quotient gives the same DFA language with far fewer subsets.
*/
struct nfa_quotient
{
  std::vector<int> block_of;              // -1 for unmarked states
  std::vector<std::vector<int>> members;  // NBA states per block
  std::vector<std::vector<nba_edge>> edges;
  std::vector<int> initial;
};

inline nfa_quotient quotient_marked( nba const& n, std::vector<bool> const& mark )
{
  nfa_quotient out;
  out.block_of.assign( n.size(), -1 );
  std::size_t blocks = 0;
  for ( std::size_t q = 0; q < n.size(); ++q )
    if ( mark[q] )
    {
      out.block_of[q] = 0;
      blocks = 1;
    }

  using sig_t = std::vector<std::tuple<int, std::uint32_t, std::uint32_t, int>>;
  auto signature = [&]( int q ) {
    sig_t sig;
    for ( auto const& e : n.edges( q ) )
      if ( mark[e.target] && e.guard.satisfiable() )
        sig.emplace_back( 0, e.guard.must, e.guard.must_not, out.block_of[e.target] );
    std::sort( sig.begin(), sig.end() );
    sig.erase( std::unique( sig.begin(), sig.end() ), sig.end() );
    sig.emplace_back( 1, 0, 0, out.block_of[q] );
    return sig;
  };

  for ( ;; )
  {
    std::map<sig_t, int> ids;
    std::vector<int> refined( n.size(), -1 );
    for ( std::size_t q = 0; q < n.size(); ++q )
      if ( mark[q] )
        refined[q] = ids.emplace( signature( static_cast<int>( q ) ), static_cast<int>( ids.size() ) ).first->second;
    out.block_of = std::move( refined );
    if ( ids.size() == blocks )
      break;
    blocks = ids.size();
  }

  out.members.resize( blocks );
  out.edges.resize( blocks );
  for ( std::size_t q = 0; q < n.size(); ++q )
  {
    int b = out.block_of[q];
    if ( b < 0 )
      continue;
    if ( out.members[b].empty() )
      for ( auto const& e : n.edges( static_cast<int>( q ) ) )
        if ( mark[e.target] && e.guard.satisfiable() )
          out.edges[b].push_back( { e.guard, out.block_of[e.target] } );
    out.members[b].push_back( static_cast<int>( q ) );
  }
  for ( int q : n.initial() )
    if ( mark[q] )
      out.initial.push_back( out.block_of[q] );
  std::sort( out.initial.begin(), out.initial.end() );
  out.initial.erase( std::unique( out.initial.begin(), out.initial.end() ), out.initial.end() );
  return out;
}

} // namespace detail

/*! \brief Subset construction of the NFA whose final states are the
    nonempty-marked NBA states.

  Only marked states are tracked: an unmarked state can never reach a
  marked one, so dropping it changes no acceptance decision. A DFA state
  therefore accepts iff its subset is non-empty, and the empty subset is
  the rejecting sink. Computes the marking if `n` lacks it.
*/
inline dfa nba_to_dfa( nba const& n )
{
  std::vector<bool> mark = n.nonempty_mark() ? *n.nonempty_mark() : nonempty_states( n );
  auto nfa = detail::quotient_marked( n, mark );

  dfa out;
  out.sigma = n.sigma();
  std::size_t const k = out.sigma.symbol_count();
  std::vector<std::vector<int>> block_sets;
  std::map<std::vector<int>, int> ids;
  auto get = [&]( std::vector<int> blocks ) {
    if ( auto it = ids.find( blocks ); it != ids.end() )
      return it->second;
    int id = static_cast<int>( block_sets.size() );
    ids.emplace( blocks, id );
    std::vector<int> states;
    for ( int b : blocks )
      states.insert( states.end(), nfa.members[b].begin(), nfa.members[b].end() );
    std::sort( states.begin(), states.end() );
    out.accepting.push_back( !blocks.empty() );
    out.subsets.push_back( std::move( states ) );
    block_sets.push_back( std::move( blocks ) );
    return id;
  };

  out.initial = get( nfa.initial );

  std::vector<bool> seen( nfa.members.size() );
  for ( std::size_t head = 0; head < block_sets.size(); ++head )
  {
    for ( std::size_t s = 0; s < k; ++s )
    {
      symbol sym{ static_cast<std::uint32_t>( s ) };
      std::vector<int> succ;
      for ( int b : block_sets[head] )
        for ( auto const& e : nfa.edges[b] )
          if ( e.guard.matches( sym ) && !seen[e.target] )
          {
            seen[e.target] = true;
            succ.push_back( e.target );
          }
      for ( int b : succ )
        seen[b] = false;
      std::sort( succ.begin(), succ.end() );
      int target = get( std::move( succ ) );
      out.delta.push_back( target );
    }
  }
  return out;
}

enum class verdict3 : std::uint8_t
{
  top,
  bottom,
  unknown,
};

inline char const* to_string( verdict3 v )
{
  switch ( v )
  {
  case verdict3::top:
    return "true";
  case verdict3::bottom:
    return "false";
  case verdict3::unknown:
    return "?";
  }
  return "";
}

using fsm3 = moore_machine<verdict3>;

/*! \brief Reachable product of A_phi and A_not_phi with three-valued outputs.

  A pair outputs top when the negation's component rejects, bottom when the
  formula's component rejects, unknown otherwise. A pair rejected by both
  is impossible for a correct pipeline and raises internal_error.
*/
inline fsm3 product_monitor( dfa const& pos, dfa const& neg )
{
  if ( !( pos.sigma == neg.sigma ) )
    throw std::invalid_argument( "product_monitor: alphabets differ" );

  fsm3 out;
  out.sigma = pos.sigma;
  std::size_t const k = out.sigma.symbol_count();
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  auto get = [&]( int a, int b ) {
    auto key = std::make_pair( a, b );
    if ( auto it = ids.find( key ); it != ids.end() )
      return it->second;
    bool pa = pos.accepting[a], na = neg.accepting[b];
    if ( !pa && !na )
      throw internal_error( "product_monitor: reachable pair rejected by both automata (states " +
                            std::to_string( a ) + ", " + std::to_string( b ) + ")" );
    int id = static_cast<int>( pairs.size() );
    ids.emplace( key, id );
    pairs.push_back( key );
    out.output.push_back( !na ? verdict3::top : !pa ? verdict3::bottom : verdict3::unknown );
    return id;
  };

  out.initial = get( pos.initial, neg.initial );
  for ( std::size_t head = 0; head < pairs.size(); ++head )
  {
    auto [a, b] = pairs[head];
    for ( std::size_t s = 0; s < k; ++s )
    {
      symbol sym{ static_cast<std::uint32_t>( s ) };
      int t = get( pos.next( a, sym ), neg.next( b, sym ) );
      out.delta.push_back( t );
    }
  }
  out.states = pairs.size();
  return out;
}

/// Sizes of each intermediate stage, for diagnostics.
struct pipeline_stats
{
  std::size_t nba_pos = 0, nba_neg = 0;
  std::size_t dfa_pos = 0, dfa_neg = 0;
  std::size_t product = 0, minimized = 0;
};

/*! \brief Three-valued monitor for `f` over `sigma` (defaults to alphabet_of(f)).

  NBAs for f and !f, nonemptiness marking, subset construction, product,
  minimization.
*/
inline fsm3 build_monitor3( formula const& f, alphabet const& sigma, pipeline_stats* stats = nullptr )
{
  if ( !sigma.includes( alphabet_of( f ) ) )
    throw std::invalid_argument( "build_monitor3: alphabet does not cover the formula" );
  auto np = ltl_to_nba( f, sigma );
  auto nn = ltl_to_nba( !f, sigma );
  mark_nonempty( np );
  mark_nonempty( nn );
  auto dp = nba_to_dfa( np );
  auto dn = nba_to_dfa( nn );
  auto prod = product_monitor( dp, dn );
  auto mini = minimize( prod );
  if ( stats )
    *stats = { np.size(), nn.size(), dp.size(), dn.size(), prod.states, mini.states };
  return mini;
}

inline fsm3 build_monitor3( formula const& f, pipeline_stats* stats = nullptr )
{
  return build_monitor3( f, alphabet_of( f ), stats );
}

} // namespace monic
