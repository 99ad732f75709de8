#pragma once

/*!
  \file machine.hpp
  \brief Deterministic total Moore machines over 2^AP

  Shared representation for the three- and six-valued monitors: a flat
  transition table plus one output per state.
*/

#include "ltl.hpp"
#include "scc.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace monic
{

template<class Output>
struct moore_machine
{
  alphabet sigma;
  std::size_t states = 0;
  /// delta[q * sigma.symbol_count() + s.bits]
  std::vector<int> delta;
  int initial = 0;
  std::vector<Output> output;

  std::size_t symbol_count() const { return sigma.symbol_count(); }
  int next( int q, symbol s ) const { return delta[static_cast<std::size_t>( q ) * symbol_count() + s.bits]; }

  int run( finite_word const& u ) const { return run_from( initial, u ); }
  int run_from( int q, finite_word const& u ) const
  {
    for ( auto s : u )
    {
      if ( !sigma.valid( s ) )
        throw std::out_of_range( "symbol outside the machine's alphabet" );
      q = next( q, s );
    }
    return q;
  }

  digraph graph() const
  {
    digraph g( states );
    for ( std::size_t q = 0; q < states; ++q )
    {
      for ( std::size_t s = 0; s < symbol_count(); ++s )
        g[q].push_back( delta[q * symbol_count() + s] );
      std::sort( g[q].begin(), g[q].end() );
      g[q].erase( std::unique( g[q].begin(), g[q].end() ), g[q].end() );
    }
    return g;
  }

  /// Throws std::logic_error unless the table is total and in range.
  void validate() const
  {
    if ( delta.size() != states * symbol_count() || output.size() != states )
      throw std::logic_error( "machine tables have inconsistent sizes" );
    if ( states == 0 || initial < 0 || static_cast<std::size_t>( initial ) >= states )
      throw std::logic_error( "machine has no valid initial state" );
    for ( int t : delta )
      if ( t < 0 || static_cast<std::size_t>( t ) >= states )
        throw std::logic_error( "transition target out of range" );
  }
};

/*! \brief Renumbers the reachable part breadth-first from the initial state.

  Symbols are explored in alphabet::ordered_symbols() order, so two
  isomorphic machines over the same alphabet come out identical.
*/
template<class Output>
moore_machine<Output> canonicalize( moore_machine<Output> const& m )
{
  auto order = m.sigma.ordered_symbols();
  std::vector<int> number( m.states, -1 );
  std::vector<int> queue{ m.initial };
  number[m.initial] = 0;
  for ( std::size_t head = 0; head < queue.size(); ++head )
    for ( auto s : order )
    {
      int t = m.next( queue[head], s );
      if ( number[t] == -1 )
      {
        number[t] = static_cast<int>( queue.size() );
        queue.push_back( t );
      }
    }

  moore_machine<Output> out;
  out.sigma = m.sigma;
  out.states = queue.size();
  out.initial = 0;
  out.delta.resize( out.states * m.symbol_count() );
  out.output.resize( out.states );
  for ( std::size_t i = 0; i < queue.size(); ++i )
  {
    int q = queue[i];
    out.output[i] = m.output[q];
    for ( std::size_t s = 0; s < m.symbol_count(); ++s )
      out.delta[i * m.symbol_count() + s] = number[m.delta[static_cast<std::size_t>( q ) * m.symbol_count() + s]];
  }
  return out;
}

/*! \brief Minimal machine with the same output on every finite word.

  Moore partition refinement seeded by the outputs; the result is
  canonicalized.
*/
template<class Output>
moore_machine<Output> minimize( moore_machine<Output> const& input )
{
  auto const m = canonicalize( input ); // drop unreachable states first
  std::size_t const n = m.states, k = m.symbol_count();

  std::vector<int> block( n );
  {
    std::map<Output, int> seed;
    for ( std::size_t q = 0; q < n; ++q )
      block[q] = seed.emplace( m.output[q], static_cast<int>( seed.size() ) ).first->second;
  }
  std::size_t blocks = 0;
  for ( int b : block )
    blocks = std::max<std::size_t>( blocks, b + 1 );

  for ( ;; )
  {
    std::map<std::vector<int>, int> signature;
    std::vector<int> refined( n );
    for ( std::size_t q = 0; q < n; ++q )
    {
      std::vector<int> sig;
      sig.reserve( k + 1 );
      sig.push_back( block[q] );
      for ( std::size_t s = 0; s < k; ++s )
        sig.push_back( block[m.delta[q * k + s]] );
      refined[q] = signature.emplace( std::move( sig ), static_cast<int>( signature.size() ) ).first->second;
    }
    block = std::move( refined );
    if ( signature.size() == blocks )
      break;
    blocks = signature.size();
  }

  moore_machine<Output> quotient;
  quotient.sigma = m.sigma;
  quotient.states = blocks;
  quotient.initial = block[m.initial];
  quotient.delta.resize( blocks * k );
  quotient.output.resize( blocks );
  for ( std::size_t q = 0; q < n; ++q )
  {
    quotient.output[block[q]] = m.output[q];
    for ( std::size_t s = 0; s < k; ++s )
      quotient.delta[block[q] * k + s] = block[m.delta[q * k + s]];
  }
  return canonicalize( quotient );
}

} // namespace monic
