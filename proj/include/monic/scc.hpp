#pragma once

/*!
  \file scc.hpp
  \brief Tarjan's strongly connected components over adjacency lists
*/

#include <algorithm>
#include <cstddef>
#include <vector>

namespace monic
{

using digraph = std::vector<std::vector<int>>;

struct scc_decomposition
{
  /// component[v] is the SCC index of v; indices are in reverse topological order.
  std::vector<int> component;
  std::size_t count = 0;
  /// True iff the component contains at least one edge (a cycle).
  std::vector<bool> nontrivial;
};

/// Iterative Tarjan; every vertex in [0, g.size()) is visited.
inline scc_decomposition tarjan_scc( digraph const& g )
{
  std::size_t const n = g.size();
  scc_decomposition out;
  out.component.assign( n, -1 );

  std::vector<int> index( n, -1 ), low( n, 0 );
  std::vector<bool> on_stack( n, false );
  std::vector<int> stack;
  struct frame
  {
    int v;
    std::size_t next_edge;
  };
  std::vector<frame> call;
  int counter = 0;

  for ( std::size_t root = 0; root < n; ++root )
  {
    if ( index[root] != -1 )
      continue;
    call.push_back( { static_cast<int>( root ), 0 } );
    index[root] = low[root] = counter++;
    stack.push_back( static_cast<int>( root ) );
    on_stack[root] = true;

    while ( !call.empty() )
    {
      auto& fr = call.back();
      int v = fr.v;
      if ( fr.next_edge < g[v].size() )
      {
        int w = g[v][fr.next_edge++];
        if ( index[w] == -1 )
        {
          index[w] = low[w] = counter++;
          stack.push_back( w );
          on_stack[w] = true;
          call.push_back( { w, 0 } );
        }
        else if ( on_stack[w] )
          low[v] = std::min( low[v], index[w] );
        continue;
      }

      if ( low[v] == index[v] )
      {
        int c = static_cast<int>( out.count++ );
        int w;
        do
        {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = c;
        } while ( w != v );
      }
      call.pop_back();
      if ( !call.empty() )
      {
        int u = call.back().v;
        low[u] = std::min( low[u], low[v] );
      }
    }
  }

  out.nontrivial.assign( out.count, false );
  for ( std::size_t v = 0; v < n; ++v )
    for ( int w : g[v] )
      if ( out.component[v] == out.component[w] )
        out.nontrivial[out.component[v]] = true;
  return out;
}

/// Vertices that can reach some vertex in `targets` (including the targets).
inline std::vector<bool> backward_reachable( digraph const& g, std::vector<bool> const& targets )
{
  digraph rev( g.size() );
  for ( std::size_t v = 0; v < g.size(); ++v )
    for ( int w : g[v] )
      rev[w].push_back( static_cast<int>( v ) );

  std::vector<bool> seen = targets;
  std::vector<int> work;
  for ( std::size_t v = 0; v < g.size(); ++v )
    if ( seen[v] )
      work.push_back( static_cast<int>( v ) );
  while ( !work.empty() )
  {
    int v = work.back();
    work.pop_back();
    for ( int u : rev[v] )
      if ( !seen[u] )
      {
        seen[u] = true;
        work.push_back( u );
      }
  }
  return seen;
}

/// Vertices reachable from `source` (including it).
inline std::vector<bool> forward_reachable( digraph const& g, int source )
{
  std::vector<bool> seen( g.size(), false );
  std::vector<int> work{ source };
  seen[source] = true;
  while ( !work.empty() )
  {
    int v = work.back();
    work.pop_back();
    for ( int w : g[v] )
      if ( !seen[w] )
      {
        seen[w] = true;
        work.push_back( w );
      }
  }
  return seen;
}

} // namespace monic
