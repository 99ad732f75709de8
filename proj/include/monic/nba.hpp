#pragma once

/*!
  \file nba.hpp
  \brief Nondeterministic Buechi automata from LTL

  Translation is the expand-node tableau over negation normal form, which
  yields a generalized Buechi automaton with one acceptance set per Until
  subformula. A counter construction then reduces it to a single
  acceptance set.
*/

#include "ltl.hpp"
#include "scc.hpp"

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace monic
{

/// A conjunction of literals: `must` propositions hold, `must_not` ones do not.
struct cube
{
  std::uint32_t must = 0;
  std::uint32_t must_not = 0;

  bool matches( symbol s ) const { return ( s.bits & must ) == must && ( s.bits & must_not ) == 0; }
  bool satisfiable() const { return ( must & must_not ) == 0; }
  friend auto operator<=>( cube, cube ) = default;
};

struct nba_edge
{
  cube guard;
  int target;
};

class nba
{
public:
  nba() = default;
  explicit nba( alphabet sigma ) : sigma_( std::move( sigma ) ) {}

  int add_state( bool accepting = false )
  {
    edges_.emplace_back();
    accepting_.push_back( accepting );
    nonempty_.reset();
    return static_cast<int>( edges_.size() - 1 );
  }
  void add_initial( int q ) { initial_.push_back( q ); }
  void add_edge( int from, cube guard, int to )
  {
    edges_.at( from ).push_back( { guard, to } );
    nonempty_.reset();
  }
  void set_accepting( int q, bool acc ) { accepting_.at( q ) = acc; }

  alphabet const& sigma() const { return sigma_; }
  std::size_t size() const { return edges_.size(); }
  std::vector<int> const& initial() const { return initial_; }
  bool accepting( int q ) const { return accepting_[q]; }
  std::vector<nba_edge> const& edges( int q ) const { return edges_[q]; }

  template<class Fn>
  void for_each_successor( int q, symbol s, Fn&& fn ) const
  {
    for ( auto const& e : edges_[q] )
      if ( e.guard.matches( s ) )
        fn( e.target );
  }

  /// Symbol-independent successor graph (edges with satisfiable guards).
  digraph graph() const
  {
    digraph g( size() );
    for ( std::size_t q = 0; q < size(); ++q )
      for ( auto const& e : edges_[q] )
        if ( e.guard.satisfiable() )
          g[q].push_back( e.target );
    return g;
  }

  std::optional<std::vector<bool>> const& nonempty_mark() const { return nonempty_; }
  void set_nonempty_mark( std::vector<bool> mark ) { nonempty_ = std::move( mark ); }

private:
  alphabet sigma_;
  std::vector<int> initial_;
  std::vector<bool> accepting_;
  std::vector<std::vector<nba_edge>> edges_;
  std::optional<std::vector<bool>> nonempty_;
};

namespace detail
{

/// Subformula table of an NNF formula, indexed so children precede parents.
struct closure
{
  struct entry
  {
    op kind;
    int lhs = -1;
    int rhs = -1;
    int prop = -1;        // atom index, for literals
    bool negated = false; // literal !p
  };

  std::vector<entry> items;
  std::map<formula, int, formula_less> ids;

  int intern( formula const& f, alphabet const& sigma )
  {
    if ( auto it = ids.find( f ); it != ids.end() )
      return it->second;
    entry e{ f.kind() };
    switch ( f.kind() )
    {
    case op::tt:
    case op::ff:
      break;
    case op::atom:
      e.prop = static_cast<int>( require( sigma, f.name() ) );
      break;
    case op::not_:
      e.prop = static_cast<int>( require( sigma, f.lhs().name() ) );
      e.negated = true;
      break;
    default:
      e.lhs = intern( f.lhs(), sigma );
      if ( is_binary( f.kind() ) )
        e.rhs = intern( f.rhs(), sigma );
    }
    items.push_back( e );
    int id = static_cast<int>( items.size() - 1 );
    ids.emplace( f, id );
    return id;
  }

  static std::size_t require( alphabet const& sigma, std::string const& name )
  {
    auto i = sigma.index_of( name );
    if ( !i )
      throw std::invalid_argument( "ltl_to_nba: proposition '" + name + "' not in alphabet" );
    return *i;
  }
};

using id_set = std::set<int>;

struct tableau_node
{
  id_set incoming;
  id_set pending; // "new" in the classic presentation
  id_set old;
  id_set next;
};

constexpr int init_id = -1;

} // namespace detail

/*! \brief Translates `f` into an NBA over `sigma` accepting exactly L(f).

  State 0 is the unique initial state. Requires alphabet_of(f) to be
  contained in `sigma`.
*/
inline nba ltl_to_nba( formula const& f, alphabet const& sigma )
{
  using namespace detail;
  closure cl;
  int root = cl.intern( to_nnf( f ), sigma );

  struct final_node
  {
    id_set incoming, old, next;
  };
  std::vector<final_node> done;

  // Generalized acceptance: one set per Until subformula.
  std::vector<std::pair<int, int>> untils; // (id, rhs id)
  for ( std::size_t i = 0; i < cl.items.size(); ++i )
    if ( cl.items[i].kind == op::until )
      untils.emplace_back( static_cast<int>( i ), cl.items[i].rhs );
  auto fulfils = [&]( id_set const& old, std::size_t set ) {
    return !old.count( untils[set].first ) || old.count( untils[set].second );
  };

  // Nodes agreeing on literals, obligations and acceptance are interchangeable.
  using node_key = std::tuple<id_set, id_set, std::vector<bool>>;
  auto key_of = [&]( tableau_node const& n ) {
    id_set lits;
    for ( int o : n.old )
      if ( cl.items[o].kind == op::atom || cl.items[o].kind == op::not_ )
        lits.insert( o );
    std::vector<bool> acc( untils.size() );
    for ( std::size_t i = 0; i < untils.size(); ++i )
      acc[i] = fulfils( n.old, i );
    return node_key{ std::move( lits ), n.next, std::move( acc ) };
  };
  std::map<node_key, int> index;

  std::vector<tableau_node> work;
  work.push_back( { { init_id }, { root }, {}, {} } );

  while ( !work.empty() )
  {
    tableau_node n = std::move( work.back() );
    work.pop_back();

    if ( n.pending.empty() )
    {
      auto key = key_of( n );
      if ( auto it = index.find( key ); it != index.end() )
      {
        done[it->second].incoming.insert( n.incoming.begin(), n.incoming.end() );
        continue;
      }
      int id = static_cast<int>( done.size() );
      index.emplace( key, id );
      done.push_back( { n.incoming, n.old, n.next } );
      work.push_back( { { id }, n.next, {}, {} } );
      continue;
    }

    int eta = *n.pending.rbegin(); // parents before children
    n.pending.erase( eta );
    if ( n.old.count( eta ) )
    {
      work.push_back( std::move( n ) );
      continue;
    }
    auto const& e = cl.items[eta];
    auto add_pending = [&n]( tableau_node& m, int g ) {
      if ( !n.old.count( g ) )
        m.pending.insert( g );
    };

    switch ( e.kind )
    {
    case op::tt:
      n.old.insert( eta );
      work.push_back( std::move( n ) );
      break;
    case op::ff:
      break;
    case op::atom:
    case op::not_:
    {
      bool clash = false;
      for ( int o : n.old )
      {
        auto const& oe = cl.items[o];
        if ( ( oe.kind == op::atom || oe.kind == op::not_ ) && oe.prop == e.prop && oe.negated != e.negated )
          clash = true;
      }
      if ( clash )
        break;
      n.old.insert( eta );
      work.push_back( std::move( n ) );
      break;
    }
    case op::and_:
      add_pending( n, e.lhs );
      add_pending( n, e.rhs );
      n.old.insert( eta );
      work.push_back( std::move( n ) );
      break;
    case op::next:
      n.next.insert( e.lhs );
      n.old.insert( eta );
      work.push_back( std::move( n ) );
      break;
    case op::or_:
    case op::until:
    case op::release:
    {
      tableau_node a = n, b = n;
      a.old.insert( eta );
      b.old.insert( eta );
      if ( e.kind == op::or_ )
      {
        add_pending( a, e.lhs );
        add_pending( b, e.rhs );
      }
      else if ( e.kind == op::until )
      {
        add_pending( a, e.lhs );
        a.next.insert( eta );
        add_pending( b, e.rhs );
      }
      else
      {
        add_pending( a, e.rhs );
        a.next.insert( eta );
        add_pending( b, e.lhs );
        add_pending( b, e.rhs );
      }
      work.push_back( std::move( b ) );
      work.push_back( std::move( a ) );
      break;
    }
    default:
      throw std::logic_error( "ltl_to_nba: formula not in negation normal form" );
    }
  }

  std::size_t const k = done.size();
  std::vector<cube> label( k );
  for ( std::size_t i = 0; i < k; ++i )
    for ( int o : done[i].old )
    {
      auto const& oe = cl.items[o];
      if ( oe.kind == op::atom )
        label[i].must |= 1u << oe.prop;
      else if ( oe.kind == op::not_ )
        label[i].must_not |= 1u << oe.prop;
    }

  // Generalized automaton: state 0 is the initial pseudo-state, node i is i+1.
  std::vector<std::vector<int>> succ( k + 1 );
  for ( std::size_t i = 0; i < k; ++i )
    for ( int from : done[i].incoming )
      succ[from == init_id ? 0 : from + 1].push_back( static_cast<int>( i + 1 ) );

  std::size_t const m = untils.size();
  auto in_set = [&]( std::size_t gstate, std::size_t set ) {
    if ( gstate == 0 )
      return false;
    return fulfils( done[gstate - 1].old, set );
  };

  // Counter degeneralization, reachable part only.
  nba out( sigma );
  std::size_t const levels = std::max<std::size_t>( m, 1 );
  std::map<std::pair<std::size_t, std::size_t>, int> ids;
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  auto get = [&]( std::size_t g, std::size_t level ) {
    auto key = std::make_pair( g, level );
    if ( auto it = ids.find( key ); it != ids.end() )
      return it->second;
    bool acc = g != 0 && ( m == 0 || ( level == 0 && in_set( g, 0 ) ) );
    int q = out.add_state( acc );
    ids.emplace( key, q );
    queue.push_back( key );
    return q;
  };
  out.add_initial( get( 0, 0 ) );
  for ( std::size_t head = 0; head < queue.size(); ++head )
  {
    auto [g, level] = queue[head];
    int from = ids.at( queue[head] );
    std::size_t next_level = ( m > 0 && in_set( g, level ) ) ? ( level + 1 ) % levels : level;
    for ( int t : succ[g] )
      out.add_edge( from, label[t - 1], get( t, next_level ) );
  }
  return out;
}

/*! \brief States from which some accepting run exists.

  A state qualifies iff it reaches a nontrivial SCC containing an accepting
  state.
*/
inline std::vector<bool> nonempty_states( nba const& a )
{
  auto g = a.graph();
  auto scc = tarjan_scc( g );
  std::vector<bool> good_component( scc.count, false );
  for ( std::size_t q = 0; q < a.size(); ++q )
    if ( a.accepting( static_cast<int>( q ) ) && scc.nontrivial[scc.component[q]] )
      good_component[scc.component[q]] = true;
  std::vector<bool> seeds( a.size() );
  for ( std::size_t q = 0; q < a.size(); ++q )
    seeds[q] = good_component[scc.component[q]];
  return backward_reachable( g, seeds );
}

inline nba& mark_nonempty( nba& a )
{
  a.set_nonempty_mark( nonempty_states( a ) );
  return a;
}

/// True iff some run of `a` on the lasso is accepting.
inline bool accepts_lasso( nba const& a, lasso_word const& w )
{
  std::size_t const n = w.positions();
  auto node = [n]( int q, std::size_t k ) { return static_cast<int>( q * n + k ); };
  digraph g( a.size() * n );
  for ( std::size_t q = 0; q < a.size(); ++q )
    for ( std::size_t k = 0; k < n; ++k )
      a.for_each_successor( static_cast<int>( q ), w.at( k ), [&]( int t ) {
        g[node( static_cast<int>( q ), k )].push_back( node( t, w.successor( k ) ) );
      } );

  std::vector<bool> reach( g.size(), false );
  for ( int q0 : a.initial() )
  {
    auto r = forward_reachable( g, node( q0, 0 ) );
    for ( std::size_t v = 0; v < r.size(); ++v )
      reach[v] = reach[v] || r[v];
  }
  auto scc = tarjan_scc( g );
  for ( std::size_t v = 0; v < g.size(); ++v )
    if ( reach[v] && a.accepting( static_cast<int>( v / n ) ) && scc.nontrivial[scc.component[v]] )
      return true;
  return false;
}

} // namespace monic
