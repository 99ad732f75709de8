#pragma once

/*!
  \file monitor.hpp
  \brief Six-valued monitors: refinement, execution and export
*/

#include "automata.hpp"
#include "parser.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace monic
{

/*! \brief Truth values of the six-valued semantics.

  Each value also names the class of prefixes that reach a state with that
  output: good, bad, positive, negative, neutral and ugly respectively.
*/
enum class verdict6 : std::uint8_t
{
  top,                 ///< good prefix
  bottom,              ///< bad prefix
  possibly_true,       ///< positive prefix
  possibly_false,      ///< negative prefix
  possibly_conclusive, ///< neutral prefix
  inconclusive,        ///< ugly prefix
};

inline constexpr verdict6 all_verdicts[] = { verdict6::top,          verdict6::bottom,
                                             verdict6::possibly_true, verdict6::possibly_false,
                                             verdict6::possibly_conclusive, verdict6::inconclusive };

/// Machine-readable spelling used in JSON.
inline char const* to_string( verdict6 v )
{
  switch ( v )
  {
  case verdict6::top: return "true";
  case verdict6::bottom: return "false";
  case verdict6::possibly_true: return "possibly_true";
  case verdict6::possibly_false: return "possibly_false";
  case verdict6::possibly_conclusive: return "possibly_conclusive";
  case verdict6::inconclusive: return "inconclusive";
  }
  return "";
}

inline char const* glyph( verdict6 v )
{
  switch ( v )
  {
  case verdict6::top: return "⊤";
  case verdict6::bottom: return "⊥";
  case verdict6::possibly_true: return "∓";
  case verdict6::possibly_false: return "±";
  case verdict6::possibly_conclusive: return "+";
  case verdict6::inconclusive: return "×";
  }
  return "";
}

/// Name of the prefix class a verdict stands for.
inline char const* prefix_class( verdict6 v )
{
  switch ( v )
  {
  case verdict6::top: return "good";
  case verdict6::bottom: return "bad";
  case verdict6::possibly_true: return "positive";
  case verdict6::possibly_false: return "negative";
  case verdict6::possibly_conclusive: return "neutral";
  case verdict6::inconclusive: return "ugly";
  }
  return "";
}

inline std::optional<verdict6> verdict6_from_string( std::string_view s )
{
  for ( auto v : all_verdicts )
    if ( s == to_string( v ) )
      return v;
  return std::nullopt;
}

/// Swaps the roles of satisfaction and violation.
inline verdict6 dual( verdict6 v )
{
  switch ( v )
  {
  case verdict6::top: return verdict6::bottom;
  case verdict6::bottom: return verdict6::top;
  case verdict6::possibly_true: return verdict6::possibly_false;
  case verdict6::possibly_false: return verdict6::possibly_true;
  default: return v;
  }
}

inline bool is_final( verdict6 v ) { return v == verdict6::top || v == verdict6::bottom; }

/// Raised when input words use symbols outside a monitor's alphabet.
class input_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class monitor
{
public:
  monitor() = default;
  monitor( std::string formula_text, moore_machine<verdict6> m )
      : formula_( std::move( formula_text ) ), m_( std::move( m ) )
  {
    m_.validate();
  }

  std::string const& formula_text() const { return formula_; }
  alphabet const& sigma() const { return m_.sigma; }
  std::size_t size() const { return m_.states; }
  int initial() const { return m_.initial; }
  int next( int q, symbol s ) const { return m_.next( q, s ); }
  verdict6 output( int q ) const { return m_.output.at( q ); }
  std::string name( int q ) const { return "q" + std::to_string( q ); }
  moore_machine<verdict6> const& machine() const { return m_; }
  digraph graph() const { return m_.graph(); }

  bool valid_state( int q ) const { return q >= 0 && static_cast<std::size_t>( q ) < m_.states; }

  /// State reached from `q` on `u`; throws input_error for foreign symbols.
  int run_from( int q, finite_word const& u ) const
  {
    for ( auto s : u )
    {
      if ( !sigma().valid( s ) )
        throw input_error( "symbol with bits " + std::to_string( s.bits ) + " is not a subset of " +
                           sigma().to_string( symbol{ static_cast<std::uint32_t>( sigma().symbol_count() - 1 ) } ) );
      q = m_.next( q, s );
    }
    return q;
  }

private:
  std::string formula_;
  moore_machine<verdict6> m_;
};

/*! \brief Assigns six-valued outputs to a three-valued monitor.

  Two backward reachability passes on the reversed graph, one from the
  top states and one from the bottom states; linear in states x symbols.
*/
inline monitor refine_to_six( fsm3 const& m, std::string formula_text = {} )
{
  auto g = m.graph();
  std::vector<bool> tops( m.states ), bottoms( m.states );
  for ( std::size_t q = 0; q < m.states; ++q )
  {
    tops[q] = m.output[q] == verdict3::top;
    bottoms[q] = m.output[q] == verdict3::bottom;
  }
  auto reaches_top = backward_reachable( g, tops );
  auto reaches_bottom = backward_reachable( g, bottoms );

  moore_machine<verdict6> out;
  out.sigma = m.sigma;
  out.states = m.states;
  out.delta = m.delta;
  out.initial = m.initial;
  out.output.resize( m.states );
  for ( std::size_t q = 0; q < m.states; ++q )
  {
    if ( tops[q] )
      out.output[q] = verdict6::top;
    else if ( bottoms[q] )
      out.output[q] = verdict6::bottom;
    else if ( reaches_top[q] && reaches_bottom[q] )
      out.output[q] = verdict6::possibly_conclusive;
    else if ( reaches_top[q] )
      out.output[q] = verdict6::possibly_true;
    else if ( reaches_bottom[q] )
      out.output[q] = verdict6::possibly_false;
    else
      out.output[q] = verdict6::inconclusive;
  }
  return monitor( std::move( formula_text ), std::move( out ) );
}

/// Full pipeline from a formula to its minimized six-valued monitor.
inline monitor build_monitor( formula const& f, pipeline_stats* stats = nullptr )
{
  return refine_to_six( build_monitor3( f, stats ), render_formula( f ) );
}

inline monitor build_monitor( formula const& f, alphabet const& sigma, pipeline_stats* stats = nullptr )
{
  return refine_to_six( build_monitor3( f, sigma, stats ), render_formula( f ) );
}

/// Output after reading `u` from the initial state; the empty word yields the initial output.
inline verdict6 read_word( monitor const& m, finite_word const& u )
{
  return m.output( m.run_from( m.initial(), u ) );
}

namespace detail
{

/*! \brief A DNF covering exactly `symbols`.

  Prime implicants by repeated merging of cubes that differ in one literal,
  then a greedy cover in a fixed order.
*/
inline std::vector<cube> cover( std::vector<symbol> const& symbols, std::size_t props )
{
  std::uint32_t const full = props == 32 ? ~0u : ( ( 1u << props ) - 1 );
  std::set<cube> current;
  for ( auto s : symbols )
    current.insert( cube{ s.bits, ~s.bits & full } );

  std::vector<cube> primes;
  while ( !current.empty() )
  {
    std::set<cube> merged, used;
    for ( auto a = current.begin(); a != current.end(); ++a )
      for ( auto b = std::next( a ); b != current.end(); ++b )
      {
        if ( ( a->must | a->must_not ) != ( b->must | b->must_not ) )
          continue;
        std::uint32_t diff = a->must ^ b->must;
        if ( diff == 0 || ( diff & ( diff - 1 ) ) != 0 )
          continue;
        merged.insert( cube{ a->must & ~diff, a->must_not & ~diff } );
        used.insert( *a );
        used.insert( *b );
      }
    for ( auto const& c : current )
      if ( !used.count( c ) )
        primes.push_back( c );
    current = std::move( merged );
  }

  auto literals = []( cube c ) { return std::popcount( c.must | c.must_not ); };
  std::stable_sort( primes.begin(), primes.end(), [&]( cube a, cube b ) {
    if ( literals( a ) != literals( b ) )
      return literals( a ) < literals( b );
    return a < b;
  } );

  std::set<std::uint32_t> uncovered;
  for ( auto s : symbols )
    uncovered.insert( s.bits );
  std::vector<cube> chosen;
  while ( !uncovered.empty() )
  {
    std::size_t best = 0, best_gain = 0;
    for ( std::size_t i = 0; i < primes.size(); ++i )
    {
      std::size_t gain = 0;
      for ( auto b : uncovered )
        gain += primes[i].matches( symbol{ b } );
      if ( gain > best_gain )
      {
        best = i;
        best_gain = gain;
      }
    }
    if ( best_gain == 0 )
      throw std::logic_error( "cover: prime implicants do not cover the symbol set" );
    chosen.push_back( primes[best] );
    for ( auto it = uncovered.begin(); it != uncovered.end(); )
      it = primes[best].matches( symbol{ *it } ) ? uncovered.erase( it ) : std::next( it );
  }
  std::sort( chosen.begin(), chosen.end(), [&]( cube a, cube b ) {
    if ( literals( a ) != literals( b ) )
      return literals( a ) < literals( b );
    return a < b;
  } );
  return chosen;
}

inline std::string cube_to_string( cube c, alphabet const& sigma )
{
  std::string out;
  for ( std::size_t i = 0; i < sigma.size(); ++i )
  {
    bool pos = ( c.must >> i ) & 1u, neg = ( c.must_not >> i ) & 1u;
    if ( !pos && !neg )
      continue;
    if ( !out.empty() )
      out += " && ";
    out += ( neg ? "!" : "" ) + render_atom( sigma[i] );
  }
  return out.empty() ? "true" : out;
}

inline std::string dnf_label( std::vector<symbol> const& symbols, alphabet const& sigma )
{
  auto cubes = cover( symbols, sigma.size() );
  if ( cubes.size() == 1 )
    return cube_to_string( cubes[0], sigma );
  std::string out;
  for ( auto const& c : cubes )
  {
    if ( !out.empty() )
      out += " || ";
    auto lit = cube_to_string( c, sigma );
    out += std::popcount( c.must | c.must_not ) > 1 ? "(" + lit + ")" : lit;
  }
  return out;
}

struct grouped_edge
{
  int from, to;
  std::vector<symbol> symbols;
};

/// Outgoing symbols grouped by (source, target), sorted by source then target.
inline std::vector<grouped_edge> group_edges( monitor const& m )
{
  std::vector<grouped_edge> out;
  auto order = m.sigma().ordered_symbols();
  for ( std::size_t q = 0; q < m.size(); ++q )
  {
    std::map<int, std::vector<symbol>> by_target;
    for ( auto s : order )
      by_target[m.next( static_cast<int>( q ), s )].push_back( s );
    for ( auto& [t, syms] : by_target )
      out.push_back( { static_cast<int>( q ), t, std::move( syms ) } );
  }
  return out;
}

inline std::string dot_escape( std::string const& s )
{
  std::string out;
  for ( char c : s )
  {
    if ( c == '"' || c == '\\' )
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace detail

enum class render_format
{
  dot,
  json,
};

/// Propositional DNF describing the symbols leading from `from` to `to` ("" if none).
inline std::string edge_label( monitor const& m, int from, int to )
{
  for ( auto const& e : detail::group_edges( m ) )
    if ( e.from == from && e.to == to )
      return detail::dnf_label( e.symbols, m.sigma() );
  return {};
}

inline nlohmann::ordered_json monitor_to_json( monitor const& m )
{
  nlohmann::ordered_json j;
  j["formula"] = m.formula_text();
  j["alphabet"] = m.sigma().propositions();
  auto states = nlohmann::ordered_json::array();
  for ( std::size_t q = 0; q < m.size(); ++q )
  {
    nlohmann::ordered_json s;
    s["id"] = q;
    s["name"] = m.name( static_cast<int>( q ) );
    s["output"] = to_string( m.output( static_cast<int>( q ) ) );
    s["initial"] = static_cast<int>( q ) == m.initial();
    states.push_back( std::move( s ) );
  }
  j["states"] = std::move( states );
  auto transitions = nlohmann::ordered_json::array();
  for ( auto const& e : detail::group_edges( m ) )
  {
    nlohmann::ordered_json t;
    t["from"] = e.from;
    t["to"] = e.to;
    t["label"] = detail::dnf_label( e.symbols, m.sigma() );
    auto syms = nlohmann::ordered_json::array();
    for ( auto s : e.symbols )
      syms.push_back( m.sigma().names( s ) );
    t["symbols"] = std::move( syms );
    transitions.push_back( std::move( t ) );
  }
  j["transitions"] = std::move( transitions );
  return j;
}

inline std::string render_monitor( monitor const& m, render_format fmt )
{
  if ( fmt == render_format::json )
    return monitor_to_json( m ).dump( 2 ) + "\n";

  std::ostringstream os;
  os << "digraph monitor {\n";
  os << "  rankdir=LR;\n";
  os << "  label=\"" << detail::dot_escape( m.formula_text() ) << "\";\n";
  os << "  node [shape=circle];\n";
  os << "  __start [shape=point, label=\"\"];\n";
  for ( std::size_t q = 0; q < m.size(); ++q )
  {
    auto v = m.output( static_cast<int>( q ) );
    os << "  " << m.name( static_cast<int>( q ) ) << " [label=\"" << m.name( static_cast<int>( q ) ) << " / "
       << glyph( v ) << "\"" << ( is_final( v ) ? ", shape=doublecircle" : "" ) << "];\n";
  }
  os << "  __start -> " << m.name( m.initial() ) << ";\n";
  for ( auto const& e : detail::group_edges( m ) )
    os << "  " << m.name( e.from ) << " -> " << m.name( e.to ) << " [label=\""
       << detail::dot_escape( detail::dnf_label( e.symbols, m.sigma() ) ) << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace monic
