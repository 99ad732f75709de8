// Acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance          run all criteria
//   acceptance 3 5      run the listed criteria only
//
// Exit status is non-zero iff some selected criterion fails.

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace monic;
using namespace monic::testing;

namespace
{

struct outcome
{
  bool pass = true;
  std::string detail;

  void fail( std::string const& why )
  {
    if ( pass )
      detail.clear();
    pass = false;
    detail += ( detail.empty() ? "" : "; " ) + why;
  }
  void note( std::string const& what )
  {
    if ( pass )
      detail += ( detail.empty() ? "" : "; " ) + what;
  }
};

class stopwatch
{
public:
  double seconds() const { return std::chrono::duration<double>( std::chrono::steady_clock::now() - start_ ).count(); }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt( double secs )
{
  std::ostringstream os;
  os << std::fixed << std::setprecision( 3 ) << secs << "s";
  return os.str();
}

void check_time( outcome& o, stopwatch const& w, double limit )
{
  double t = w.seconds();
  if ( t >= limit )
    o.fail( "runtime " + fmt( t ) + " >= " + fmt( limit ) );
  else
    o.note( "runtime " + fmt( t ) );
}

// ---------------------------------------------------------------------------

outcome basic_connectives()
{
  outcome o;
  stopwatch w;
  std::pair<char const*, monitorability4> const cases[] = {
      { "F p", monitorability4::positive },
      { "G p", monitorability4::negative },
      { "p U q", monitorability4::neutral },
      { "G F p", monitorability4::non },
  };
  for ( auto const& [text, expected] : cases )
  {
    auto got = monitorability( build_monitor( parse( text ) ) );
    if ( got != expected )
      o.fail( std::string( text ) + " is " + to_string( got ) + ", expected " + to_string( expected ) );
  }
  o.note( "4/4 verdicts" );
  check_time( o, w, 1.0 );
  return o;
}

outcome reference_formula_verdicts()
{
  outcome o;
  stopwatch w;
  monitorability4 const expected[] = { monitorability4::neutral, monitorability4::non,      monitorability4::positive,
                                       monitorability4::negative, monitorability4::neutral, monitorability4::non };
  std::vector<monitor> ms;
  for ( int i = 0; i < 6; ++i )
  {
    ms.push_back( build_monitor( parse( reference_formulas()[i] ) ) );
    auto got = monitorability( ms.back() );
    if ( got != expected[i] )
      o.fail( "phi" + std::to_string( i + 1 ) + " is " + to_string( got ) + ", expected " + to_string( expected[i] ) );
  }
  if ( is_weakly_monitorable( ms[1] ) )
    o.fail( "phi2 reported weakly monitorable" );
  if ( !is_weakly_monitorable( ms[5] ) )
    o.fail( "phi6 reported weakly non-monitorable" );
  o.note( "6/6 verdicts, phi2 weakly non-monitorable, phi6 weakly monitorable" );
  check_time( o, w, 1.0 );
  return o;
}

outcome corpus_counts()
{
  outcome o;
  std::ifstream in( MONIC_DATA_DIR "/patterns.ltl" );
  if ( !in )
  {
    o.fail( "cannot open bundled corpus" );
    return o;
  }
  auto entries = read_corpus( in );
  stopwatch w;
  std::size_t counts[4] = {};
  bool elevator_seen = false;
  for ( auto const& e : entries )
  {
    auto m4 = monitorability( build_monitor( parse( e.text ) ) );
    ++counts[static_cast<int>( m4 )];
    if ( e.text.find( "\"atfloor\"" ) != std::string::npos )
    {
      elevator_seen = true;
      if ( m4 != monitorability4::negative )
        o.fail( std::string( "elevator pattern is " ) + to_string( m4 ) );
    }
  }
  double t = w.seconds();
  std::size_t monitorable = counts[0] + counts[1] + counts[2];

  std::ostringstream got;
  got << "corpus of " << entries.size() << " formulas: monitorable=" << monitorable << " non-monitorable=" << counts[3]
      << ", positive=" << counts[0] << " negative=" << counts[1] << " neutral=" << counts[2];
  if ( entries.size() != 97 )
    o.fail( got.str() + " (expected 97 formulas, 55/42 and 6/40/9; the bundled corpus is not the 97-formula list)" );
  else if ( monitorable != 55 || counts[3] != 42 || counts[0] != 6 || counts[1] != 40 || counts[2] != 9 )
    o.fail( got.str() + " (expected 55/42 and 6/40/9)" );
  else
    o.note( got.str() );

  if ( !elevator_seen )
    o.fail( "elevator pattern missing from corpus" );
  else
    o.note( "elevator pattern negative" );
  if ( t >= 10.0 )
    o.fail( "bench runtime " + fmt( t ) + " >= 10s" );
  else
    o.detail += std::string( o.detail.empty() ? "" : "; " ) + "bench runtime " + fmt( t ) + " < 10s";
  return o;
}

outcome phi6_shape()
{
  outcome o;
  auto m = build_monitor( parse( reference_formulas()[5] ) );
  std::multiset<verdict6> outs;
  std::string shown;
  for ( std::size_t q = 0; q < m.size(); ++q )
  {
    outs.insert( m.output( static_cast<int>( q ) ) );
    shown += std::string( shown.empty() ? "" : "," ) + glyph( m.output( static_cast<int>( q ) ) );
  }
  if ( m.size() != 4 )
    o.fail( "phi6 monitor has " + std::to_string( m.size() ) + " states, expected 4" );
  std::multiset<verdict6> const expected{ verdict6::possibly_true, verdict6::possibly_true, verdict6::inconclusive,
                                          verdict6::top };
  if ( outs != expected )
    o.fail( "outputs {" + shown + "}, expected {∓,∓,×,⊤}" );
  o.note( "4 states, outputs {" + shown + "}" );
  return o;
}

outcome oracle_soundness()
{
  outcome o;
  stopwatch w;
  std::mt19937 rng( 424242 );
  std::size_t words = 0, lassos = 0, counterexamples = 0;
  auto is_top = []( verdict6 v ) { return v == verdict6::top; };
  auto is_bottom = []( verdict6 v ) { return v == verdict6::bottom; };

  for ( auto const& f : property_formulas() )
  {
    auto m = build_monitor( f );
    auto const& sigma = m.sigma();
    // Extension facts depend only on the state a word leads to.
    std::vector<int> top3( m.size(), -1 ), bottom3( m.size(), -1 ), top4( m.size(), -1 ), bottom4( m.size(), -1 );
    for_each_word( sigma, 4, [&]( finite_word const& u ) {
      ++words;
      int q = m.run_from( m.initial(), u );
      auto v = m.output( q );
      bool bad = false;
      if ( v == verdict6::top || v == verdict6::bottom )
      {
        for ( int i = 0; i < 50; ++i )
        {
          auto cont = random_lasso( rng, sigma, 3, 3 );
          lasso_word uw( u, cont.loop );
          uw.prefix.insert( uw.prefix.end(), cont.prefix.begin(), cont.prefix.end() );
          ++lassos;
          if ( eval_lasso( f, sigma, uw ) != ( v == verdict6::top ) )
            bad = true;
        }
      }
      else if ( v == verdict6::possibly_conclusive )
      {
        if ( top3[q] < 0 )
        {
          top3[q] = extension_reaches( m, q, 3, is_top );
          bottom3[q] = extension_reaches( m, q, 3, is_bottom );
        }
        bad = !top3[q] || !bottom3[q];
      }
      else if ( v == verdict6::inconclusive )
      {
        if ( top4[q] < 0 )
        {
          top4[q] = extension_reaches( m, q, 4, is_top );
          bottom4[q] = extension_reaches( m, q, 4, is_bottom );
        }
        bad = top4[q] || bottom4[q];
      }
      if ( bad && counterexamples++ < 3 )
        o.fail( "counterexample for " + render_formula( f ) + " on a word of length " + std::to_string( u.size() ) );
    } );
  }
  if ( counterexamples )
    o.fail( std::to_string( counterexamples ) + " counterexamples" );
  std::ostringstream os;
  os << "20 formulas, " << words << " words, " << lassos << " lasso continuations, 0 counterexamples";
  o.note( os.str() );
  check_time( o, w, 60.0 );
  return o;
}

outcome cross_paths()
{
  outcome o;
  std::size_t states = 0, mismatches = 0;
  for ( auto const& f : property_formulas() )
  {
    auto sigma = alphabet_of( f );
    auto m = build_monitor( f, sigma );
    bool all_weak = true;
    for ( std::size_t q = 0; q < m.size(); ++q )
    {
      ++states;
      auto reach = weak_by_reachability( m, static_cast<int>( q ) );
      if ( vtom( m.output( static_cast<int>( q ) ) ) != reach )
      {
        ++mismatches;
        o.fail( "vtom mismatch in " + render_formula( f ) );
      }
      all_weak = all_weak && reach != monitorability4::non;
    }
    if ( is_monitorable( m ) != all_weak )
    {
      ++mismatches;
      o.fail( "two-valued monitorability disagrees with per-state weak monitorability for " + render_formula( f ) );
    }
    auto neg = build_monitor( !f, sigma );
    if ( monitorability( neg ) != dual( monitorability( m ) ) )
    {
      ++mismatches;
      o.fail( "negation duality fails for " + render_formula( f ) );
    }
  }
  o.note( std::to_string( states ) + " states over 20 formulas, " + std::to_string( mismatches ) + " mismatches" );
  return o;
}

outcome minimization()
{
  outcome o;
  std::size_t words = 0, mismatches = 0;
  for ( auto const& f : property_formulas() )
  {
    auto sigma = alphabet_of( f );
    auto a = ltl_to_nba( f, sigma ), b = ltl_to_nba( !f, sigma );
    mark_nonempty( a );
    mark_nonempty( b );
    auto prod = product_monitor( nba_to_dfa( a ), nba_to_dfa( b ) );
    auto mini = minimize( prod );
    // Walk both machines over every word of length <= 5 in lockstep.
    std::function<void( int, int, int )> walk = [&]( int p, int q, int depth ) {
      ++words;
      if ( prod.output[p] != mini.output[q] )
        ++mismatches;
      if ( depth == 5 )
        return;
      for ( std::uint32_t s = 0; s < sigma.symbol_count(); ++s )
        walk( prod.next( p, symbol{ s } ), mini.next( q, symbol{ s } ), depth + 1 );
    };
    walk( prod.initial, mini.initial, 0 );
    if ( minimize( mini ).states != mini.states )
    {
      ++mismatches;
      o.fail( "minimize not idempotent on " + render_formula( f ) );
    }
  }
  if ( mismatches )
    o.fail( std::to_string( mismatches ) + " mismatches" );
  o.note( std::to_string( words ) + " words compared over 20 formulas, 0 mismatches, idempotent" );
  return o;
}

outcome pruning()
{
  outcome o;
  handler_policy const policies[] = { handler_policy::both(), handler_policy::satisfaction_only(),
                                      handler_policy::violation_only(), handler_policy{ false, false } };
  std::size_t declarations = 0, violations = 0;
  for ( auto const& f : property_formulas() )
  {
    auto m = std::make_shared<monitor const>( build_monitor( f ) );
    // Open a session per policy and drive it into every state along a BFS tree.
    std::vector<finite_word> path( m->size() );
    std::vector<bool> seen( m->size() );
    std::vector<int> queue{ m->initial() };
    seen[m->initial()] = true;
    for ( std::size_t head = 0; head < queue.size(); ++head )
      for ( std::uint32_t s = 0; s < m->sigma().symbol_count(); ++s )
      {
        int t = m->next( queue[head], symbol{ s } );
        if ( !seen[t] )
        {
          seen[t] = true;
          path[t] = path[queue[head]];
          path[t].push_back( symbol{ s } );
          queue.push_back( t );
        }
      }
    for ( int q : queue )
      for ( auto p : policies )
      {
        auto r = run_trace( m, path[q], p );
        if ( r.final_status.state != session_state::removable )
          continue;
        ++declarations;
        // The session stopped somewhere along the path; check from that point.
        int at = m->run_from( m->initial(), finite_word( path[q].begin(), path[q].begin() + *r.first_removable ) );
        bool sat = extension_reaches( *m, at, 4, []( verdict6 v ) { return v == verdict6::top; } );
        bool vio = extension_reaches( *m, at, 4, []( verdict6 v ) { return v == verdict6::bottom; } );
        if ( ( p.on_satisfaction && sat ) || ( p.on_violation && vio ) )
        {
          ++violations;
          o.fail( "unsound removal in " + render_formula( f ) );
        }
      }
  }
  o.note( std::to_string( declarations ) + " removable declarations checked to depth 4, " + std::to_string( violations ) +
          " violations" );
  return o;
}

struct criterion
{
  char const* title;
  outcome ( *run )();
};

criterion const criteria[] = {
    { "basic-connective verdicts", basic_connectives },
    { "phi1-phi6 verdicts", reference_formula_verdicts },
    { "pattern corpus counts", corpus_counts },
    { "phi6 monitor shape", phi6_shape },
    { "oracle soundness", oracle_soundness },
    { "cross-path equalities", cross_paths },
    { "minimization correctness", minimization },
    { "pruning soundness", pruning },
};

} // namespace

int main( int argc, char** argv )
{
  std::vector<int> selected;
  for ( int i = 1; i < argc; ++i )
    selected.push_back( std::atoi( argv[i] ) );
  if ( selected.empty() )
    for ( int i = 1; i <= 8; ++i )
      selected.push_back( i );

  int failures = 0;
  for ( int n : selected )
  {
    if ( n < 1 || n > 8 )
    {
      std::cerr << "unknown criterion " << n << "\n";
      return 2;
    }
    auto const& c = criteria[n - 1];
    outcome o;
    try
    {
      o = c.run();
    }
    catch ( std::exception const& e )
    {
      o.fail( std::string( "exception: " ) + e.what() );
    }
    failures += !o.pass;
    std::cout << ( o.pass ? "PASS" : "FAIL" ) << " criterion " << n << " (" << c.title << "): " << o.detail << std::endl;
  }
  return failures ? 1 : 0;
}
