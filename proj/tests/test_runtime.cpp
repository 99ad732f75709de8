#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace monic;
using namespace monic::testing;

namespace
{

std::shared_ptr<monitor const> make( std::string const& text )
{
  return std::make_shared<monitor const>( build_monitor( parse( text ) ) );
}

handler_policy const all_policies[] = { handler_policy::both(), handler_policy::satisfaction_only(),
                                        handler_policy::violation_only(), handler_policy{ false, false } };

} // namespace

TEST( Session, OpenExamples )
{
  auto until = open_session( make( "p U q" ), handler_policy::both() );
  EXPECT_EQ( until.status().state, session_state::running );

  auto phi3 = open_session( make( reference_formulas()[2] ), handler_policy::violation_only() );
  EXPECT_EQ( to_string( phi3.status() ), "REMOVABLE(state weakly positively monitorable; no satisfaction handler)" );

  auto t = open_session( make( "true" ), handler_policy::both() );
  EXPECT_EQ( to_string( t.status() ), "CONCLUDED(true)" );

  auto none = open_session( make( "p U q" ), handler_policy{ false, false } );
  EXPECT_EQ( to_string( none.status() ), "REMOVABLE(no handlers registered)" );
}

TEST( Session, StepExamples )
{
  auto m6 = make( reference_formulas()[5] );
  auto s = open_session( m6, handler_policy::both() );
  s.step( symbol{} );
  EXPECT_EQ( to_string( s.status() ), "RUNNING" );
  s.step( m6->sigma().make_symbol( { "b" } ) );
  EXPECT_EQ( to_string( s.status() ), "REMOVABLE(inconclusive state)" );
  EXPECT_THROW( s.step( symbol{} ), session_misuse );

  auto mu = make( "p U q" );
  auto u = open_session( mu, handler_policy::both() );
  auto p = mu->sigma().make_symbol( { "p" } ), q = mu->sigma().make_symbol( { "q" } );
  u.step( p );
  EXPECT_EQ( to_string( u.status() ), "RUNNING" );
  u.step( p );
  EXPECT_EQ( to_string( u.status() ), "RUNNING" );
  u.step( q );
  EXPECT_EQ( to_string( u.status() ), "CONCLUDED(true)" );
  EXPECT_EQ( u.events(), 3u );

  auto g = open_session( make( "G p" ), handler_policy::satisfaction_only() );
  EXPECT_EQ( to_string( g.status() ), "REMOVABLE(state weakly negatively monitorable; no violation handler)" );
}

TEST( Session, StateTracksTransitionFunction )
{
  auto m = make( reference_formulas()[0] );
  std::mt19937 rng( 41 );
  for ( int i = 0; i < 50; ++i )
  {
    auto word = random_word( rng, m->sigma(), 6 );
    auto s = open_session( m, handler_policy::both() );
    finite_word read;
    for ( auto e : word )
    {
      if ( !s.running() )
        break;
      s.step( e );
      read.push_back( e );
      EXPECT_EQ( s.state(), m->run_from( m->initial(), read ) );
      EXPECT_EQ( s.status().state == session_state::concluded, is_final( s.verdict() ) );
    }
  }
}

TEST( RunTrace, Examples )
{
  auto m6 = make( reference_formulas()[5] );
  auto& sg = m6->sigma();
  auto r = run_trace( m6, { symbol{}, sg.make_symbol( { "b" } ), sg.make_symbol( { "r" } ), sg.make_symbol( { "r" } ) },
                      handler_policy::both() );
  ASSERT_TRUE( r.first_removable );
  EXPECT_EQ( *r.first_removable, 2u );
  EXPECT_EQ( r.events_saved, 2u );
  EXPECT_EQ( r.verdicts.size(), 4u );
  EXPECT_EQ( r.verdicts.back(), verdict6::inconclusive );

  auto r1 = run_trace( make( reference_formulas()[0] ), {}, handler_policy::both() );
  EXPECT_EQ( r1.final_status.state, session_state::running );
  EXPECT_FALSE( r1.first_removable );
  EXPECT_EQ( r1.events_saved, 0u );

  auto mf = make( "false" );
  auto rf = run_trace( mf, { symbol{}, symbol{} }, handler_policy::both() );
  EXPECT_EQ( to_string( rf.final_status ), "CONCLUDED(false)" );
  EXPECT_EQ( rf.first_removable, std::optional<std::size_t>( 0 ) );
  EXPECT_EQ( rf.events_saved, 2u );
}

TEST( RunTrace, ReplayIsDeterministic )
{
  auto m = make( reference_formulas()[5] );
  std::mt19937 rng( 43 );
  for ( int i = 0; i < 20; ++i )
  {
    auto w = random_word( rng, m->sigma(), 8 );
    for ( auto p : all_policies )
      EXPECT_EQ( run_trace( m, w, p ), run_trace( m, w, p ) );
  }
}

TEST( Pruning, StatusIsPureFunctionOfOutputAndPolicy )
{
  for ( auto v : all_verdicts )
    for ( auto p : all_policies )
      EXPECT_EQ( evaluate_status( v, p ), evaluate_status( v, p ) );
}

TEST( Pruning, NeutralStatesNeverRemovableWithAHandler )
{
  for ( auto p : all_policies )
    if ( p.on_satisfaction || p.on_violation )
    {
      EXPECT_EQ( evaluate_status( verdict6::possibly_conclusive, p ).state, session_state::running );
    }
}

TEST( Pruning, SoundOnExhaustiveContinuations )
{
  for ( auto const& f : property_formulas() )
  {
    auto m = build_monitor( f );
    for ( std::size_t q = 0; q < m.size(); ++q )
      for ( auto p : all_policies )
      {
        auto st = evaluate_status( m.output( static_cast<int>( q ) ), p );
        if ( st.state != session_state::removable )
          continue;
        bool sat = extension_reaches( m, static_cast<int>( q ), 4, []( verdict6 v ) { return v == verdict6::top; } );
        bool vio = extension_reaches( m, static_cast<int>( q ), 4, []( verdict6 v ) { return v == verdict6::bottom; } );
        EXPECT_FALSE( p.on_satisfaction && sat ) << render_formula( f ) << " state " << q;
        EXPECT_FALSE( p.on_violation && vio ) << render_formula( f ) << " state " << q;
      }
  }
}
