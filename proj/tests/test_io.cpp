#include <monic/monic.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace monic;

TEST( Corpus, ReadsFormulasAndAnnotations )
{
  std::istringstream in( "# header\n"
                         "\n"
                         "F p   # @expect: positive\n"
                         "\"a#b\" U q\n"
                         "G F p # plain comment\n"
                         "p # @expect: non-monitorable\n" );
  auto entries = read_corpus( in );
  ASSERT_EQ( entries.size(), 4u );
  EXPECT_EQ( entries[0].line, 3u );
  EXPECT_EQ( entries[0].text, "F p" );
  EXPECT_EQ( entries[0].expected, expectation::positive );
  EXPECT_EQ( entries[1].text, "\"a#b\" U q" );
  EXPECT_FALSE( entries[1].expected );
  EXPECT_FALSE( entries[2].expected );
  EXPECT_EQ( entries[3].expected, expectation::non_monitorable );
}

TEST( Corpus, RejectsUnknownAnnotation )
{
  std::istringstream in( "F p # @expect: maybe\n" );
  EXPECT_THROW( read_corpus( in ), std::runtime_error );
}

TEST( Corpus, ExpectationMatching )
{
  EXPECT_TRUE( satisfies( monitorability4::neutral, expectation::monitorable ) );
  EXPECT_FALSE( satisfies( monitorability4::non, expectation::monitorable ) );
  EXPECT_TRUE( satisfies( monitorability4::non, expectation::non ) );
  EXPECT_FALSE( satisfies( monitorability4::positive, expectation::negative ) );
}

TEST( Trace, Events )
{
  alphabet a( { "p", "q", "call" } );
  EXPECT_EQ( parse_event( "-", a ), symbol{} );
  EXPECT_EQ( parse_event( " p , q ", a ), a.make_symbol( { "p", "q" } ) );
  EXPECT_EQ( parse_event( "\"call\"", a ), a.make_symbol( { "call" } ) );
  EXPECT_THROW( parse_event( "z", a ), input_error );
  EXPECT_THROW( parse_event( "p,", a ), input_error );
  EXPECT_EQ( format_event( a.make_symbol( { "q", "p" } ), a ), "p,q" );
  EXPECT_EQ( format_event( symbol{}, a ), "-" );
}

TEST( Trace, File )
{
  alphabet a( { "b", "r" } );
  std::istringstream in( "# trace\n-\nb\n\nr   # note\nr,b\n" );
  auto w = read_trace( in, a );
  ASSERT_EQ( w.size(), 4u );
  EXPECT_EQ( w[0], symbol{} );
  EXPECT_EQ( w[3], a.make_symbol( { "b", "r" } ) );

  std::istringstream bad( "b\nx\n" );
  try
  {
    read_trace( bad, a );
    FAIL();
  }
  catch ( input_error const& e )
  {
    EXPECT_NE( std::string( e.what() ).find( "trace line 2" ), std::string::npos );
  }
}

TEST( BundledCorpus, EveryLineParses )
{
  std::ifstream in( MONIC_DATA_DIR "/patterns.ltl" );
  ASSERT_TRUE( in );
  auto entries = read_corpus( in );
  EXPECT_EQ( entries.size(), 56u );
  for ( auto const& e : entries )
    EXPECT_NO_THROW( parse( e.text ) ) << "line " << e.line;
}
