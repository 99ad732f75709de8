#pragma once

/*!
  \file io.hpp
  \brief Formula, corpus and trace file formats

  Formula/corpus files hold one formula per line; `#` starts a comment and
  blank lines are ignored. A corpus line may end with an annotation
  comment `# @expect: <verdict>` where verdict is one of positive,
  negative, neutral, non, monitorable, non-monitorable.

  Trace files hold one event per line: a comma-separated list of
  proposition names, or `-` for the empty event.
*/

#include "monitorability.hpp"

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace monic
{

namespace detail
{

inline std::string trim( std::string_view s )
{
  auto b = s.find_first_not_of( " \t\r\n" );
  if ( b == std::string_view::npos )
    return {};
  auto e = s.find_last_not_of( " \t\r\n" );
  return std::string( s.substr( b, e - b + 1 ) );
}

/// Splits at the first `#` outside double quotes.
inline std::pair<std::string, std::string> split_comment( std::string const& line )
{
  bool quoted = false;
  for ( std::size_t i = 0; i < line.size(); ++i )
  {
    char c = line[i];
    if ( quoted && c == '\\' )
      ++i;
    else if ( c == '"' )
      quoted = !quoted;
    else if ( c == '#' && !quoted )
      return { line.substr( 0, i ), line.substr( i + 1 ) };
  }
  return { line, {} };
}

} // namespace detail

enum class expectation
{
  positive,
  negative,
  neutral,
  non,
  monitorable,
  non_monitorable,
};

inline std::optional<expectation> expectation_from_string( std::string_view s )
{
  if ( s == "positive" ) return expectation::positive;
  if ( s == "negative" ) return expectation::negative;
  if ( s == "neutral" ) return expectation::neutral;
  if ( s == "non" ) return expectation::non;
  if ( s == "monitorable" ) return expectation::monitorable;
  if ( s == "non-monitorable" ) return expectation::non_monitorable;
  return std::nullopt;
}

inline bool satisfies( monitorability4 m, expectation e )
{
  switch ( e )
  {
  case expectation::positive: return m == monitorability4::positive;
  case expectation::negative: return m == monitorability4::negative;
  case expectation::neutral: return m == monitorability4::neutral;
  case expectation::non:
  case expectation::non_monitorable: return m == monitorability4::non;
  case expectation::monitorable: return m != monitorability4::non;
  }
  return false;
}

struct corpus_entry
{
  std::size_t line = 0;
  std::string text;
  std::optional<expectation> expected;
  std::string expected_text;
};

/*! \brief Reads formula lines; the formulas themselves are not parsed here.

  Throws std::runtime_error on a malformed `@expect` annotation.
*/
inline std::vector<corpus_entry> read_corpus( std::istream& in )
{
  std::vector<corpus_entry> out;
  std::string line;
  for ( std::size_t n = 1; std::getline( in, line ); ++n )
  {
    auto [body, comment] = detail::split_comment( line );
    body = detail::trim( body );
    if ( body.empty() )
      continue;
    corpus_entry e{ n, body, std::nullopt, {} };
    auto c = detail::trim( comment );
    if ( auto at = c.find( "@expect:" ); at != std::string::npos )
    {
      e.expected_text = detail::trim( c.substr( at + 8 ) );
      e.expected = expectation_from_string( e.expected_text );
      if ( !e.expected )
        throw std::runtime_error( "line " + std::to_string( n ) + ": unknown @expect verdict '" + e.expected_text + "'" );
    }
    out.push_back( std::move( e ) );
  }
  return out;
}

/// Parses one trace event ("-" for the empty set); unknown names raise input_error.
inline symbol parse_event( std::string_view text, alphabet const& sigma )
{
  auto t = detail::trim( text );
  if ( t == "-" )
    return {};
  symbol s;
  std::size_t start = 0;
  for ( ;; )
  {
    auto comma = t.find( ',', start );
    auto name = detail::trim( std::string_view( t ).substr( start, comma == std::string::npos ? std::string::npos : comma - start ) );
    if ( name.size() >= 2 && name.front() == '"' && name.back() == '"' )
      name = name.substr( 1, name.size() - 2 );
    if ( name.empty() )
      throw input_error( "empty proposition name in event '" + t + "'" );
    auto i = sigma.index_of( name );
    if ( !i )
      throw input_error( "unknown proposition '" + name + "' in event '" + t + "'" );
    s.bits |= 1u << *i;
    if ( comma == std::string::npos )
      break;
    start = comma + 1;
  }
  return s;
}

inline finite_word read_trace( std::istream& in, alphabet const& sigma )
{
  finite_word out;
  std::string line;
  for ( std::size_t n = 1; std::getline( in, line ); ++n )
  {
    auto body = detail::trim( detail::split_comment( line ).first );
    if ( body.empty() )
      continue;
    try
    {
      out.push_back( parse_event( body, sigma ) );
    }
    catch ( input_error const& e )
    {
      throw input_error( "trace line " + std::to_string( n ) + ": " + e.what() );
    }
  }
  return out;
}

/// Renders an event in trace-file syntax.
inline std::string format_event( symbol s, alphabet const& sigma )
{
  auto names = sigma.names( s );
  if ( names.empty() )
    return "-";
  std::string out;
  for ( auto const& n : names )
    out += ( out.empty() ? "" : "," ) + n;
  return out;
}

} // namespace monic
