// monic: command-line front end.
//
//   monic analyze <formula> [--json] [--stages]
//   monic monitor <formula> [--format dot|json] [--out FILE]
//   monic run <formula> <tracefile> [--policy both|sat-only|vio-only] [--json]
//   monic bench <corpus> [--summary] [--csv FILE] [--jobs N]
//
// Exit codes: 0 ok, 1 expectation mismatch, 2 parse error, 3 internal
// error, 4 I/O error, 5 corpus lines skipped.

#include <monic/monic.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <cstring>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace monic;
using json = nlohmann::ordered_json;

namespace
{

enum exit_code : int
{
  ok = 0,
  mismatch = 1,
  parse_failure = 2,
  internal_failure = 3,
  io_failure = 4,
  partial_corpus = 5,
};

struct io_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string seconds( double s )
{
  std::ostringstream os;
  os.imbue( std::locale::classic() );
  os << std::fixed << std::setprecision( 3 ) << s;
  return os.str();
}

char const* two_valued( bool monitorable ) { return monitorable ? "monitorable" : "non-monitorable"; }

std::vector<std::pair<char const*, handler_policy>> const& named_policies()
{
  static std::vector<std::pair<char const*, handler_policy>> const p = {
      { "both", handler_policy::both() },
      { "sat-only", handler_policy::satisfaction_only() },
      { "vio-only", handler_policy::violation_only() },
      { "none", handler_policy{ false, false } },
  };
  return p;
}

std::vector<std::string> removable_for( verdict6 v )
{
  std::vector<std::string> out;
  for ( auto const& [name, p] : named_policies() )
    if ( evaluate_status( v, p ).state == session_state::removable )
      out.emplace_back( name );
  return out;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze( std::string const& text, bool as_json, bool stages )
{
  auto f = parse( text );
  pipeline_stats st;
  auto m = build_monitor( f, &st );
  auto m4 = monitorability( m );

  if ( as_json )
  {
    json j;
    j["formula"] = m.formula_text();
    j["alphabet"] = m.sigma().propositions();
    j["monitorability"] = short_name( m4 );
    j["monitorable"] = is_monitorable( m );
    j["weakly_monitorable"] = is_weakly_monitorable( m );
    j["size"] = m.size();
    auto states = json::array();
    for ( std::size_t q = 0; q < m.size(); ++q )
    {
      int s = static_cast<int>( q );
      json r;
      r["id"] = q;
      r["name"] = m.name( s );
      r["output"] = to_string( m.output( s ) );
      r["initial"] = s == m.initial();
      r["weak"] = short_name( state_weak_monitorability( m, s ) );
      r["strong"] = short_name( state_strong_monitorability( m, s ) );
      r["removable_for"] = removable_for( m.output( s ) );
      states.push_back( std::move( r ) );
    }
    j["states"] = std::move( states );
    if ( stages )
      j["stages"] = { { "nba_pos", st.nba_pos }, { "nba_neg", st.nba_neg }, { "dfa_pos", st.dfa_pos },
                      { "dfa_neg", st.dfa_neg }, { "product", st.product }, { "minimized", st.minimized } };
    std::cout << j.dump( 2 ) << "\n";
    return ok;
  }

  std::cout << "formula:        " << m.formula_text() << "\n";
  std::cout << "alphabet:       " << m.sigma().to_string( symbol{ static_cast<std::uint32_t>( m.sigma().symbol_count() - 1 ) } )
            << "\n";
  std::cout << "monitorability: " << to_string( m4 ) << "\n";
  std::cout << "two-valued:     " << two_valued( is_monitorable( m ) ) << "\n";
  std::cout << "weak:           " << ( is_weakly_monitorable( m ) ? "weakly monitorable" : "weakly non-monitorable" ) << "\n";
  std::cout << "states:         " << m.size() << "\n";
  if ( stages )
    std::cout << "stages:         nba " << st.nba_pos << "/" << st.nba_neg << ", dfa " << st.dfa_pos << "/" << st.dfa_neg
              << ", product " << st.product << ", minimized " << st.minimized << "\n";
  std::cout << "\n";
  std::cout << std::left << std::setw( 7 ) << "state" << std::setw( 22 ) << "output" << std::setw( 10 ) << "weak"
            << std::setw( 10 ) << "strong"
            << "removable for\n";
  for ( std::size_t q = 0; q < m.size(); ++q )
  {
    int s = static_cast<int>( q );
    auto v = m.output( s );
    std::string name = m.name( s ) + ( s == m.initial() ? "*" : "" );
    std::string rem;
    for ( auto const& p : removable_for( v ) )
      rem += ( rem.empty() ? "" : "," ) + p;
    // a glyph occupies one column but several bytes, so pad by hand
    std::string pad( 20 - std::strlen( to_string( v ) ), ' ' );
    std::cout << std::left << std::setw( 7 ) << name << glyph( v ) << " " << to_string( v ) << pad << std::setw( 10 )
              << short_name( state_weak_monitorability( m, s ) ) << std::setw( 10 )
              << short_name( state_strong_monitorability( m, s ) ) << ( rem.empty() ? "-" : rem ) << "\n";
  }
  return ok;
}

// ---------------------------------------------------------------- monitor

int cmd_monitor( std::string const& text, std::string const& format, std::string const& out )
{
  auto m = build_monitor( parse( text ) );
  auto rendered = render_monitor( m, format == "json" ? render_format::json : render_format::dot );
  if ( out.empty() || out == "-" )
  {
    std::cout << rendered;
    return ok;
  }
  std::ofstream file( out, std::ios::binary );
  file << rendered;
  file.close();
  if ( !file )
    throw io_error( "cannot write '" + out + "'" );
  return ok;
}

// ---------------------------------------------------------------- run

int cmd_run( std::string const& text, std::string const& trace_path, std::string const& policy_name, bool as_json )
{
  auto m = std::make_shared<monitor const>( build_monitor( parse( text ) ) );
  handler_policy policy;
  for ( auto const& [name, p] : named_policies() )
    if ( policy_name == name )
      policy = p;

  std::ifstream in( trace_path );
  if ( !in )
    throw io_error( "cannot read trace '" + trace_path + "'" );
  finite_word trace;
  try
  {
    trace = read_trace( in, m->sigma() );
  }
  catch ( input_error const& e )
  {
    throw io_error( trace_path + ": " + e.what() );
  }

  auto r = run_trace( m, trace, policy );
  auto current = trace.empty() ? m->output( m->initial() ) : r.verdicts.back();

  if ( as_json )
  {
    json j;
    j["formula"] = m->formula_text();
    j["policy"] = policy_name;
    auto events = json::array();
    for ( std::size_t i = 0; i < trace.size(); ++i )
      events.push_back( { { "index", i + 1 }, { "event", m->sigma().names( trace[i] ) }, { "verdict", to_string( r.verdicts[i] ) } } );
    j["events"] = std::move( events );
    j["verdict"] = to_string( current );
    j["status"] = to_string( r.final_status );
    j["first_removable"] = r.first_removable ? json( *r.first_removable ) : json( nullptr );
    j["events_saved"] = r.events_saved;
    std::cout << j.dump( 2 ) << "\n";
    return ok;
  }

  for ( std::size_t i = 0; i < trace.size(); ++i )
  {
    bool stopped = r.first_removable && i + 1 > *r.first_removable;
    std::cout << std::right << std::setw( 4 ) << i + 1 << "  " << std::left << std::setw( 12 )
              << format_event( trace[i], m->sigma() ) << glyph( r.verdicts[i] ) << " " << to_string( r.verdicts[i] )
              << ( stopped ? "  (after stop)" : "" ) << "\n";
  }
  std::cout << "verdict:         " << glyph( current ) << " " << to_string( current ) << "\n";
  std::cout << "status:          " << to_string( r.final_status ) << "\n";
  std::cout << "first-removable: " << ( r.first_removable ? std::to_string( *r.first_removable ) : "none" ) << "\n";
  std::cout << "events-saved:    " << r.events_saved << "\n";
  return ok;
}

// ---------------------------------------------------------------- bench

struct bench_row
{
  corpus_entry entry;
  bool analyzed = false;
  std::string error;
  int error_code = ok;
  monitorability4 m4 = monitorability4::non;
  std::size_t states = 0;
  double secs = 0;
};

void analyze_row( bench_row& row )
{
  auto start = std::chrono::steady_clock::now();
  try
  {
    auto m = build_monitor( parse( row.entry.text ) );
    row.m4 = monitorability( m );
    row.states = m.size();
    row.analyzed = true;
  }
  catch ( syntax_error const& e )
  {
    row.error = e.what();
    row.error_code = parse_failure;
  }
  catch ( std::exception const& e )
  {
    row.error = e.what();
    row.error_code = internal_failure;
  }
  row.secs = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
}

int cmd_bench( std::string const& path, bool summary_only, std::string const& csv_path, unsigned jobs )
{
  std::ifstream in( path );
  if ( !in )
    throw io_error( "cannot read corpus '" + path + "'" );
  std::vector<corpus_entry> entries;
  try
  {
    entries = read_corpus( in );
  }
  catch ( std::runtime_error const& e )
  {
    throw io_error( path + ": " + e.what() );
  }

  std::vector<bench_row> rows( entries.size() );
  for ( std::size_t i = 0; i < entries.size(); ++i )
    rows[i].entry = std::move( entries[i] );

  auto start = std::chrono::steady_clock::now();
  if ( jobs == 0 )
    jobs = std::max( 1u, std::thread::hardware_concurrency() );
  std::atomic<std::size_t> next{ 0 };
  auto worker = [&] {
    for ( std::size_t i; ( i = next++ ) < rows.size(); )
      analyze_row( rows[i] );
  };
  std::vector<std::thread> pool;
  for ( unsigned t = 1; t < jobs; ++t )
    pool.emplace_back( worker );
  worker();
  for ( auto& t : pool )
    t.join();
  double total = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();

  std::size_t counts[4] = {}, skipped = 0, checked = 0, mismatched = 0;
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    auto const& r = rows[i];
    if ( !r.analyzed )
    {
      ++skipped;
      std::cerr << path << ":" << r.entry.line << ": skipped: " << r.error << "\n";
      continue;
    }
    ++counts[static_cast<int>( r.m4 )];
    bool bad = false;
    if ( r.entry.expected )
    {
      ++checked;
      bad = !satisfies( r.m4, *r.entry.expected );
      mismatched += bad;
    }
    if ( !summary_only || bad )
      std::cout << std::right << std::setw( 4 ) << i + 1 << "  line " << std::left << std::setw( 5 ) << r.entry.line
                << std::setw( 25 ) << to_string( r.m4 ) << std::right << std::setw( 4 ) << r.states << " states  "
                << seconds( r.secs ) << "s" << ( bad ? "  MISMATCH (expected " + r.entry.expected_text + ")" : "" ) << "\n";
  }

  std::size_t monitorable = counts[0] + counts[1] + counts[2];
  std::cout << "formulas=" << rows.size() << " analyzed=" << rows.size() - skipped << " skipped=" << skipped << "\n";
  std::cout << "monitorable=" << monitorable << " non-monitorable=" << counts[3] << "\n";
  std::cout << "positive=" << counts[0] << " negative=" << counts[1] << " neutral=" << counts[2] << " non=" << counts[3] << "\n";
  std::cout << "expectations checked=" << checked << " mismatched=" << mismatched << "\n";
  std::cout << "total-time=" << seconds( total ) << "s\n";

  if ( !csv_path.empty() )
  {
    std::ofstream csv( csv_path, std::ios::binary );
    csv.imbue( std::locale::classic() );
    csv << "index,formula,verdict4,verdict2,states,millis\n";
    auto quote = []( std::string const& s ) {
      std::string out = "\"";
      for ( char c : s )
        out += c == '"' ? std::string( "\"\"" ) : std::string( 1, c );
      return out + "\"";
    };
    for ( std::size_t i = 0; i < rows.size(); ++i )
    {
      auto const& r = rows[i];
      csv << i + 1 << "," << quote( r.entry.text ) << ",";
      if ( r.analyzed )
        csv << short_name( r.m4 ) << "," << two_valued( r.m4 != monitorability4::non ) << "," << r.states << ",";
      else
        csv << "error,error,,";
      std::ostringstream ms;
      ms.imbue( std::locale::classic() );
      ms << std::fixed << std::setprecision( 3 ) << r.secs * 1000.0;
      csv << ms.str() << "\n";
    }
    csv.close();
    if ( !csv )
      throw io_error( "cannot write '" + csv_path + "'" );
  }

  if ( mismatched )
    return mismatch;
  return skipped ? partial_corpus : ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "monic: monitors and monitorability for LTL" };
  app.require_subcommand( 1 );
  app.set_version_flag( "--version", "monic 1.0.0" );

  std::string formula_text, trace_path, corpus_path, out_path, csv_path;
  std::string format = "dot", policy = "both";
  bool as_json = false, stages = false, summary = false;
  unsigned jobs = 0;

  auto* analyze = app.add_subcommand( "analyze", "Monitorability verdicts and per-state table" );
  analyze->add_option( "formula", formula_text, "LTL formula" )->required();
  analyze->add_flag( "--json", as_json, "Machine-readable output" );
  analyze->add_flag( "--stages", stages, "Include intermediate automaton sizes" );

  auto* mon = app.add_subcommand( "monitor", "Export the six-valued monitor" );
  mon->add_option( "formula", formula_text, "LTL formula" )->required();
  mon->add_option( "--format", format, "dot or json" )->check( CLI::IsMember( { "dot", "json" } ) );
  mon->add_option( "--out,-o", out_path, "Output file (default: stdout)" );

  auto* run = app.add_subcommand( "run", "Replay a trace file through a monitor session" );
  run->add_option( "formula", formula_text, "LTL formula" )->required();
  run->add_option( "tracefile", trace_path, "One event per line; '-' is the empty event" )->required();
  run->add_option( "--policy", policy, "Registered handlers" )->check( CLI::IsMember( { "both", "sat-only", "vio-only", "none" } ) );
  run->add_flag( "--json", as_json, "Machine-readable output" );

  auto* bench = app.add_subcommand( "bench", "Classify every formula of a corpus file" );
  bench->add_option( "corpus", corpus_path, "Formula file" )->required();
  bench->add_flag( "--summary", summary, "Print only the summary (and mismatches)" );
  bench->add_option( "--csv", csv_path, "Write per-formula results as CSV" );
  bench->add_option( "--jobs,-j", jobs, "Worker threads (default: all cores)" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    return app.exit( e ) == 0 ? ok : parse_failure;
  }

  try
  {
    if ( *analyze )
      return cmd_analyze( formula_text, as_json, stages );
    if ( *mon )
      return cmd_monitor( formula_text, format, out_path );
    if ( *run )
      return cmd_run( formula_text, trace_path, policy, as_json );
    return cmd_bench( corpus_path, summary, csv_path, jobs );
  }
  catch ( syntax_error const& e )
  {
    std::cerr << "monic: " << e.what() << "\n";
    return parse_failure;
  }
  catch ( io_error const& e )
  {
    std::cerr << "monic: " << e.what() << "\n";
    return io_failure;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "monic: internal error: " << e.what() << "\n";
    return internal_failure;
  }
}
