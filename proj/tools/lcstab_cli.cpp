//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// lcstab command line.  Everything goes through the C API; the JSON reports
// it returns are either printed as they are (--format json) or rendered as
// text here.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.
//
//===----------------------------------------------------------------------===//

#include <lcstab.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace
{

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

constexpr unsigned default_cap = 4u;
constexpr unsigned hard_cap = 5u;
constexpr uint64_t default_seed = 1729u;

struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/* owns a string handed out by the library */
struct lib_string
{
  char* p = nullptr;
  ~lib_string() { lcs_string_free( p ); }
};

void check( lcs_status s )
{
  if ( s == LCS_OK )
    return;
  std::string msg = lcs_status_name( s );
  if ( *lcs_last_error() )
    msg += ": " + std::string( lcs_last_error() );
  throw usage_error( msg );
}

unsigned global_cap()
{
  const char* env = std::getenv( "LCSTAB_ARITY_CAP" );
  if ( !env || !*env )
    return default_cap;
  char* end = nullptr;
  const auto v = std::strtoul( env, &end, 10 );
  if ( *end != '\0' || v < 1u || v > hard_cap )
    throw usage_error( "LCSTAB_ARITY_CAP must be an integer in 1.." + std::to_string( hard_cap ) );
  return static_cast<unsigned>( v );
}

/* splits at commas outside parentheses; blank pieces are dropped */
std::vector<std::string> split_literals( const std::vector<std::string>& args )
{
  std::vector<std::string> out;
  for ( const auto& a : args )
  {
    int depth = 0;
    std::string cur;
    auto flush = [&] {
      const auto b = cur.find_first_not_of( " \t" );
      if ( b != std::string::npos )
        out.push_back( cur.substr( b, cur.find_last_not_of( " \t" ) - b + 1u ) );
      cur.clear();
    };
    for ( char c : a )
    {
      depth += c == '(' ? 1 : c == ')' ? -1 : 0;
      if ( c == ',' && depth == 0 )
        flush();
      else
        cur += c;
    }
    flush();
  }
  return out;
}

std::vector<const char*> c_strings( const std::vector<std::string>& v )
{
  std::vector<const char*> out;
  for ( const auto& s : v )
    out.push_back( s.c_str() );
  return out;
}

json take( lib_string& s ) { return json::parse( s.p ); }

std::string yes_no( bool b ) { return b ? "yes" : "no"; }

std::string join( const json& arr, const std::string& sep )
{
  std::string out;
  for ( const auto& x : arr )
  {
    if ( !out.empty() )
      out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void render_witness( std::ostream& os, const json& w, const std::string& indent )
{
  os << indent << "witness (" << w["construction"].get<std::string>() << "): " << w["outer"].get<std::string>();
  if ( !w["inner"].empty() )
    os << " with " << join( w["inner"], ", " );
  os << " gives " << w["result"].get<std::string>();
  if ( w.contains( "minor_images" ) )
    os << " [sigma " << join( w["minor_images"], " " ) << "]";
  if ( w["beyond_cap"].get<bool>() )
    os << " (beyond the cap)";
  os << "\n";
  if ( w.contains( "family" ) )
    os << indent << "family: " << w["family"].get<std::string>() << "\n";
}

void render_row( std::ostream& os, const json& t )
{
  os << "row: " << t["pattern"].get<std::string>();
  if ( !t["guard"].get<std::string>().empty() )
    os << " (" << t["guard"].get<std::string>() << ")";
  os << ", right max " << t["right_max"].get<std::string>() << ", left max " << t["left_max"].get<std::string>()
     << "\n";
}

void render_analyze( std::ostream& os, const json& doc )
{
  for ( const auto& f : doc["functions"] )
  {
    std::vector<std::string> props;
    if ( f["constant"].get<bool>() )
      props.emplace_back( "constant" );
    if ( f["reflexive"].get<bool>() )
      props.emplace_back( "reflexive" );
    if ( f["self_dual"].get<bool>() )
      props.emplace_back( "self-dual" );
    if ( f["monotone"].get<bool>() )
      props.emplace_back( "monotone" );
    os << f["literal"].get<std::string>() << "\n"
       << "  arity       " << f["arity"] << "\n"
       << "  table       " << f["table"].get<std::string>() << "\n"
       << "  anf         " << f["polynomial"].get<std::string>() << "\n"
       << "  degree      " << f["degree"] << "\n"
       << "  charrank    " << f["charrank"] << "\n"
       << "  parity      " << f["parity"].get<std::string>() << "\n"
       << "  profile     (" << f["profile"]["c0"] << "," << f["profile"]["c1"] << ")\n"
       << "  properties  " << ( props.empty() ? std::string( "-" ) : join( json( props ), ", " ) ) << "\n"
       << "  clones      " << join( f["clones"], " " ) << "\n"
       << "  class       " << f["class"]["name"].get<std::string>() << "\n";
  }
}

int render_closure( std::ostream& os, const json& doc )
{
  os << doc["class"]["name"].get<std::string>() << "\n";
  render_row( os, doc["table"] );
  if ( !doc.contains( "check" ) )
    return exit_ok;
  const auto& c = doc["check"];
  os << "check at cap " << c["cap"] << "\n  arity  oracle  descriptor\n";
  for ( const auto& r : c["arities"] )
  {
    os << "  " << std::setw( 5 ) << r["arity"].get<unsigned>() << "  " << std::setw( 6 )
       << r["oracle"].get<uint64_t>() << "  " << std::setw( 10 ) << r["descriptor"].get<uint64_t>() << "\n";
  }
  const bool agree = c["agree"].get<bool>();
  if ( agree )
    os << "agreement OK\n";
  else
    os << "agreement FAILED at arity " << c["first_difference"] << "\n";
  return agree ? exit_ok : exit_failed;
}

int render_stability( std::ostream& os, const json& doc, bool text )
{
  if ( text )
  {
    os << doc["class"]["name"].get<std::string>() << " (" << doc["source"].get<std::string>() << ", cap "
       << doc["cap"] << ")\n";
    if ( !doc["table"].is_null() )
      render_row( os, doc["table"] );
  }
  int rc = exit_ok;
  for ( const auto& r : doc["records"] )
  {
    const bool ok = !r.contains( "ok" ) || r["ok"].get<bool>();
    if ( !ok )
      rc = exit_failed;
    if ( !text )
      continue;
    os << "  " << std::left << std::setw( 6 ) << r["side"].get<std::string>() << std::setw( 9 )
       << r["clone"].get<std::string>() << std::setw( 6 ) << r["verdict"].get<std::string>() << std::right;
    if ( r.contains( "expected" ) )
      os << " expected " << r["expected"].get<std::string>() << ( ok ? "" : "  MISMATCH" );
    os << "  [" << r["method"].get<std::string>() << ", complete to arity " << r["exhaustive_arity"] << "]\n";
    if ( r.contains( "witness" ) )
      render_witness( os, r["witness"], "    " );
  }
  return rc;
}

void render_table3( std::ostream& os, const json& doc, bool all_records )
{
  const auto& insts = doc["instances"];
  std::vector<std::array<unsigned, 2>> bad( insts.size(), { 0u, 0u } );
  for ( const auto& r : doc["records"] )
  {
    if ( !r["ok"].get<bool>() )
      ++bad[r["instance"].get<std::size_t>()][r["side"] == "right" ? 0 : 1];
  }
  for ( const auto& inst : insts )
  {
    const auto i = inst["index"].get<std::size_t>();
    os << std::setw( 4 ) << i << "  " << std::left << std::setw( 22 ) << inst["class"]["code"].get<std::string>()
       << std::right << " right " << inst["right_max"].get<std::string>() << ( bad[i][0] ? " FAIL" : " ok" )
       << ", left " << inst["left_max"].get<std::string>() << ( bad[i][1] ? " FAIL" : " ok" ) << "   "
       << inst["pattern"].get<std::string>();
    if ( !inst["guard"].get<std::string>().empty() )
      os << " (" << inst["guard"].get<std::string>() << ")";
    os << "\n";
  }
  for ( const auto& r : doc["records"] )
  {
    if ( !all_records && r["ok"].get<bool>() )
      continue;
    os << ( r["ok"].get<bool>() ? "  " : "  MISMATCH " ) << r["class"].get<std::string>() << " "
       << r["side"].get<std::string>() << " " << r["clone"].get<std::string>() << ": " << r["verdict"].get<std::string>()
       << ", expected " << r["expected"].get<std::string>() << "\n";
    if ( r.contains( "witness" ) )
      render_witness( os, r["witness"], "    " );
  }
  const auto& s = doc["summary"];
  os << s["instances"] << " instances, " << s["records"] << " records, " << s["failures"] << " failures at cap "
     << doc["cap"] << ( s["verified"].get<bool>() ? ": verified\n" : ": NOT verified\n" );
}

int render_gfp( std::ostream& os, const json& doc )
{
  for ( const auto& f : doc["functions"] )
  {
    os << f["text"].get<std::string>() << "\n"
       << "  arity   " << f["arity"] << "\n"
       << "  degree  " << f["degree"] << "\n"
       << "  values  " << join( f["values"], "," ) << "\n";
  }
  os << "class " << doc["class"].get<std::string>() << "\n";
  if ( !doc.contains( "check" ) )
    return exit_ok;
  const auto& c = doc["check"];
  os << "check at cap " << c["cap"] << "\n  arity  closure  degree class\n";
  for ( const auto& r : c["arities"] )
  {
    os << "  " << std::setw( 5 ) << r["arity"].get<unsigned>() << "  " << std::setw( 7 )
       << r["closure"].get<uint64_t>() << "  " << std::setw( 12 ) << r["degree_class"].get<uint64_t>() << "\n";
  }
  os << "  contained " << yes_no( c["subset"].get<bool>() ) << ", equal " << yes_no( c["equal"].get<bool>() )
     << ( c["equality_expected"].get<bool>() ? " (equality expected)" : " (only containment expected)" ) << "\n";
  const bool ok = c["verified"].get<bool>();
  os << ( ok ? "verified\n" : "NOT verified\n" );
  return ok ? exit_ok : exit_failed;
}

void render_lattice( std::ostream& os, const json& doc )
{
  const auto& n = doc["counts"];
  os << n["nodes"] << " classes (" << n["graded"] << " graded, " << n["special"] << " special), "
     << doc["edges"].size() << " covers\n";
  const auto& nodes = doc["nodes"];
  std::vector<std::vector<std::string>> up( nodes.size() );
  for ( const auto& e : doc["edges"] )
    up[e["from"].get<std::size_t>()].push_back( nodes[e["to"].get<std::size_t>()]["name"].get<std::string>() );
  for ( std::size_t i = 0; i < nodes.size(); ++i )
  {
    os << "  " << nodes[i]["name"].get<std::string>();
    if ( !up[i].empty() )
      os << "  <  " << join( json( up[i] ), " | " );
    os << "\n";
  }
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Analysis of Boolean function classes and their stability under clones" };
  app.require_subcommand( 1 );
  std::string format = "text";
  uint64_t seed = default_seed;
  app.add_option( "--format", format, "Output format" )->check( CLI::IsMember( { "text", "json" } ) );
  app.add_option( "--seed", seed, "Seed for randomized commands" )->capture_default_str();

  std::vector<std::string> literals;

  auto* analyze = app.add_subcommand( "analyze", "Invariants and clone memberships of functions" );
  analyze->add_option( "functions", literals, "Function literals (comma separated or separate arguments)" )
      ->required();

  auto* classify = app.add_subcommand( "classify", "Least listed class containing the functions" );
  classify->add_option( "functions", literals, "Function literals" );

  unsigned max_arity = 0;
  bool run_check = false;
  unsigned random_count = 0;
  unsigned random_arity = 3;
  auto* closure = app.add_subcommand( "closure", "Classify the closure of the functions" );
  closure->add_option( "functions", literals, "Function literals" );
  closure->add_option( "--max-arity", max_arity, "Arity cap for --check (default: global cap)" );
  closure->add_flag( "--check", run_check, "Compare against the brute-force closure" );
  closure->add_option( "--random", random_count, "Add this many random generators (see --seed)" );
  closure->add_option( "--random-arity", random_arity, "Largest arity of random generators" )
      ->check( CLI::Range( 1u, 4u ) )
      ->capture_default_str();

  std::string klass;
  std::string clone;
  std::string side_text = "both";
  unsigned cap_opt = 0;
  std::string expect;
  auto* stability = app.add_subcommand( "stability", "Right and left stability of a class under clones" );
  stability->add_option( "functions", literals, "Use the closure of these functions as the class" );
  auto* class_opt = stability->add_option( "--class", klass, "Class name such as D2&X1&C0" );
  stability->add_option( "--clone", clone, "Clone name (default: all)" );
  stability->add_option( "--side", side_text, "right, left or both" )
      ->check( CLI::IsMember( { "right", "left", "both" } ) )
      ->capture_default_str();
  stability->add_option( "--cap", cap_opt, "Arity cap (default: global cap)" );
  stability->add_option( "--expect", expect, "Fail unless every verdict is this" )
      ->check( CLI::IsMember( { "holds", "fails" } ) );

  unsigned max_param = 0;
  std::string params;
  std::string row;
  bool inject_fault = false;
  bool all_records = false;
  auto* table3 = app.add_subcommand( "table3", "Verify the table of maximal clones" );
  table3->add_option( "--cap", cap_opt, "Arity cap (default: global cap)" );
  table3->add_option( "--max-param", max_param, "Largest i, j, k (default: cap - 1)" );
  table3->add_option( "--params", params, "Keep instances with these parameters, e.g. k=1,a=0" );
  table3->add_option( "--row", row, "Keep instances of this row pattern, e.g. X_k" );
  table3->add_flag( "--inject-fault", inject_fault, "Corrupt one expected maximum" );
  table3->add_flag( "--all-records", all_records, "List every record, not only mismatches" );

  std::vector<std::string> gfp_literals;
  auto* gfp = app.add_subcommand( "gfp", "Polynomials over GF(p)" );
  gfp->add_option( "functions", gfp_literals, "Literals such as \"gfp:p=3 poly:x1^2 + 2*x2\"" )->required();
  gfp->add_flag( "--check", run_check, "Compare the closure with the degree class" );
  gfp->add_option( "--max-arity", max_arity, "Largest closure arity (default: global cap)" );

  unsigned deg_bound = 1, char_bound = 1;
  bool dot = false;
  auto* lattice = app.add_subcommand( "lattice", "Hasse diagram of the listed classes" );
  lattice->add_option( "--deg-bound", deg_bound, "Largest finite degree cap" )->capture_default_str();
  lattice->add_option( "--char-bound", char_bound, "Largest finite X cap" )->capture_default_str();
  lattice->add_flag( "--dot", dot, "Emit a DOT document" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int rc = app.exit( e );
    return rc == 0 ? exit_ok : exit_usage;
  }

  const bool text = format == "text";
  std::ostream& os = std::cout;
  try
  {
    const auto cap = global_cap();
    auto bounded = [&]( unsigned requested, const char* what ) {
      if ( requested == 0u )
        return cap;
      if ( requested > cap )
        throw usage_error( std::string( what ) + " " + std::to_string( requested ) + " exceeds the global cap " +
                           std::to_string( cap ) );
      return requested;
    };

    lib_string out;
    if ( analyze->parsed() )
    {
      const auto fs = split_literals( literals );
      const auto cs = c_strings( fs );
      check( lcs_report_analyze( cs.data(), cs.size(), &out.p ) );
      const auto doc = take( out );
      if ( text )
        render_analyze( os, doc );
      else
        os << doc.dump( 2 ) << "\n";
      return exit_ok;
    }
    if ( classify->parsed() )
    {
      const auto fs = split_literals( literals );
      const auto cs = c_strings( fs );
      check( lcs_report_closure( cs.data(), cs.size(), cap, 0, &out.p ) );
      const auto doc = take( out );
      if ( text )
        os << doc["class"]["name"].get<std::string>() << "\n";
      else
        os << json{ { "command", "classify" }, { "generators", doc["generators"] }, { "class", doc["class"] } }.dump( 2 )
           << "\n";
      return exit_ok;
    }
    if ( closure->parsed() )
    {
      auto fs = split_literals( literals );
      std::mt19937_64 rng( seed );
      for ( auto i = 0u; i < random_count; ++i )
      {
        const auto n = 1u + static_cast<unsigned>( rng() % random_arity );
        const auto bits = 1u << n;
        const auto table = bits == 64u ? rng() : rng() & ( ( uint64_t{ 1 } << bits ) - 1u );
        std::string lit = "tt:0b";
        for ( auto b = 0u; b < bits; ++b )
          lit += ( table >> b ) & 1u ? '1' : '0';
        fs.push_back( lit );
      }
      const auto cs = c_strings( fs );
      check( lcs_report_closure( cs.data(), cs.size(), bounded( max_arity, "--max-arity" ), run_check ? 1 : 0,
                                 &out.p ) );
      auto doc = take( out );
      if ( random_count != 0u )
        doc["seed"] = seed;
      if ( text )
        return render_closure( os, doc );
      os << doc.dump( 2 ) << "\n";
      return doc.contains( "check" ) && !doc["check"]["agree"].get<bool>() ? exit_failed : exit_ok;
    }
    if ( stability->parsed() )
    {
      const auto fs = split_literals( literals );
      if ( class_opt->count() != 0u && !fs.empty() )
        throw usage_error( "give either --class or functions, not both" );
      const auto cs = c_strings( fs );
      const lcs_side s = side_text == "right" ? LCS_SIDE_RIGHT : side_text == "left" ? LCS_SIDE_LEFT : LCS_SIDE_BOTH;
      check( lcs_report_stability( class_opt->count() ? klass.c_str() : nullptr, cs.data(), cs.size(),
                                   clone.empty() ? nullptr : clone.c_str(), s, bounded( cap_opt, "--cap" ),
                                   &out.p ) );
      const auto doc = take( out );
      int rc = render_stability( os, doc, text );
      if ( !text )
        os << doc.dump( 2 ) << "\n";
      if ( !expect.empty() )
      {
        for ( const auto& r : doc["records"] )
        {
          if ( r["verdict"].get<std::string>() != expect )
            rc = exit_failed;
        }
      }
      return rc;
    }
    if ( table3->parsed() )
    {
      lcs_table3_options o{ bounded( cap_opt, "--cap" ), max_param, params.empty() ? nullptr : params.c_str(),
                            row.empty() ? nullptr : row.c_str(), inject_fault ? 1 : 0 };
      int verified = 0;
      check( lcs_report_table3( &o, &out.p, &verified ) );
      if ( text )
        render_table3( os, take( out ), all_records );
      else
        os << out.p << "\n";
      return verified ? exit_ok : exit_failed;
    }
    if ( gfp->parsed() )
    {
      const auto cs = c_strings( gfp_literals );
      check( lcs_report_gfp( cs.data(), cs.size(), bounded( max_arity, "--max-arity" ), run_check ? 1 : 0, &out.p ) );
      const auto doc = take( out );
      if ( text )
        return render_gfp( os, doc );
      os << doc.dump( 2 ) << "\n";
      return doc.contains( "check" ) && !doc["check"]["verified"].get<bool>() ? exit_failed : exit_ok;
    }
    if ( lattice->parsed() )
    {
      check( lcs_report_lattice( deg_bound, char_bound, dot ? 1 : 0, &out.p ) );
      if ( dot )
        os << out.p;
      else if ( text )
        render_lattice( os, take( out ) );
      else
        os << out.p << "\n";
      return exit_ok;
    }
  }
  catch ( const usage_error& e )
  {
    std::cerr << "lcstab: " << e.what() << "\n";
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "lcstab: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
