//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "report.hpp"

#include <lcstab/closure.hpp>
#include <lcstab/error.hpp>
#include <lcstab/gfp.hpp>
#include <lcstab/literal.hpp>

#include <charconv>
#include <map>
#include <sstream>

namespace lcstab::report
{

namespace
{

bool_fn parse_literal( const std::string& text, std::size_t index )
{
  try
  {
    return parse_function( text );
  }
  catch ( const parse_error& e )
  {
    throw parse_error( "literal " + std::to_string( index + 1u ) + " '" + text + "': " + e.message(), e.position() );
  }
}

std::vector<bool_fn> parse_literals( std::span<const std::string> literals )
{
  std::vector<bool_fn> out;
  for ( std::size_t i = 0; i < literals.size(); ++i )
    out.push_back( parse_literal( literals[i], i ) );
  return out;
}

json class_json( const class_descriptor& d )
{
  return { { "name", descriptor_name( d ) }, { "code", descriptor_code( d ) } };
}

json params_json( const table3_params& p )
{
  json out = json::object();
  if ( p.i )
    out["i"] = *p.i;
  if ( p.j )
    out["j"] = *p.j;
  if ( p.k )
    out["k"] = *p.k;
  if ( p.a )
    out["a"] = *p.a ? 1 : 0;
  if ( p.b )
    out["b"] = *p.b ? 1 : 0;
  return out;
}

json maxima_json( const class_descriptor& d )
{
  const auto e = table3_lookup( d );
  return { { "pattern", e.pattern },
           { "guard", e.guard },
           { "params", params_json( e.params ) },
           { "right_max", clone_name( e.right_max ) },
           { "left_max", clone_name( e.left_max ) } };
}

bool reflexive( const bool_fn& f ) { return negations( f ).inner == f; }

bool self_dual( const bool_fn& f ) { return negations( f ).dual == f; }

bool monotone( const bool_fn& f )
{
  const auto n = f.arity();
  for ( uint64_t x = 0; x < f.num_points(); ++x )
  {
    if ( !f.value( x ) )
      continue;
    for ( auto i = 0u; i < n; ++i )
    {
      if ( !( ( x >> i ) & 1u ) && !f.value( x | ( uint64_t{ 1 } << i ) ) )
        return false;
    }
  }
  return true;
}

} // namespace

json witness_json( const witness& w )
{
  json inner = json::array();
  for ( const auto& g : w.inner )
    inner.push_back( format_polynomial( g ) );
  json out = { { "construction", w.construction },
               { "outer", format_polynomial( w.outer ) },
               { "inner", inner },
               { "result", format_polynomial( w.result ) },
               { "result_arity", w.result.arity() },
               { "beyond_cap", w.beyond_cap } };
  if ( !w.family.empty() )
    out["family"] = w.family;
  if ( !w.minor_images.empty() )
    out["minor_images"] = w.minor_images;
  return out;
}

json verdict_json( const verdict& v )
{
  json out = { { "verdict", v.holds ? "holds" : "fails" },
               { "cap", v.cap },
               { "exhaustive_arity", v.exhaustive_arity },
               { "method", v.method } };
  if ( v.found )
    out["witness"] = witness_json( *v.found );
  return out;
}

json analyze( std::span<const std::string> literals )
{
  json fns = json::array();
  for ( std::size_t i = 0; i < literals.size(); ++i )
  {
    const auto f = parse_literal( literals[i], i );
    const auto s = compute_signature( f );
    json clones = json::array();
    for ( auto c : all_clones() )
    {
      if ( member( c, f ) )
        clones.push_back( clone_name( c ) );
    }
    const bool_fn one[] = { f };
    fns.push_back( { { "literal", literals[i] },
                     { "arity", f.arity() },
                     { "table", format_table( f ) },
                     { "polynomial", format_polynomial( f ) },
                     { "degree", s.degree },
                     { "charrank", s.charrank },
                     { "parity", s.parity ? "odd" : "even" },
                     { "profile", { { "c0", s.c0 ? 1 : 0 }, { "c1", s.c1 ? 1 : 0 }, { "index", s.profile() } } },
                     { "constant", f.is_constant() },
                     { "reflexive", reflexive( f ) },
                     { "self_dual", self_dual( f ) },
                     { "monotone", monotone( f ) },
                     { "clones", clones },
                     { "class", class_json( classify( one ) ) } } );
  }
  return { { "command", "analyze" }, { "functions", fns } };
}

json closure( std::span<const std::string> literals, unsigned cap, bool check )
{
  const auto fs = parse_literals( literals );
  const auto d = classify( fs );
  json gens = json::array();
  for ( std::size_t i = 0; i < fs.size(); ++i )
    gens.push_back( { { "literal", literals[i] }, { "polynomial", format_polynomial( fs[i] ) }, { "arity", fs[i].arity() } } );
  json out = { { "command", "closure" }, { "generators", gens }, { "class", class_json( d ) }, { "table", maxima_json( d ) } };
  if ( check )
  {
    const auto oracle = closure_oracle( fs, cap );
    const auto a = compare_with_descriptor( oracle, d );
    json rows = json::array();
    for ( auto n = 1u; n <= cap; ++n )
      rows.push_back( { { "arity", n }, { "oracle", a.oracle_sizes[n - 1u] }, { "descriptor", a.descriptor_sizes[n - 1u] } } );
    out["check"] = { { "cap", cap }, { "arities", rows }, { "agree", a.equal }, { "first_difference", a.arity } };
  }
  return out;
}

json stability( const std::optional<std::string>& klass, std::span<const std::string> literals,
                const std::optional<std::string>& clone, std::optional<side> which, unsigned cap )
{
  std::vector<clone_id> clones;
  if ( clone )
  {
    const auto c = clone_from_name( *clone );
    if ( !c )
      throw error( error_code::invalid_argument, "unknown clone '" + *clone + "'" );
    clones.push_back( *c );
  }
  else
    clones.assign( all_clones().begin(), all_clones().end() );

  check_options opts;
  opts.cap = cap;

  json out = { { "command", "stability" }, { "cap", cap } };
  std::optional<class_descriptor> d;
  std::optional<fn_class> k;
  if ( klass )
  {
    d = parse_descriptor( *klass );
    out["source"] = "descriptor";
    out["class"] = class_json( *d );
  }
  else
  {
    const auto fs = parse_literals( literals );
    k = closure_oracle( fs, cap );
    out["source"] = "closure";
    out["class"] = class_json( classify( fs ) );
  }
  std::optional<table3_entry> row;
  if ( d )
    row = table3_lookup( *d );
  out["table"] = klass ? maxima_json( *d ) : json( nullptr );

  json records = json::array();
  for ( auto s : { side::right, side::left } )
  {
    if ( which && *which != s )
      continue;
    for ( auto c : clones )
    {
      verdict v;
      if ( d )
        v = s == side::right ? right_stable( *d, c, opts ) : left_stable( *d, c, opts );
      else
        v = s == side::right ? right_stable( *k, c, opts ) : left_stable( *k, c, opts );
      json rec = { { "clone", clone_name( c ) }, { "side", side_name( s ) } };
      if ( row )
      {
        const bool expected = clone_leq( c, s == side::right ? row->right_max : row->left_max );
        rec["expected"] = expected ? "holds" : "fails";
        rec["ok"] = expected == v.holds;
      }
      rec.update( verdict_json( v ) );
      records.push_back( std::move( rec ) );
    }
  }
  out["records"] = records;
  return out;
}

json table3( const table3_options& opts )
{
  const auto r = verify_table3( opts );
  json instances = json::array();
  for ( std::size_t i = 0; i < r.instances.size(); ++i )
  {
    const auto& inst = r.instances[i];
    instances.push_back( { { "index", i },
                           { "class", class_json( inst.klass ) },
                           { "pattern", inst.pattern },
                           { "guard", inst.guard },
                           { "params", params_json( inst.params ) },
                           { "right_max", clone_name( inst.right_max ) },
                           { "left_max", clone_name( inst.left_max ) } } );
  }
  json records = json::array();
  for ( const auto& rec : r.records )
  {
    json j = { { "instance", rec.instance },
               { "class", descriptor_code( r.instances[rec.instance].klass ) },
               { "clone", clone_name( rec.clone ) },
               { "side", side_name( rec.which ) },
               { "expected", rec.expected_holds ? "holds" : "fails" },
               { "ok", rec.ok() } };
    j.update( verdict_json( rec.result ) );
    records.push_back( std::move( j ) );
  }
  return { { "command", "table3" },
           { "cap", r.cap },
           { "max_param", opts.max_param },
           { "fault_injected", opts.inject_fault },
           { "instances", instances },
           { "records", records },
           { "summary",
             { { "instances", r.instances.size() },
               { "records", r.records.size() },
               { "failures", r.failures },
               { "verified", r.ok() } } } };
}

namespace
{

/* largest n <= cap with p^(p^n) <= gfp_max_slice */
unsigned feasible_cap( unsigned p, unsigned cap )
{
  unsigned best = 0;
  for ( auto n = 1u; n <= cap; ++n )
  {
    uint64_t points = 1;
    for ( auto i = 0u; i < n; ++i )
      points *= p;
    uint64_t size = 1;
    bool ok = true;
    for ( uint64_t i = 0; i < points && ok; ++i )
    {
      size *= p;
      ok = size <= gfp_max_slice;
    }
    if ( !ok )
      break;
    best = n;
  }
  return best;
}

} // namespace

json gfp( std::span<const std::string> literals, unsigned cap, bool check )
{
  std::vector<gfp_fn> fs;
  for ( std::size_t i = 0; i < literals.size(); ++i )
  {
    try
    {
      fs.push_back( parse_gfp( literals[i] ) );
    }
    catch ( const parse_error& e )
    {
      throw parse_error( "literal " + std::to_string( i + 1u ) + " '" + literals[i] + "': " + e.message(), e.position() );
    }
  }
  for ( const auto& f : fs )
  {
    if ( f.prime() != fs.front().prime() )
      throw error( error_code::invalid_argument, "literals over different fields" );
  }

  json fns = json::array();
  for ( std::size_t i = 0; i < fs.size(); ++i )
  {
    const auto& f = fs[i];
    std::vector<unsigned> values( f.values().begin(), f.values().end() );
    fns.push_back( { { "literal", literals[i] },
                     { "prime", f.prime() },
                     { "arity", f.arity() },
                     { "values", values },
                     { "polynomial", format_gfp_polynomial( f ) },
                     { "text", format_gfp( f ) },
                     { "degree", gfp_degree( f ) } } );
  }
  const auto c = gfp_classify( fs );
  json out = { { "command", "gfp" }, { "functions", fns }, { "class", gfp_class_name( c ) } };
  if ( fs.empty() )
    out["prime"] = nullptr;
  else
    out["prime"] = fs.front().prime();

  if ( check && !fs.empty() )
  {
    const auto p = fs.front().prime();
    const auto used = feasible_cap( p, cap );
    unsigned top = 0;
    for ( const auto& f : fs )
      top = std::max( top, f.arity() );
    if ( used < top )
      throw error( error_code::limit_exceeded, "closure cap " + std::to_string( used ) +
                                                    " is below the generator arity " + std::to_string( top ) );
    const auto closed = gfp_closure_oracle( fs, p, used );
    const auto family = gfp_degree_family( p, c.m, used );
    bool subset = true;
    json rows = json::array();
    for ( auto n = 1u; n <= used; ++n )
    {
      for ( const auto& g : closed.members( n ) )
        subset = subset && family.contains( g );
      rows.push_back( { { "arity", n }, { "closure", closed.size( n ) }, { "degree_class", family.size( n ) } } );
    }
    const bool equal = closed == family;
    /* over GF(2) the closure always fills the degree class */
    const bool expect_equal = p == 2u || used >= c.m + 1u;
    out["check"] = { { "requested_cap", cap },
                     { "cap", used },
                     { "arities", rows },
                     { "subset", subset },
                     { "equal", equal },
                     { "equality_expected", expect_equal },
                     { "verified", subset && ( equal || !expect_equal ) } };
  }
  return out;
}

namespace
{

struct hasse
{
  std::vector<class_descriptor> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

hasse build_hasse( unsigned deg_bound, unsigned char_bound )
{
  hasse h;
  h.nodes = enumerate_descriptors( deg_bound, char_bound );
  const auto n = h.nodes.size();
  std::vector<std::vector<bool>> below( n, std::vector<bool>( n, false ) );
  for ( std::size_t a = 0; a < n; ++a )
  {
    for ( std::size_t b = 0; b < n; ++b )
      below[a][b] = a != b && descriptor_leq( h.nodes[a], h.nodes[b] );
  }
  for ( std::size_t a = 0; a < n; ++a )
  {
    for ( std::size_t b = 0; b < n; ++b )
    {
      if ( !below[a][b] )
        continue;
      bool cover = true;
      for ( std::size_t c = 0; c < n && cover; ++c )
        cover = !( below[a][c] && below[c][b] );
      if ( cover )
        h.covers.emplace_back( a, b );
    }
  }
  return h;
}

std::vector<std::pair<block, block>> block_covers()
{
  std::vector<std::pair<block, block>> out;
  for ( auto a : all_blocks )
  {
    for ( auto b : all_blocks )
    {
      if ( a == b || !block_leq( a, b ) )
        continue;
      bool cover = true;
      for ( auto c : all_blocks )
      {
        if ( c != a && c != b && block_leq( a, c ) && block_leq( c, b ) )
          cover = false;
      }
      if ( cover )
        out.emplace_back( a, b );
    }
  }
  return out;
}

std::string group_of( const class_descriptor& d )
{
  if ( !d.is_graded() )
    return "specials";
  const auto part = [&]( char tag, cap c ) {
    return std::string( 1, tag ) + ( c.is_finite() ? std::to_string( c.value() ) : std::string( "inf" ) );
  };
  std::string g = part( 'D', d.deg_cap() );
  if ( d.has_char_constraint() )
    g += "_" + part( 'X', d.char_cap() );
  return g;
}

std::string quote( std::string_view s )
{
  std::string out = "\"";
  for ( char c : s )
  {
    if ( c == '"' || c == '\\' )
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

json lattice( unsigned deg_bound, unsigned char_bound )
{
  const auto h = build_hasse( deg_bound, char_bound );
  json nodes = json::array();
  std::size_t graded = 0;
  for ( std::size_t i = 0; i < h.nodes.size(); ++i )
  {
    const auto& d = h.nodes[i];
    graded += d.is_graded() ? 1u : 0u;
    auto j = class_json( d );
    j["id"] = i;
    j["group"] = group_of( d );
    nodes.push_back( std::move( j ) );
  }
  json edges = json::array();
  for ( const auto& [a, b] : h.covers )
    edges.push_back( { { "from", a }, { "to", b } } );
  json blocks = json::array();
  for ( const auto& [a, b] : block_covers() )
    blocks.push_back( { { "from", block_code( a ) }, { "to", block_code( b ) } } );
  return { { "command", "lattice" },
           { "deg_bound", deg_bound },
           { "char_bound", char_bound },
           { "counts", { { "nodes", h.nodes.size() }, { "graded", graded }, { "special", h.nodes.size() - graded } } },
           { "nodes", nodes },
           { "edges", edges },
           { "block_edges", blocks } };
}

std::string lattice_dot( unsigned deg_bound, unsigned char_bound )
{
  const auto h = build_hasse( deg_bound, char_bound );
  std::map<std::string, std::vector<std::size_t>> groups;
  for ( std::size_t i = 0; i < h.nodes.size(); ++i )
    groups[group_of( h.nodes[i] )].push_back( i );

  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for ( const auto& [name, ids] : groups )
  {
    os << "  subgraph " << quote( "cluster_" + name ) << " {\n    label=" << quote( name ) << ";\n";
    if ( name == "specials" )
      os << "    rank=min;\n";
    for ( auto i : ids )
      os << "    n" << i << " [label=" << quote( descriptor_name( h.nodes[i] ) ) << "];\n";
    os << "  }\n";
  }
  for ( const auto& [a, b] : h.covers )
    os << "  n" << a << " -> n" << b << ";\n";

  /* the eleven blocks on their own */
  os << "  subgraph cluster_blocks {\n    label=\"blocks\";\n";
  for ( auto b : all_blocks )
    os << "    " << quote( "blk_" + std::string( block_code( b ) ) ) << " [label=" << quote( block_display_name( b ) )
       << "];\n";
  for ( const auto& [a, b] : block_covers() )
    os << "    " << quote( "blk_" + std::string( block_code( a ) ) ) << " -> "
       << quote( "blk_" + std::string( block_code( b ) ) ) << ";\n";
  os << "  }\n}\n";
  return os.str();
}

std::map<std::string, unsigned> parse_params( std::string_view text )
{
  std::map<std::string, unsigned> out;
  std::size_t pos = 0;
  while ( pos < text.size() )
  {
    auto end = text.find( ',', pos );
    if ( end == std::string_view::npos )
      end = text.size();
    const auto item = text.substr( pos, end - pos );
    const auto eq = item.find( '=' );
    if ( eq == std::string_view::npos || eq == 0u )
      throw parse_error( "expected name=value", pos );
    std::string key;
    for ( char c : item.substr( 0, eq ) )
    {
      if ( c != ' ' )
        key += c;
    }
    auto value_text = item.substr( eq + 1u );
    while ( !value_text.empty() && value_text.front() == ' ' )
      value_text.remove_prefix( 1u );
    unsigned v = 0;
    const auto [p, ec] = std::from_chars( value_text.data(), value_text.data() + value_text.size(), v );
    if ( ec != std::errc{} || p != value_text.data() + value_text.size() )
      throw parse_error( "expected an unsigned value", pos + eq + 1u );
    out[key] = v;
    pos = end + 1u;
  }
  return out;
}

} // namespace lcstab::report
