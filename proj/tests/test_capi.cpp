//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include <memory>
#include <string>
#include <thread>

using json = nlohmann::json;

namespace
{

struct fn_deleter
{
  void operator()( lcs_function* f ) const { lcs_function_free( f ); }
};
struct desc_deleter
{
  void operator()( lcs_descriptor* d ) const { lcs_descriptor_free( d ); }
};
using fn_ptr = std::unique_ptr<lcs_function, fn_deleter>;
using desc_ptr = std::unique_ptr<lcs_descriptor, desc_deleter>;

fn_ptr parse( const char* s )
{
  lcs_function* f = nullptr;
  EXPECT_EQ( lcs_function_parse( s, &f ), LCS_OK ) << s << ": " << lcs_last_error();
  return fn_ptr( f );
}

desc_ptr descriptor( const char* s )
{
  lcs_descriptor* d = nullptr;
  EXPECT_EQ( lcs_descriptor_parse( s, &d ), LCS_OK ) << s << ": " << lcs_last_error();
  return desc_ptr( d );
}

/* takes ownership of a library string */
std::string take( char* s )
{
  std::string out = s ? s : "";
  lcs_string_free( s );
  return out;
}

json take_json( char* s ) { return json::parse( take( s ) ); }

} // namespace

TEST( CApi, Version )
{
  EXPECT_STREQ( lcs_version(), "1.0.0" );
  EXPECT_STREQ( lcs_status_name( LCS_OK ), "ok" );
  EXPECT_STRNE( lcs_status_name( LCS_ERR_PARSE ), lcs_status_name( LCS_ERR_NULL ) );
}

TEST( CApi, FunctionBasics )
{
  auto f = parse( "x1*x2 + x1*x3 + x2*x3" );
  unsigned n = 0;
  ASSERT_EQ( lcs_function_arity( f.get(), &n ), LCS_OK );
  EXPECT_EQ( n, 3u );

  int v = -1;
  ASSERT_EQ( lcs_function_value( f.get(), 3u, &v ), LCS_OK );
  EXPECT_EQ( v, 1 );
  ASSERT_EQ( lcs_function_value( f.get(), 4u, &v ), LCS_OK );
  EXPECT_EQ( v, 0 );
  EXPECT_EQ( lcs_function_value( f.get(), 8u, &v ), LCS_ERR_RANGE );

  char* s = nullptr;
  ASSERT_EQ( lcs_function_table( f.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "tt:0b00010111" );
  ASSERT_EQ( lcs_function_polynomial( f.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "x1*x2 + x1*x3 + x2*x3" );

  lcs_signature sig{};
  ASSERT_EQ( lcs_function_signature( f.get(), &sig ), LCS_OK );
  EXPECT_EQ( sig.degree, 2u );
  EXPECT_EQ( sig.charrank, 1u );
  EXPECT_EQ( sig.parity, 1 );
  EXPECT_EQ( sig.c0, 0 );
  EXPECT_EQ( sig.c1, 1 );

  lcs_function* raw = nullptr;
  ASSERT_EQ( lcs_function_from_table( 3, 0xE8u, &raw ), LCS_OK );
  fn_ptr g( raw );
  int eq = 0;
  ASSERT_EQ( lcs_function_equal( f.get(), g.get(), &eq ), LCS_OK );
  EXPECT_EQ( eq, 1 );
  EXPECT_EQ( lcs_function_from_table( 2, 0x1Fu, &raw ), LCS_ERR_RANGE );
  EXPECT_EQ( lcs_function_from_table( 0, 0u, &raw ), LCS_ERR_RANGE );
}

TEST( CApi, ParseErrorsCarryPositions )
{
  lcs_function* f = nullptr;
  EXPECT_EQ( lcs_function_parse( "x1 + + x2", &f ), LCS_ERR_PARSE );
  EXPECT_EQ( f, nullptr );
  EXPECT_EQ( lcs_last_error_position(), 5 );
  EXPECT_NE( std::string( lcs_last_error() ), "" );

  EXPECT_EQ( lcs_function_parse( "x1", &f ), LCS_OK );
  lcs_function_free( f );
  EXPECT_EQ( lcs_last_error_position(), -1 );

  EXPECT_EQ( lcs_function_parse( "x99", &f ), LCS_ERR_LIMIT );
}

TEST( CApi, NullArguments )
{
  lcs_function* f = nullptr;
  unsigned n = 0;
  EXPECT_EQ( lcs_function_parse( nullptr, &f ), LCS_ERR_NULL );
  EXPECT_EQ( lcs_function_parse( "x1", nullptr ), LCS_ERR_NULL );
  EXPECT_EQ( lcs_function_arity( nullptr, &n ), LCS_ERR_NULL );
  EXPECT_EQ( lcs_classify( nullptr, 1, nullptr ), LCS_ERR_NULL );
  EXPECT_EQ( lcs_report_table3( nullptr, nullptr, nullptr ), LCS_ERR_NULL );
  lcs_function_free( nullptr );
  lcs_descriptor_free( nullptr );
  lcs_string_free( nullptr );
}

TEST( CApi, Clones )
{
  ASSERT_EQ( lcs_clone_count(), 19u );
  EXPECT_STREQ( lcs_clone_name( 0 ), "Omega" );
  EXPECT_EQ( lcs_clone_name( 19 ), nullptr );

  size_t sm = 0, sc = 0;
  ASSERT_EQ( lcs_clone_find( "SM", &sm ), LCS_OK );
  ASSERT_EQ( lcs_clone_find( "Sc", &sc ), LCS_OK );
  EXPECT_EQ( lcs_clone_find( "T7", &sm ), LCS_ERR_INVALID );

  int out = 0;
  ASSERT_EQ( lcs_clone_leq( sm, sc, &out ), LCS_OK );
  EXPECT_EQ( out, 1 );
  auto maj = parse( "x1*x2 + x1*x3 + x2*x3" );
  ASSERT_EQ( lcs_clone_member( sm, maj.get(), &out ), LCS_OK );
  EXPECT_EQ( out, 1 );
  EXPECT_EQ( lcs_clone_member( 42, maj.get(), &out ), LCS_ERR_RANGE );
}

TEST( CApi, Descriptors )
{
  auto w = descriptor( "D2&X1&B00" );
  char* s = nullptr;
  ASSERT_EQ( lcs_descriptor_name( w.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "D2 ∩ X1 ∩ C0E0" );
  ASSERT_EQ( lcs_descriptor_code( w.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "D2&X1&B00" );

  auto lc = descriptor( "D1&B01" );
  auto odd = descriptor( "X1&NEQ" );
  int out = 0;
  ASSERT_EQ( lcs_descriptor_leq( lc.get(), odd.get(), &out ), LCS_OK );
  EXPECT_EQ( out, 1 );

  lcs_descriptor* raw = nullptr;
  ASSERT_EQ( lcs_descriptor_meet( descriptor( "C0" ).get(), descriptor( "C1" ).get(), &raw ), LCS_OK );
  desc_ptr meet( raw );
  ASSERT_EQ( lcs_descriptor_name( meet.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "Empty" );

  ASSERT_EQ( lcs_descriptor_complement( w.get(), &raw ), LCS_OK );
  desc_ptr comp( raw );
  ASSERT_EQ( lcs_descriptor_code( comp.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "D2&X1&B11" );

  uint64_t size = 0;
  ASSERT_EQ( lcs_descriptor_slice_size( lc.get(), 3, &size ), LCS_OK );
  EXPECT_EQ( size, 4u );

  auto f = parse( "x1 + 1" );
  ASSERT_EQ( lcs_descriptor_member( descriptor( "D1&NEQ" ).get(), f.get(), &out ), LCS_OK );
  EXPECT_EQ( out, 1 );

  EXPECT_EQ( lcs_descriptor_parse( "D2&Q7", &raw ), LCS_ERR_PARSE );
}

TEST( CApi, Classify )
{
  auto a = parse( "x1 + x2" );
  auto b = parse( "x1*x2" );
  const lcs_function* fs[] = { a.get(), b.get() };
  lcs_descriptor* raw = nullptr;
  ASSERT_EQ( lcs_classify( fs, 2, &raw ), LCS_OK );
  desc_ptr d( raw );
  char* s = nullptr;
  ASSERT_EQ( lcs_descriptor_name( d.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "D2 ∩ C0" );

  ASSERT_EQ( lcs_classify( nullptr, 0, &raw ), LCS_OK );
  desc_ptr e( raw );
  ASSERT_EQ( lcs_descriptor_name( e.get(), &s ), LCS_OK );
  EXPECT_EQ( take( s ), "Empty" );
}

TEST( CApi, Reports )
{
  const char* maj[] = { "x1*x2 + x1*x3 + x2*x3" };
  char* s = nullptr;
  ASSERT_EQ( lcs_report_analyze( maj, 1, &s ), LCS_OK );
  const auto an = take_json( s );
  EXPECT_EQ( an["command"], "analyze" );
  EXPECT_EQ( an["functions"][0]["charrank"], 1 );
  EXPECT_TRUE( an["functions"][0]["self_dual"].get<bool>() );

  const char* conj[] = { "x1*x2*x3" };
  ASSERT_EQ( lcs_report_closure( conj, 1, 4, 1, &s ), LCS_OK );
  const auto cl = take_json( s );
  EXPECT_EQ( cl["class"]["name"], "D3 ∩ C0E1" );
  EXPECT_TRUE( cl["check"]["agree"].get<bool>() );

  ASSERT_EQ( lcs_report_stability( "NEQ", nullptr, 0, "Lambda_c", LCS_SIDE_LEFT, 4, &s ), LCS_OK );
  const auto st = take_json( s );
  ASSERT_EQ( st["records"].size(), 1u );
  EXPECT_EQ( st["records"][0]["verdict"], "fails" );
  EXPECT_EQ( st["records"][0]["witness"]["result"], "0" );

  lcs_table3_options o{};
  o.params = "k=1";
  o.row = "X_k";
  int verified = 0;
  ASSERT_EQ( lcs_report_table3( &o, &s, &verified ), LCS_OK );
  const auto t3 = take_json( s );
  EXPECT_EQ( verified, 1 );
  EXPECT_EQ( t3["instances"][0]["right_max"], "S" );
  EXPECT_EQ( t3["instances"][0]["left_max"], "L" );

  o.params = "z=1";
  EXPECT_EQ( lcs_report_table3( &o, &s, &verified ), LCS_ERR_INVALID );

  const char* sq[] = { "gfp:p=3 poly:x1^2" };
  ASSERT_EQ( lcs_report_gfp( sq, 1, 2, 1, &s ), LCS_OK );
  const auto gf = take_json( s );
  EXPECT_EQ( gf["class"], "D2" );

  ASSERT_EQ( lcs_report_lattice( 1, 1, 0, &s ), LCS_OK );
  EXPECT_EQ( take_json( s )["nodes"].size(), 37u );
  ASSERT_EQ( lcs_report_lattice( 0, 0, 1, &s ), LCS_OK );
  EXPECT_EQ( take( s ).rfind( "digraph", 0 ), 0u );

  const char* bad[] = { "x1", "x1 +" };
  EXPECT_EQ( lcs_report_analyze( bad, 2, &s ), LCS_ERR_PARSE );
  EXPECT_NE( std::string( lcs_last_error() ).find( "literal 2" ), std::string::npos );
}

TEST( CApi, ErrorsAreThreadLocal )
{
  lcs_function* f = nullptr;
  EXPECT_EQ( lcs_function_parse( "x1 +", &f ), LCS_ERR_PARSE );
  std::thread t( [] {
    lcs_function* g = nullptr;
    EXPECT_EQ( lcs_function_parse( "x2", &g ), LCS_OK );
    lcs_function_free( g );
  } );
  t.join();
  EXPECT_NE( lcs_last_error_position(), -1 );
}
