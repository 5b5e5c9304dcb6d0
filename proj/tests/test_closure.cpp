//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "reference.hpp"

#include <lcstab/closure.hpp>
#include <lcstab/clones.hpp>
#include <lcstab/error.hpp>
#include <lcstab/literal.hpp>

#include <gtest/gtest.h>

using namespace lcstab;

namespace
{

bool_fn P( const char* s ) { return parse_function( s ); }

class_descriptor D( const char* s ) { return parse_descriptor( s ); }

class_descriptor classify_one( const bool_fn& f ) { return classify( std::vector{ f } ); }

std::vector<reference::gen> as_gens( const std::vector<bool_fn>& fs )
{
  std::vector<reference::gen> out;
  for ( const auto& f : fs )
    out.emplace_back( f.table_word(), f.arity() );
  return out;
}

/* up to two random generators of arity 1..3 */
std::vector<bool_fn> random_set( oracle::rng& r )
{
  std::vector<bool_fn> fs;
  const auto count = 1u + r.below( 2 );
  for ( auto i = 0u; i < count; ++i )
  {
    const auto n = 1u + r.below( 3 );
    fs.push_back( bool_fn::from_word( n, r.function( n ) ) );
  }
  return fs;
}

void expect_matches_reference( const std::vector<bool_fn>& fs, unsigned cap )
{
  const auto lib = closure_oracle( fs, cap );
  const auto ref = reference::closure( as_gens( fs ), cap );
  for ( auto n = 1u; n <= cap; ++n )
    ASSERT_EQ( lib.slice( n ).members(), ref[n - 1u] ) << "arity " << n;
}

void expect_classify_agrees( const std::vector<bool_fn>& fs, unsigned cap )
{
  const auto d = classify( fs );
  const auto ref = reference::closure( as_gens( fs ), cap );
  for ( auto n = 1u; n <= cap; ++n )
    ASSERT_EQ( reference::members( d, n ), ref[n - 1u] ) << descriptor_name( d ) << " arity " << n;
}

} // namespace

TEST( Classify, Examples )
{
  EXPECT_EQ( descriptor_name( classify_one( P( "x1*x2*x3" ) ) ), "D3 ∩ C0E1" );
  EXPECT_EQ( classify_one( monster( 2 ) ), D( "D2&X1&B00" ) );
  EXPECT_EQ( classify_one( P( "x1*x2 + x1" ) ), D( "D2&B00" ) );
  EXPECT_EQ( classify_one( P( "x1 + x2 + x3" ) ), D( "D1&B01" ) );
  EXPECT_EQ( classify( std::vector{ P( "0" ), P( "1" ) } ), class_descriptor::constants() );
  EXPECT_EQ( classify( std::vector{ P( "x1 + x2" ), P( "x1*x2" ) } ), D( "D2&C0" ) );
  EXPECT_EQ( classify( std::span<const bool_fn>{} ), class_descriptor::empty() );
  EXPECT_EQ( classify_one( P( "0" ) ), class_descriptor::constant( false ) );
  EXPECT_EQ( classify_one( P( "1@3" ) ), class_descriptor::constant( true ) );
}

TEST( Classify, NamedFamilies )
{
  for ( auto k = 1u; k <= 4u; ++k )
  {
    std::string conj = "x1";
    for ( auto i = 2u; i <= k; ++i )
      conj += "*x" + std::to_string( i );
    const auto c = classify_one( P( conj.c_str() ) );
    EXPECT_EQ( c, class_descriptor::graded( cap( k ), cap( k ), block::b01 ) ) << k;
    if ( k >= 2u )
    {
      EXPECT_EQ( classify_one( P( ( conj + " + x1" ).c_str() ) ),
                 class_descriptor::graded( cap( k ), cap( k ), block::b00 ) );
      EXPECT_EQ( classify_one( monster( k ) ), class_descriptor::graded( cap( k ), cap( 1 ), block::b00 ) );
    }
  }
}

TEST( Closure, Examples )
{
  const auto empty = closure_oracle( {}, 3 );
  EXPECT_TRUE( empty.empty() );

  const auto lc = closure_oracle( std::vector{ P( "x1" ) }, 3 );
  for ( auto n = 1u; n <= 3u; ++n )
    EXPECT_EQ( lc.slice( n ).members(), enumerate( clone_id::lc, n ) );

  const auto w2 = closure_oracle( std::vector{ monster( 2 ) }, 4 );
  const auto d = D( "D2&X1&B00" );
  for ( auto n = 1u; n <= 4u; ++n )
    EXPECT_EQ( w2.slice( n ).members(), reference::members( d, n ) ) << n;

  EXPECT_THROW( closure_oracle( std::vector{ P( "x1*x4" ) }, 3 ), error );
}

TEST( Closure, MatchesOddSumsOfMinors )
{
  oracle::rng r( oracle::seed + 1u );
  for ( auto trial = 0; trial < 40; ++trial )
  {
    const auto fs = random_set( r );
    SCOPED_TRACE( trial );
    expect_matches_reference( fs, 4 );
  }
}

TEST( Closure, ResultIsStable )
{
  oracle::rng r( oracle::seed + 2u );
  for ( auto trial = 0; trial < 20; ++trial )
  {
    const auto k = closure_oracle( random_set( r ), 3 );
    for ( auto n = 1u; n <= 3u; ++n )
    {
      const auto s = k.slice( n ).members();
      for ( auto t : s )
      {
        for ( auto m = 1u; m <= 3u; ++m )
        {
          for ( const auto& sigma : oracle::maps( n, m ) )
            ASSERT_TRUE( k.contains( oracle::minor( t, n, sigma, m ), m ) );
        }
      }
      /* closed under triple sums: s.front() + g + h stays inside */
      if ( s.empty() )
        continue;
      for ( auto g : s )
      {
        for ( auto h : s )
          ASSERT_TRUE( k.contains( s.front() ^ g ^ h, n ) );
      }
    }
  }
}

TEST( Classify, AgreesWithClosure )
{
  std::vector<std::vector<bool_fn>> named = {
      { P( "x1" ) },           { P( "x1*x2" ) },      { P( "x1*x2*x3" ) }, { P( "x1*x2 + x1" ) },
      { P( "x1*x2*x3 + x1" ) }, { monster( 1 ) },      { monster( 2 ) },    { monster( 3 ) },
      { P( "x1 + x2 + x3" ) }, { P( "x1*x2 + x1*x3 + x2*x3" ) } };
  for ( const auto& fs : named )
  {
    SCOPED_TRACE( format_polynomial( fs.front() ) );
    expect_classify_agrees( fs, 4 );
  }
  oracle::rng r( oracle::seed + 3u );
  for ( auto trial = 0; trial < 30; ++trial )
  {
    SCOPED_TRACE( trial );
    expect_classify_agrees( random_set( r ), 4 );
  }
}

TEST( Classify, Monotone )
{
  oracle::rng r( oracle::seed + 4u );
  for ( auto trial = 0; trial < 200; ++trial )
  {
    auto fs = random_set( r );
    const auto small = classify( std::span{ fs }.first( 1 ) );
    const auto n = 1u + r.below( 4 );
    fs.push_back( bool_fn::from_word( n, r.function( n ) ) );
    EXPECT_TRUE( descriptor_leq( small, classify( fs ) ) );
  }
}

TEST( Classify, IgnoresFictitiousArguments )
{
  oracle::rng r( oracle::seed + 5u );
  for ( auto trial = 0; trial < 200; ++trial )
  {
    const auto n = 1u + r.below( 4 );
    const auto f = bool_fn::from_word( n, r.function( n ) );
    /* spread the arguments over a larger arity */
    std::vector<unsigned> images( n );
    const auto m = n + 1u + r.below( 2 );
    for ( auto i = 0u; i < n; ++i )
      images[i] = i + 1u + ( i + 1u == n ? m - n : 0u );
    const auto g = minor( f, minor_map( m, images ) );
    EXPECT_EQ( classify_one( f ), classify_one( g ) ) << format_polynomial( f );
  }
}

TEST( Classify, Duality )
{
  oracle::rng r( oracle::seed + 6u );
  for ( auto trial = 0; trial < 200; ++trial )
  {
    const auto fs = random_set( r );
    std::vector<bool_fn> neg;
    for ( const auto& f : fs )
      neg.push_back( add( f, bool_fn::constant( f.arity(), true ) ) );
    EXPECT_EQ( classify( neg ), descriptor_complement( classify( fs ) ) );
  }
}

TEST( Materialize, MatchesDefinitions )
{
  for ( const auto* name : { "D1&B01", "D2&X1&B00", "D3&C0E1", "D0", "Empty", "X1&NEQ" } )
  {
    const auto d = D( name );
    const auto k = materialize( d, 4 );
    for ( auto n = 1u; n <= 4u; ++n )
      EXPECT_EQ( k.slice( n ).members(), reference::members( d, n ) ) << name << " " << n;
  }
}

TEST( Agreement, ReportsFirstDifference )
{
  const auto k = closure_oracle( std::vector{ P( "x1*x2" ) }, 3 );
  const auto ok = compare_with_descriptor( k, D( "D2&B01" ) );
  EXPECT_TRUE( ok.equal );
  EXPECT_EQ( ok.arity, 0u );
  EXPECT_EQ( ok.oracle_sizes, ok.descriptor_sizes );

  const auto bad = compare_with_descriptor( k, D( "D3&B01" ) );
  EXPECT_FALSE( bad.equal );
  EXPECT_EQ( bad.arity, 3u );
}
