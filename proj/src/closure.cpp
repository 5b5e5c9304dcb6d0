//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/closure.hpp>
#include <lcstab/error.hpp>

#include "signature_table.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace lcstab
{

namespace
{

/* a slice this large is not worth holding as an explicit set */
constexpr std::size_t max_slice_members = std::size_t{ 1 } << 21u;

/* largest arity-5 space walked by materialize */
constexpr std::size_t max_materialized_dim = 20u;

/* all maps [n] -> [m], images 0-based, in lexicographic order */
std::vector<std::vector<unsigned>> all_maps( unsigned n, unsigned m )
{
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> sigma( n, 0u );
  for ( ;; )
  {
    out.push_back( sigma );
    auto i = n;
    while ( i > 0u && ++sigma[i - 1u] == m )
      sigma[--i] = 0u;
    if ( i == 0u )
      break;
  }
  return out;
}

} // namespace

class_descriptor classify( std::span<const bool_fn> fs )
{
  if ( fs.empty() )
    return class_descriptor::empty();
  unsigned i = 0, j = 0;
  uint8_t profiles = 0;
  for ( const auto& f : fs )
  {
    const auto s = compute_signature( f );
    i = std::max( i, s.degree );
    j = std::max( j, s.charrank );
    profiles |= static_cast<uint8_t>( 1u << s.profile() );
  }
  if ( i == 0u )
  {
    if ( profiles == mask( block::b00 ) )
      return class_descriptor::constant( false );
    if ( profiles == mask( block::b11 ) )
      return class_descriptor::constant( true );
    return class_descriptor::constants();
  }
  return class_descriptor::graded( cap( i ), cap( std::max( j, 1u ) ), block_hull( profiles ) );
}

fn_class closure_oracle( std::span<const bool_fn> fs, unsigned cap )
{
  fn_class out( cap, provenance::closure );
  std::deque<std::pair<word, unsigned>> pending;
  for ( const auto& f : fs )
  {
    if ( f.arity() > cap )
      throw error( error_code::limit_exceeded, "generator arity " + std::to_string( f.arity() ) +
                                                    " exceeds the closure cap " + std::to_string( cap ) );
    pending.emplace_back( f.table_word(), f.arity() );
  }

  std::vector<std::vector<word>> members( cap + 1u );
  std::vector<std::vector<std::vector<std::vector<unsigned>>>> maps( cap + 1u );
  for ( auto n = 1u; n <= cap; ++n )
  {
    maps[n].resize( cap + 1u );
    for ( auto m = 1u; m <= cap; ++m )
      maps[n][m] = all_maps( n, m );
  }

  while ( !pending.empty() )
  {
    const auto [t, n] = pending.front();
    pending.pop_front();
    auto& slice = out.slice( n );
    if ( slice.contains( t ) )
      continue;

    /* the slice is an affine space; adding t doubles it */
    auto& ms = members[n];
    if ( ms.empty() )
    {
      slice.insert( t );
      ms.push_back( t );
    }
    else
    {
      if ( 2u * ms.size() > max_slice_members )
        throw error( error_code::limit_exceeded, "closure slice of arity " + std::to_string( n ) +
                                                      " exceeds " + std::to_string( max_slice_members ) +
                                                      " members" );
      const auto anchor = ms.front();
      const auto old = ms.size();
      for ( std::size_t k = 0; k < old; ++k )
      {
        const auto s = ms[k] ^ t ^ anchor;
        slice.insert( s );
        ms.push_back( s );
      }
    }

    /* minors of t; minors of sums are sums of minors, so t's suffice */
    for ( auto m = 1u; m <= cap; ++m )
    {
      for ( const auto& sigma : maps[n][m] )
        pending.emplace_back( kernels::minor( t, n, sigma, m ), m );
    }
  }
  return out;
}

fn_class materialize( const class_descriptor& d, unsigned cap )
{
  if ( cap > 5u )
    throw error( error_code::limit_exceeded, "materialized classes are limited to arity 5" );
  fn_class out( cap, provenance::enumerated );
  for ( auto n = 1u; n <= std::min( cap, 4u ); ++n )
  {
    const auto& sigs = detail::signature_table( n );
    for ( std::size_t t = 0; t < sigs.size(); ++t )
    {
      if ( descriptor_member( d, detail::unpack( sigs[t] ) ) )
        out.insert( t, n );
    }
  }
  if ( cap < 5u )
    return out;

  /* arity 5: walk the ANF space in Gray-code order and filter by profile */
  if ( !d.is_graded() )
  {
    for ( auto v : { false, true } )
    {
      if ( descriptor_member( d, kernels::constant( 5u, v ), 5u ) )
        out.insert( kernels::constant( 5u, v ), 5u );
    }
    return out;
  }
  const auto basis = descriptor_kernel( d, 5u );
  if ( basis.size() > max_materialized_dim )
    throw error( error_code::limit_exceeded, "class " + descriptor_code( d ) + " has 2^" +
                                                  std::to_string( basis.size() ) + " members of arity 5" );
  word anf = 0;
  const uint64_t count = uint64_t{ 1 } << basis.size();
  for ( uint64_t step = 0;; )
  {
    const auto t = kernels::moebius( anf, 5u );
    if ( admits( d.get_block(), kernels::profile( t, 5u ) ) )
      out.insert( t, 5u );
    if ( ++step == count )
      break;
    anf ^= basis[static_cast<unsigned>( std::countr_zero( step ) )];
  }
  return out;
}

agreement compare_with_descriptor( const fn_class& oracle, const class_descriptor& d )
{
  agreement r;
  for ( auto n = 1u; n <= oracle.cap(); ++n )
  {
    const auto& slice = oracle.slice( n );
    const auto expected = descriptor_slice_size( d, n );
    r.oracle_sizes.push_back( slice.size() );
    r.descriptor_sizes.push_back( expected );
    bool ok = slice.size() == expected;
    if ( ok )
    {
      slice.for_each( [&]( word t ) { ok = ok && descriptor_member( d, t, n ); } );
    }
    if ( !ok && r.equal )
    {
      r.equal = false;
      r.arity = n;
    }
  }
  return r;
}

} // namespace lcstab
