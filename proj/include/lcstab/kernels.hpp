//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Single-word truth table kernels for functions of up to six arguments.
// Bit b of a word is f(b), with x1 the least significant bit of b.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>

namespace lcstab::kernels
{

using word = uint64_t;

inline constexpr unsigned max_word_arity = 6u;

/* positions whose bit i is 0 */
inline constexpr std::array<word, 6> lo_masks = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

inline constexpr std::array<word, 6> var_masks = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

constexpr word full_mask( unsigned n )
{
  return n >= 6u ? ~word{ 0 } : ( word{ 1 } << ( 1u << n ) ) - 1u;
}

/* projection onto x_{i+1} */
constexpr word var( unsigned n, unsigned i )
{
  return var_masks[i] & full_mask( n );
}

constexpr word constant( unsigned n, bool value )
{
  return value ? full_mask( n ) : word{ 0 };
}

/* the Moebius transform is an involution, so this maps tables to ANF and back */
constexpr word moebius( word t, unsigned n )
{
  for ( auto i = 0u; i < n; ++i )
  {
    t ^= ( t & lo_masks[i] ) << ( 1u << i );
  }
  return t;
}

/* table of the inner negation f(~x) */
constexpr word reverse( word t, unsigned n )
{
  for ( auto i = 0u; i < n; ++i )
  {
    const auto s = 1u << i;
    t = ( ( t & lo_masks[i] ) << s ) | ( ( t >> s ) & lo_masks[i] );
  }
  return t;
}

constexpr word complement( word t, unsigned n )
{
  return ~t & full_mask( n );
}

constexpr word dual( word t, unsigned n )
{
  return complement( reverse( t, n ), n );
}

namespace detail
{
constexpr std::array<word, 7> make_degree_masks()
{
  std::array<word, 7> masks{};
  for ( auto d = 0u; d <= 6u; ++d )
  {
    for ( auto b = 0u; b < 64u; ++b )
    {
      if ( static_cast<unsigned>( std::popcount( b ) ) <= d )
      {
        masks[d] |= word{ 1 } << b;
      }
    }
  }
  return masks;
}
} // namespace detail

/* monomials of size at most d */
inline constexpr std::array<word, 7> degree_masks = detail::make_degree_masks();

/* degree of an ANF word, -1 for the zero polynomial */
constexpr int polydeg( word anf )
{
  if ( anf == 0u )
    return -1;
  for ( auto d = 0u; d < 6u; ++d )
  {
    if ( ( anf & ~degree_masks[d] ) == 0u )
      return static_cast<int>( d );
  }
  return 6;
}

constexpr unsigned degree( word t, unsigned n )
{
  const auto d = polydeg( moebius( t, n ) );
  return d < 0 ? 0u : static_cast<unsigned>( d );
}

constexpr unsigned charrank( word t, unsigned n )
{
  return static_cast<unsigned>( polydeg( moebius( t ^ reverse( t, n ), n ) ) + 1 );
}

constexpr bool value_at_zero( word t )
{
  return ( t & 1u ) != 0u;
}

constexpr bool value_at_ones( word t, unsigned n )
{
  return ( ( t >> ( ( 1u << n ) - 1u ) ) & 1u ) != 0u;
}

/* number of nonempty monomials mod 2 */
constexpr bool parity( word t, unsigned n )
{
  return ( std::popcount( moebius( t, n ) & ~word{ 1 } ) & 1 ) != 0;
}

/* 0..3 encodes (f(0..0), f(1..1)) as 2 * c0 + c1 */
constexpr unsigned profile( word t, unsigned n )
{
  return ( value_at_zero( t ) ? 2u : 0u ) | ( value_at_ones( t, n ) ? 1u : 0u );
}

/* f_sigma for sigma : [n] -> [m], images 0-based */
word minor( word t, unsigned n, std::span<const unsigned> sigma, unsigned m );

/* g(f_1, ..., f_r) where the inner words all have arity m */
word compose( word g, unsigned r, std::span<const word> inner, unsigned m );

/* f * g, arity n + m - 1 */
word star( word f, unsigned n, word g, unsigned m );

/* f(x_{s+1}, ..., x_{s+n}) as an m-ary function */
word shift( word t, unsigned n, unsigned s, unsigned m );

bool is_monotone( word t, unsigned n );

} // namespace lcstab::kernels
