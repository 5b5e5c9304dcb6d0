//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/kernels.hpp>

#include <array>
#include <cassert>

namespace lcstab::kernels
{

word compose( word g, unsigned r, std::span<const word> inner, unsigned m )
{
  assert( inner.size() == r );
  const auto mask = full_mask( m );
  word result = 0u;
  for ( auto b = 0u; b < ( 1u << r ); ++b )
  {
    if ( ( ( g >> b ) & 1u ) == 0u )
      continue;
    word term = mask;
    for ( auto i = 0u; i < r && term; ++i )
    {
      term &= ( ( b >> i ) & 1u ) ? inner[i] : ~inner[i];
    }
    result |= term;
  }
  return result & mask;
}

word minor( word t, unsigned n, std::span<const unsigned> sigma, unsigned m )
{
  assert( sigma.size() == n );
  std::array<word, max_word_arity> inner{};
  for ( auto i = 0u; i < n; ++i )
  {
    inner[i] = var( m, sigma[i] );
  }
  return compose( t, n, std::span<const word>( inner.data(), n ), m );
}

word shift( word t, unsigned n, unsigned s, unsigned m )
{
  std::array<unsigned, max_word_arity> sigma{};
  for ( auto i = 0u; i < n; ++i )
  {
    sigma[i] = s + i;
  }
  return minor( t, n, std::span<const unsigned>( sigma.data(), n ), m );
}

word star( word f, unsigned n, word g, unsigned m )
{
  const auto k = n + m - 1u;
  assert( k <= max_word_arity );
  std::array<word, max_word_arity> inner{};
  inner[0] = shift( g, m, 0u, k );
  for ( auto i = 1u; i < n; ++i )
  {
    inner[i] = var( k, m + i - 1u );
  }
  return compose( f, n, std::span<const word>( inner.data(), n ), k );
}

bool is_monotone( word t, unsigned n )
{
  for ( auto i = 0u; i < n; ++i )
  {
    const auto t0 = t & lo_masks[i];
    const auto t1 = ( t >> ( 1u << i ) ) & lo_masks[i];
    if ( t0 & ~t1 )
      return false;
  }
  return true;
}

} // namespace lcstab::kernels
