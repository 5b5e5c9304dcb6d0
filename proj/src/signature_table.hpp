//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/bool_fn.hpp>

#include <cstdint>
#include <vector>

namespace lcstab::detail
{

/* degree | charrank << 3 | profile << 6 */
using packed_signature = uint16_t;

inline packed_signature pack( const signature& s )
{
  return static_cast<packed_signature>( s.degree | ( s.charrank << 3u ) | ( s.profile() << 6u ) );
}

inline signature unpack( packed_signature p )
{
  signature s;
  s.degree = p & 7u;
  s.charrank = ( p >> 3u ) & 7u;
  s.c0 = ( p >> 7u ) & 1u;
  s.c1 = ( p >> 6u ) & 1u;
  s.parity = s.c0 != s.c1;
  return s;
}

/* signatures of every function of arity n <= 4, indexed by table */
const std::vector<packed_signature>& signature_table( unsigned n );

} // namespace lcstab::detail
