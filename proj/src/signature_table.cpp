//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "signature_table.hpp"

#include <lcstab/error.hpp>

#include <array>
#include <mutex>

namespace lcstab::detail
{

const std::vector<packed_signature>& signature_table( unsigned n )
{
  if ( n == 0u || n > 4u )
    throw error( error_code::out_of_range, "signature tables exist for arities 1..4" );
  static std::array<std::once_flag, 4> once;
  static std::array<std::vector<packed_signature>, 4> tables;
  std::call_once( once[n - 1u], [n] {
    auto& t = tables[n - 1u];
    t.resize( std::size_t{ 1 } << ( 1u << n ) );
    for ( std::size_t w = 0; w < t.size(); ++w )
      t[w] = pack( compute_signature( w, n ) );
  } );
  return tables[n - 1u];
}

} // namespace lcstab::detail
