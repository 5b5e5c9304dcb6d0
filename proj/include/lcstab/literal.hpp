//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Text forms of Boolean functions.
//
//   polynomial   x1*x2 + x3 + 1, x1x2 + (x1 + 1)(x2 + 1), optional "@n"
//   truth table  tt:0b01101001     bits in index order, f(0..0) first
//                tt:0x69@3         hex digits expand MSB-first into the same
//                                  left-to-right bit string
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/bool_fn.hpp>

#include <string>
#include <string_view>

namespace lcstab
{

bool_fn parse_function( std::string_view text );

/* canonical polynomial; appends "@n" when the arity is not implied */
std::string format_polynomial( const bool_fn& f );

/* tt:0b... in index order */
std::string format_table( const bool_fn& f );

} // namespace lcstab
