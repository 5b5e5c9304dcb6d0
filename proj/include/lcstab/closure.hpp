//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/bool_fn.hpp>
#include <lcstab/descriptor.hpp>
#include <lcstab/fn_class.hpp>

#include <span>

namespace lcstab
{

/*! \brief Least listed class containing F, read off from invariants.

  Empty input gives the empty class.
*/
class_descriptor classify( std::span<const bool_fn> fs );

/*! \brief Brute-force closure under minors and sums of three, arity <= cap.

  Each slice of the result is an affine space; generators are saturated
  with all their minors into every arity up to the cap.
*/
fn_class closure_oracle( std::span<const bool_fn> fs, unsigned cap );

/* members of the class with arity 1..cap; cap 5 only for classes of moderate size */
fn_class materialize( const class_descriptor& d, unsigned cap );

/* per-arity comparison of an oracle result with a descriptor */
struct agreement
{
  bool equal = true;
  /* first arity where they differ, 0 when equal */
  unsigned arity = 0;
  std::vector<uint64_t> oracle_sizes;
  std::vector<uint64_t> descriptor_sizes;
};

/* exact for every cap <= 6: membership of each element plus slice sizes */
agreement compare_with_descriptor( const fn_class& oracle, const class_descriptor& d );

} // namespace lcstab
