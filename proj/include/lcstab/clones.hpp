//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// The nineteen named clones: membership, generating sets, inclusion order,
// bounded enumeration and bounded generation.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/bool_fn.hpp>
#include <lcstab/fn_class.hpp>

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace lcstab
{

enum class clone_id : uint8_t
{
  omega,
  t0,
  t1,
  tc,
  m,
  s,
  sc,
  sm,
  l,
  l0,
  l1,
  ls,
  lc,          /* idempotent linear, generated by x1 + x2 + x3 */
  lambda_c,    /* conjunctions */
  v_c,         /* disjunctions */
  i_star,
  i0,
  i1,
  ic,
};

inline constexpr std::size_t num_clones = 19u;

const std::array<clone_id, num_clones>& all_clones();

/* CLI spelling, e.g. "Lambda_c" */
std::string_view clone_name( clone_id c );

/* printed form, e.g. "Λc" */
std::string_view clone_symbol( clone_id c );

/* accepts the CLI spelling, the printed form, and case-insensitive variants */
std::optional<clone_id> clone_from_name( std::string_view name );

bool member( clone_id c, const bool_fn& f );
bool member( clone_id c, word table, unsigned arity );

/*! \brief Generating set used for stability checks.

  Constants are given as unary functions.  Where a standard basis is listed it
  is used verbatim; T0, T1, Tc, M, Sc, L0 and L1 carry small classical bases
  that the test suite checks against enumeration.
*/
const std::vector<bool_fn>& generators( clone_id c );
bool has_listed_basis( clone_id c );

/* a is a subclone of b */
bool clone_leq( clone_id a, clone_id b );

/* a <= b with nothing of the nineteen strictly between */
bool clone_covers( clone_id a, clone_id b );

/*! \brief Members of exactly the given arity (arity <= 4), ascending tables. */
const std::vector<word>& enumerate( clone_id c, unsigned arity );

/* slices 1..cap of the clone as a class */
fn_class enumerate_class( clone_id c, unsigned cap );

/*! \brief Bounded slice of the clone generated by the basis.

  Least family containing the projections of arity <= cap and closed under
  g(h_1, ..., h_k) for g in the basis and h_i of equal arity <= cap.
*/
fn_class generate( const std::vector<bool_fn>& basis, unsigned cap );

} // namespace lcstab
