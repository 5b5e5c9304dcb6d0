//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Composition of function classes and bounded stability checks.
//
// A check either finds a witness (a definitive failure) or reports that no
// counterexample exists up to the cap it searched.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/bool_fn.hpp>
#include <lcstab/clones.hpp>
#include <lcstab/descriptor.hpp>
#include <lcstab/fn_class.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lcstab
{

/* f * g: g feeds the first argument of f, arity n + m - 1 */
bool_fn star( const bool_fn& f, const bool_fn& g );

/* {f(g_1, ..., g_n) : f in C, g_i in K of equal arity}, arities <= cap */
fn_class compose_classes( const fn_class& c, const fn_class& k, unsigned cap );

enum class side
{
  right, /* K C in K */
  left,  /* C K in K */
};

std::string_view side_name( side s );

struct witness
{
  /* right: outer in K, inner[0] from the basis (or a minor map); left: outer from the basis */
  bool_fn outer;
  std::vector<bool_fn> inner;
  bool_fn result;
  /* "star", "minor" or "composition" */
  std::string construction;
  /* set when the witness came from the structured catalogue */
  std::string family;
  bool beyond_cap = false;
  /* minor witnesses only, 1-based images */
  std::vector<unsigned> minor_images;
};

struct verdict
{
  bool holds = true;
  unsigned cap = 0;
  /* all arities up to this one were searched completely */
  unsigned exhaustive_arity = 0;
  /* "exhaustive", "affine", "profile", or a '+' joined mix */
  std::string method;
  std::optional<witness> found;
};

struct check_options
{
  unsigned cap = 4u;
  /* tuples examined per generator and arity before giving up on completeness */
  uint64_t tuple_budget = uint64_t{ 1 } << 28u;
  /* search the structured catalogue above the cap when nothing is found */
  bool beyond_cap = true;
};

verdict right_stable( const fn_class& k, std::span<const bool_fn> basis, const check_options& opts = {},
                      const class_descriptor* exact = nullptr );
verdict left_stable( const fn_class& k, std::span<const bool_fn> basis, const check_options& opts = {},
                     const class_descriptor* exact = nullptr );

verdict right_stable( const fn_class& k, clone_id c, const check_options& opts = {} );
verdict left_stable( const fn_class& k, clone_id c, const check_options& opts = {} );

/* materializes the class up to opts.cap and may use the catalogue */
verdict right_stable( const class_descriptor& d, clone_id c, const check_options& opts = {} );
verdict left_stable( const class_descriptor& d, clone_id c, const check_options& opts = {} );

/* the table of maximal clones */

struct table3_params
{
  std::optional<unsigned> i, j, k;
  std::optional<bool> a, b;
};

struct table3_instance
{
  class_descriptor klass;
  /* row pattern and guard as printed, e.g. "X_k ∩ C_aE_b", "k = 1, a ≠ b" */
  std::string pattern;
  std::string guard;
  table3_params params;
  clone_id right_max;
  clone_id left_max;
};

/* maxima for any listed class */
struct table3_entry
{
  std::string pattern;
  std::string guard;
  table3_params params;
  clone_id right_max;
  clone_id left_max;
};
table3_entry table3_lookup( const class_descriptor& d );

/* all rows with parameters i > j >= 1 and k >= 1 up to max_param, a, b in {0, 1} */
std::vector<table3_instance> instantiate_table3( unsigned max_param );

struct table3_record
{
  /* index into table3_report::instances */
  std::size_t instance = 0;
  clone_id clone;
  side which;
  bool expected_holds;
  verdict result;

  bool ok() const { return result.holds == expected_holds; }
};

struct table3_options
{
  check_options check;
  unsigned max_param = 3u;
  /* keep instances matching every given parameter */
  std::map<std::string, unsigned> filter;
  /* keep instances whose pattern equals this, if set; spaces, case and "∩" vs "&" are ignored */
  std::string pattern;
  /* replace one maximum with a wrong clone, for testing the harness */
  bool inject_fault = false;
};

struct table3_report
{
  unsigned cap = 0;
  std::vector<table3_instance> instances;
  std::vector<table3_record> records;
  std::size_t failures = 0;

  bool ok() const { return failures == 0u; }
};

table3_report verify_table3( const table3_options& opts );

} // namespace lcstab
