//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Boolean functions as packed truth tables together with their Zhegalkin
// (algebraic normal form) view, minors, and the invariants used for
// classification.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/kernels.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lcstab
{

using kernels::word;

/*! \brief Largest arity a bool_fn can be constructed with. */
inline constexpr unsigned max_arity = 16u;

/* bit i set <=> x_{i+1} occurs in the monomial; 0 is the constant term */
using monomial = uint32_t;

/*! \brief A set of monomials over x_1, ..., x_n, kept in (size, lex) order. */
class monomial_set
{
public:
  monomial_set( unsigned arity, std::vector<monomial> monomials );

  unsigned arity() const noexcept { return arity_; }
  const std::vector<monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  bool empty() const noexcept { return monomials_.empty(); }
  bool contains( monomial m ) const;

  friend bool operator==( const monomial_set&, const monomial_set& ) = default;

private:
  unsigned arity_;
  std::vector<monomial> monomials_;
};

/* (size, lex) order on monomials, variables compared ascending */
bool monomial_less( monomial a, monomial b );

/*! \brief sigma : {1..n} -> {1..m}, stored with 1-based images. */
class minor_map
{
public:
  minor_map( unsigned target_arity, std::vector<unsigned> images );

  static minor_map identity( unsigned n );
  /* sigma_ij : [n] -> [n-1] with j sent to i, for i < j */
  static minor_map identification( unsigned n, unsigned i, unsigned j );

  unsigned source_arity() const noexcept { return static_cast<unsigned>( images_.size() ); }
  unsigned target_arity() const noexcept { return target_; }
  unsigned operator()( unsigned i ) const { return images_.at( i - 1u ); }
  const std::vector<unsigned>& images() const noexcept { return images_; }

  friend bool operator==( const minor_map&, const minor_map& ) = default;

private:
  unsigned target_;
  std::vector<unsigned> images_;
};

/* tau o sigma */
minor_map compose( const minor_map& tau, const minor_map& sigma );

/*! \brief An n-ary Boolean function, n >= 1.

  The truth table and the ANF are both stored.  Bit b of the table holds
  f(b_1, ..., b_n) where b_1 is the least significant bit of b.
*/
class bool_fn
{
public:
  bool_fn( unsigned arity, std::vector<word> table );

  static bool_fn from_word( unsigned arity, word table );
  static bool_fn constant( unsigned arity, bool value );
  static bool_fn projection( unsigned arity, unsigned i );

  unsigned arity() const noexcept { return arity_; }
  uint64_t num_points() const noexcept { return uint64_t{ 1 } << arity_; }
  bool value( uint64_t point ) const;
  bool value_at_zero() const { return value( 0u ); }
  bool value_at_ones() const { return value( num_points() - 1u ); }

  const std::vector<word>& table() const noexcept { return table_; }
  const std::vector<word>& anf_table() const noexcept { return anf_; }

  /* only for arity <= 6 */
  word table_word() const;
  word anf_word() const;

  bool is_constant() const;

  friend bool operator==( const bool_fn& a, const bool_fn& b )
  {
    return a.arity_ == b.arity_ && a.table_ == b.table_;
  }
  friend std::strong_ordering operator<=>( const bool_fn& a, const bool_fn& b );

private:
  unsigned arity_;
  std::vector<word> table_;
  std::vector<word> anf_;
};

struct signature
{
  unsigned degree = 0;
  unsigned charrank = 0;
  bool parity = false;
  bool c0 = false;
  bool c1 = false;

  /* 2 * c0 + c1 */
  unsigned profile() const noexcept { return ( c0 ? 2u : 0u ) | ( c1 ? 1u : 0u ); }

  friend bool operator==( const signature&, const signature& ) = default;
};

struct negation_triple
{
  bool_fn outer;
  bool_fn inner;
  bool_fn dual;
};

monomial_set anf( const bool_fn& f );
bool_fn from_anf( const monomial_set& m );

bool_fn minor( const bool_fn& f, const minor_map& sigma );
monomial_set minor_monomials( const monomial_set& m, const minor_map& sigma );

bool_fn add( const bool_fn& f, const bool_fn& g );
negation_triple negations( const bool_fn& f );

/* f with x_i replaced by its negation */
bool_fn negate_argument( const bool_fn& f, unsigned i );

/* number of proper supersets of s in MON(f), mod 2 */
bool characteristic( monomial s, const bool_fn& f );

/* degree of the ANF, -1 for the zero polynomial */
int polydeg( const bool_fn& f );

signature compute_signature( const bool_fn& f );
signature compute_signature( word table, unsigned arity );

bool_fn derivative( const bool_fn& f, unsigned i );

/*! \brief W_k: the (k+1)-ary function that is 1 off the two constant tuples.

  The second form places the k + 1 essential arguments at the 1-based
  positions in support inside a function of the given arity.
*/
bool_fn monster( unsigned k );
bool_fn monster( unsigned k, unsigned arity, std::span<const unsigned> support );

/* g(f_1, ..., f_r), all f_i of equal arity */
bool_fn compose( const bool_fn& g, std::span<const bool_fn> inner );

/* essential variables, 1-based */
std::vector<unsigned> essential_variables( const bool_fn& f );

/* f and g agree after dropping fictitious arguments from both */
bool equivalent_up_to_fictitious( const bool_fn& f, const bool_fn& g );

} // namespace lcstab
