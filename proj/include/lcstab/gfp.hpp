//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Functions over a prime field GF(p) and their reduced polynomials.
//
// Points and exponent vectors share one mixed-radix index: digit i (base p)
// is the value, or exponent, of x_{i+1}.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcstab
{

inline constexpr unsigned gfp_max_prime = 7u;
/* largest p^n accepted for a single table */
inline constexpr uint64_t gfp_max_points = uint64_t{ 1 } << 20u;
/* largest p^(p^n) for a dense closure slice */
inline constexpr uint64_t gfp_max_slice = uint64_t{ 1 } << 24u;

bool is_prime( unsigned p );

class gfp_fn
{
public:
  static gfp_fn from_values( unsigned p, unsigned arity, std::vector<uint8_t> values );
  static gfp_fn from_coefficients( unsigned p, unsigned arity, std::vector<uint8_t> coeffs );
  static gfp_fn constant( unsigned p, unsigned arity, unsigned c );
  /* x_i, 1-based */
  static gfp_fn projection( unsigned p, unsigned arity, unsigned i );

  unsigned prime() const noexcept { return p_; }
  unsigned arity() const noexcept { return n_; }
  std::size_t num_points() const noexcept { return values_.size(); }

  const std::vector<uint8_t>& values() const noexcept { return values_; }
  const std::vector<uint8_t>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==( const gfp_fn& a, const gfp_fn& b );
  friend std::strong_ordering operator<=>( const gfp_fn& a, const gfp_fn& b );

private:
  gfp_fn( unsigned p, unsigned n, std::vector<uint8_t> values, std::vector<uint8_t> coeffs );

  unsigned p_;
  unsigned n_;
  std::vector<uint8_t> values_;
  std::vector<uint8_t> coeffs_;
};

/* coefficients of the reduced polynomial agreeing with the table */
std::vector<uint8_t> gfp_interpolate( std::span<const uint8_t> values, unsigned p, unsigned arity );
std::vector<uint8_t> gfp_evaluate( std::span<const uint8_t> coeffs, unsigned p, unsigned arity );

/* largest total degree of a monomial, 0 for the zero function */
unsigned gfp_degree( const gfp_fn& f );

gfp_fn gfp_add( const gfp_fn& f, const gfp_fn& g );
gfp_fn gfp_scale( const gfp_fn& f, unsigned c );
/* f(x_sigma(1), ..., x_sigma(n)) as an m-ary function, images 1-based */
gfp_fn gfp_minor( const gfp_fn& f, std::span<const unsigned> sigma, unsigned m );
/* g substituted into the first argument of f, arity n + m - 1 */
gfp_fn gfp_star( const gfp_fn& f, const gfp_fn& g );

struct gfp_class
{
  enum class kind : uint8_t
  {
    empty,
    degree, /* D_m */
    omega,
  };
  kind k = kind::empty;
  unsigned m = 0;

  friend bool operator==( const gfp_class&, const gfp_class& ) = default;
};

/* least L-stable class containing the functions; never omega for finite input */
gfp_class gfp_classify( std::span<const gfp_fn> fs );
std::string gfp_class_name( const gfp_class& c );

/*! \brief Per-arity sets of GF(p) functions for arities 1..cap, stored densely.

  A function is identified by its table code sum_i v_i p^i.
*/
class gfp_family
{
public:
  gfp_family( unsigned p, unsigned cap );

  unsigned prime() const noexcept { return p_; }
  unsigned cap() const noexcept { return static_cast<unsigned>( slices_.size() ); }

  bool contains( const gfp_fn& f ) const;
  bool insert( const gfp_fn& f );
  std::size_t size( unsigned arity ) const;
  /* ascending by table code */
  std::vector<gfp_fn> members( unsigned arity ) const;

  friend bool operator==( const gfp_family& a, const gfp_family& b ) = default;

private:
  unsigned p_;
  std::vector<std::vector<bool>> slices_;
  std::vector<std::size_t> sizes_;
};

/*! \brief Bounded L-closure, p in {2, 3, 5}.

  Least family containing F that is closed, within the cap, under minors,
  sums, scalar multiples, constants, and substitution of x1 + x2, c x1 and c
  into one argument.
*/
gfp_family gfp_closure_oracle( std::span<const gfp_fn> fs, unsigned p, unsigned cap );

/* D_k restricted to arities 1..cap */
gfp_family gfp_degree_family( unsigned p, unsigned k, unsigned cap );

/*! \brief Parses "gfp:p=3 poly:x1^2 + 2*x2" or "gfp:p=3 vt:0,1,1@1".

  The "gfp:" prefix is optional.  An "@n" suffix fixes the arity.
*/
gfp_fn parse_gfp( std::string_view text );
std::string format_gfp_polynomial( const gfp_fn& f );
std::string format_gfp( const gfp_fn& f );

} // namespace lcstab
