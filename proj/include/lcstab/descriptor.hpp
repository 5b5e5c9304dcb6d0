//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Names for the classes stable under left and right composition with the
// idempotent linear clone: a degree cap, a characteristic-rank cap and a
// block of endpoint profiles, plus four classes of constants.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/bool_fn.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcstab
{

/*! \brief A set of endpoint profiles (f(0..0), f(1..1)).

  Bit p is set when profile p = 2 * c0 + c1 is admitted.
*/
enum class block : uint8_t
{
  b00 = 1u,
  b01 = 2u,
  b10 = 4u,
  b11 = 8u,
  c0 = 3u,  /* f(0..0) = 0 */
  c1 = 12u, /* f(0..0) = 1 */
  e0 = 5u,  /* f(1..1) = 0 */
  e1 = 10u, /* f(1..1) = 1 */
  eq = 9u,  /* even */
  neq = 6u, /* odd */
  all = 15u,
};

inline constexpr std::array<block, 11> all_blocks = {
    block::b00, block::b01, block::b10, block::b11, block::c0, block::c1,
    block::e0,  block::e1,  block::eq,  block::neq, block::all };

constexpr uint8_t mask( block b ) { return static_cast<uint8_t>( b ); }

constexpr bool admits( block b, unsigned profile ) { return ( mask( b ) >> profile ) & 1u; }

constexpr bool block_leq( block a, block b ) { return ( mask( a ) & ~mask( b ) ) == 0u; }

/* least block containing the profiles in m, if any (m != 0) */
std::optional<block> block_from_mask( uint8_t m );

/* least block containing the given profile set; three or more give all */
block block_hull( uint8_t profiles );

/* image under f -> f + 1 */
block complement( block b );

/* "C0E1", "C0", "Even", "Odd", "Ω" ... */
std::string_view block_display_name( block b );

/* "B01", "C0", "EQ", "ALL" ... */
std::string_view block_code( block b );

std::optional<block> block_from_name( std::string_view name );

/*! \brief Positive integer or infinity. */
class cap
{
public:
  constexpr cap() = default;
  constexpr explicit cap( unsigned v ) : value_( v ) {}
  static constexpr cap infinite() { return cap( std::numeric_limits<unsigned>::max() ); }

  constexpr bool is_finite() const { return value_ != std::numeric_limits<unsigned>::max(); }
  constexpr unsigned value() const { return value_; }
  constexpr bool admits( unsigned x ) const { return x <= value_; }

  friend constexpr auto operator<=>( cap, cap ) = default;

private:
  unsigned value_ = std::numeric_limits<unsigned>::max();
};

enum class descriptor_kind : uint8_t
{
  empty,
  const0,
  const1,
  all_const,
  graded,
};

/*! \brief Canonical name of one of the listed classes.

  Graded classes store char_cap <= deg_cap, both >= 1.  The constants-only
  classes are never expressed as graded.
*/
class class_descriptor
{
public:
  static class_descriptor empty();
  static class_descriptor constant( bool value );
  static class_descriptor constants();
  static class_descriptor omega();
  /* normalizes char_cap to min(char_cap, deg_cap) */
  static class_descriptor graded( cap deg, cap chr, block b );

  descriptor_kind kind() const noexcept { return kind_; }
  bool is_graded() const noexcept { return kind_ == descriptor_kind::graded; }
  cap deg_cap() const noexcept { return deg_; }
  cap char_cap() const noexcept { return chr_; }
  block get_block() const noexcept { return block_; }

  /* is the X cap a real constraint (not implied by the degree cap) */
  bool has_char_constraint() const { return chr_ < deg_; }

  friend bool operator==( const class_descriptor&, const class_descriptor& ) = default;
  friend auto operator<=>( const class_descriptor&, const class_descriptor& ) = default;

private:
  class_descriptor() = default;

  descriptor_kind kind_ = descriptor_kind::empty;
  cap deg_;
  cap chr_;
  block block_ = block::all;
};

bool descriptor_member( const class_descriptor& d, const signature& s );
bool descriptor_member( const class_descriptor& d, const bool_fn& f );
bool descriptor_member( const class_descriptor& d, word t, unsigned arity );

class_descriptor descriptor_meet( const class_descriptor& a, const class_descriptor& b );
bool descriptor_leq( const class_descriptor& a, const class_descriptor& b );

/* image of the class under f -> f + 1 */
class_descriptor descriptor_complement( const class_descriptor& d );

/* display name, e.g. "D3 ∩ X1 ∩ C0E0" */
std::string descriptor_name( const class_descriptor& d );

/* ASCII name accepted back by parse_descriptor, e.g. "D3&X1&B00" */
std::string descriptor_code( const class_descriptor& d );

/*! \brief Parses '&'- or '∩'-separated constraints and returns their meet.

  Tokens: Omega/Ω/All, Empty/∅, D0, Dk:N, D:N, DN, Xk:N, X:N, XN, block
  names (B00.., C0.., EQ/Even, NEQ/Odd, ALL) and display block names such as
  C0E1.  X0 means reflexive functions, which is X1 ∩ EQ.
*/
class_descriptor parse_descriptor( std::string_view text );

/* basis, as ANF words, of the space cut out by the degree and X caps (graded, n <= 6) */
std::vector<word> descriptor_kernel( const class_descriptor& d, unsigned arity );

/* number of members of arity n (n <= 6) */
uint64_t descriptor_slice_size( const class_descriptor& d, unsigned arity );

/*! \brief Canonical descriptors with finite caps up to the bounds.

  Degree caps range over 1..deg_bound and infinity, X caps over
  1..char_bound and infinity (X cap below the degree cap), every block,
  plus the four constant classes.
*/
std::vector<class_descriptor> enumerate_descriptors( unsigned deg_bound, unsigned char_bound );

} // namespace lcstab
