//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/descriptor.hpp>
#include <lcstab/error.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace lcstab
{

namespace
{

struct block_names
{
  block b;
  std::string_view code;
  std::string_view display;
};

constexpr std::array<block_names, 11> names = { {
    { block::b00, "B00", "C0E0" },
    { block::b01, "B01", "C0E1" },
    { block::b10, "B10", "C1E0" },
    { block::b11, "B11", "C1E1" },
    { block::c0, "C0", "C0" },
    { block::c1, "C1", "C1" },
    { block::e0, "E0", "E0" },
    { block::e1, "E1", "E1" },
    { block::eq, "EQ", "Even" },
    { block::neq, "NEQ", "Odd" },
    { block::all, "ALL", "Ω" },
} };

std::string upper( std::string_view s )
{
  std::string r;
  for ( auto c : s )
    r += static_cast<char>( std::toupper( static_cast<unsigned char>( c ) ) );
  return r;
}

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    s.remove_suffix( 1 );
  return s;
}

unsigned effective( cap c, unsigned n )
{
  return c.is_finite() ? std::min( c.value(), n ) : n;
}

} // namespace

std::optional<block> block_from_mask( uint8_t m )
{
  for ( auto b : all_blocks )
  {
    if ( mask( b ) == m )
      return b;
  }
  return std::nullopt;
}

block block_hull( uint8_t profiles )
{
  if ( auto b = block_from_mask( profiles ) )
    return *b;
  return block::all;
}

block complement( block b )
{
  uint8_t m = 0;
  for ( auto p = 0u; p < 4u; ++p )
  {
    if ( admits( b, p ) )
      m |= static_cast<uint8_t>( 1u << ( 3u - p ) );
  }
  return *block_from_mask( m );
}

std::string_view block_display_name( block b )
{
  for ( const auto& n : names )
  {
    if ( n.b == b )
      return n.display;
  }
  return "?";
}

std::string_view block_code( block b )
{
  for ( const auto& n : names )
  {
    if ( n.b == b )
      return n.code;
  }
  return "?";
}

std::optional<block> block_from_name( std::string_view name )
{
  const auto u = upper( trim( name ) );
  for ( const auto& n : names )
  {
    if ( u == n.code || u == upper( n.display ) )
      return n.b;
  }
  if ( u == "EVEN" )
    return block::eq;
  if ( u == "ODD" )
    return block::neq;
  return std::nullopt;
}

/* class_descriptor */

class_descriptor class_descriptor::empty()
{
  return {};
}

class_descriptor class_descriptor::constant( bool value )
{
  class_descriptor d;
  d.kind_ = value ? descriptor_kind::const1 : descriptor_kind::const0;
  return d;
}

class_descriptor class_descriptor::constants()
{
  class_descriptor d;
  d.kind_ = descriptor_kind::all_const;
  return d;
}

class_descriptor class_descriptor::omega()
{
  return graded( cap::infinite(), cap::infinite(), block::all );
}

class_descriptor class_descriptor::graded( cap deg, cap chr, block b )
{
  if ( deg.value() == 0u || chr.value() == 0u )
    throw error( error_code::invalid_argument, "graded classes need caps of at least 1" );
  class_descriptor d;
  d.kind_ = descriptor_kind::graded;
  d.deg_ = deg;
  d.chr_ = std::min( chr, deg );
  d.block_ = b;
  return d;
}

bool descriptor_member( const class_descriptor& d, const signature& s )
{
  switch ( d.kind() )
  {
  case descriptor_kind::empty:
    return false;
  case descriptor_kind::const0:
    return s.degree == 0u && !s.c0;
  case descriptor_kind::const1:
    return s.degree == 0u && s.c0;
  case descriptor_kind::all_const:
    return s.degree == 0u;
  case descriptor_kind::graded:
    return d.deg_cap().admits( s.degree ) && d.char_cap().admits( s.charrank ) &&
           admits( d.get_block(), s.profile() );
  }
  return false;
}

bool descriptor_member( const class_descriptor& d, const bool_fn& f )
{
  return descriptor_member( d, compute_signature( f ) );
}

bool descriptor_member( const class_descriptor& d, word t, unsigned arity )
{
  return descriptor_member( d, compute_signature( t, arity ) );
}

namespace
{

bool contains_constant( const class_descriptor& d, bool a )
{
  signature s;
  s.c0 = s.c1 = a;
  return descriptor_member( d, s );
}

} // namespace

class_descriptor descriptor_meet( const class_descriptor& a, const class_descriptor& b )
{
  if ( a.is_graded() && b.is_graded() )
  {
    const auto m = static_cast<uint8_t>( mask( a.get_block() ) & mask( b.get_block() ) );
    if ( m == 0u )
      return class_descriptor::empty();
    return class_descriptor::graded( std::min( a.deg_cap(), b.deg_cap() ),
                                     std::min( a.char_cap(), b.char_cap() ), *block_from_mask( m ) );
  }
  /* at least one side only has constants */
  const bool has0 = contains_constant( a, false ) && contains_constant( b, false );
  const bool has1 = contains_constant( a, true ) && contains_constant( b, true );
  if ( has0 && has1 )
    return class_descriptor::constants();
  if ( has0 )
    return class_descriptor::constant( false );
  if ( has1 )
    return class_descriptor::constant( true );
  return class_descriptor::empty();
}

bool descriptor_leq( const class_descriptor& a, const class_descriptor& b )
{
  if ( a.kind() == descriptor_kind::empty )
    return true;
  if ( !a.is_graded() )
  {
    const bool need0 = contains_constant( a, false ), need1 = contains_constant( a, true );
    return ( !need0 || contains_constant( b, false ) ) && ( !need1 || contains_constant( b, true ) );
  }
  if ( !b.is_graded() )
    return false;
  return a.deg_cap() <= b.deg_cap() && a.char_cap() <= b.char_cap() &&
         block_leq( a.get_block(), b.get_block() );
}

class_descriptor descriptor_complement( const class_descriptor& d )
{
  switch ( d.kind() )
  {
  case descriptor_kind::const0:
    return class_descriptor::constant( true );
  case descriptor_kind::const1:
    return class_descriptor::constant( false );
  case descriptor_kind::graded:
    return class_descriptor::graded( d.deg_cap(), d.char_cap(), complement( d.get_block() ) );
  default:
    return d;
  }
}

std::string descriptor_name( const class_descriptor& d )
{
  switch ( d.kind() )
  {
  case descriptor_kind::empty:
    return "Empty";
  case descriptor_kind::const0:
    return "D0 ∩ C0";
  case descriptor_kind::const1:
    return "D0 ∩ C1";
  case descriptor_kind::all_const:
    return "D0";
  case descriptor_kind::graded:
    break;
  }
  std::vector<std::string> parts;
  if ( d.deg_cap().is_finite() )
    parts.push_back( "D" + std::to_string( d.deg_cap().value() ) );
  if ( d.has_char_constraint() )
    parts.push_back( "X" + std::to_string( d.char_cap().value() ) );
  if ( d.get_block() != block::all )
    parts.emplace_back( block_display_name( d.get_block() ) );
  if ( parts.empty() )
    return "Ω";
  std::string out = parts[0];
  for ( std::size_t i = 1; i < parts.size(); ++i )
    out += " ∩ " + parts[i];
  return out;
}

std::string descriptor_code( const class_descriptor& d )
{
  switch ( d.kind() )
  {
  case descriptor_kind::empty:
    return "Empty";
  case descriptor_kind::const0:
    return "D0&C0";
  case descriptor_kind::const1:
    return "D0&C1";
  case descriptor_kind::all_const:
    return "D0";
  case descriptor_kind::graded:
    break;
  }
  std::vector<std::string> parts;
  if ( d.deg_cap().is_finite() )
    parts.push_back( "D" + std::to_string( d.deg_cap().value() ) );
  if ( d.has_char_constraint() )
    parts.push_back( "X" + std::to_string( d.char_cap().value() ) );
  if ( d.get_block() != block::all )
    parts.emplace_back( block_code( d.get_block() ) );
  if ( parts.empty() )
    return "Omega";
  std::string out = parts[0];
  for ( std::size_t i = 1; i < parts.size(); ++i )
    out += "&" + parts[i];
  return out;
}

namespace
{

class_descriptor parse_token( std::string_view token, std::size_t offset )
{
  const auto u = upper( token );
  if ( u.empty() )
    throw parse_error( "empty class constraint", offset );
  if ( u == "OMEGA" || token == "Ω" )
    return class_descriptor::omega();
  if ( u == "EMPTY" || token == "∅" )
    return class_descriptor::empty();
  if ( auto b = block_from_name( token ) )
    return class_descriptor::graded( cap::infinite(), cap::infinite(), *b );

  if ( u[0] == 'D' || u[0] == 'X' )
  {
    std::string_view rest( u );
    rest.remove_prefix( 1 );
    if ( rest.starts_with( "K:" ) )
      rest.remove_prefix( 2 );
    else if ( rest.starts_with( ":" ) )
      rest.remove_prefix( 1 );
    unsigned v = 0;
    const auto* first = rest.data();
    const auto* last = rest.data() + rest.size();
    auto [ptr, ec] = std::from_chars( first, last, v );
    if ( rest.empty() || ec != std::errc() || ptr != last )
      throw parse_error( "expected a number in '" + std::string( token ) + "'",
                         offset + static_cast<std::size_t>( token.size() - rest.size() ) );
    if ( u[0] == 'D' )
    {
      if ( v == 0u )
        return class_descriptor::constants();
      return class_descriptor::graded( cap( v ), cap( v ), block::all );
    }
    if ( v == 0u )
      return class_descriptor::graded( cap::infinite(), cap( 1u ), block::eq );
    return class_descriptor::graded( cap::infinite(), cap( v ), block::all );
  }
  throw parse_error( "unknown class constraint '" + std::string( token ) + "'", offset );
}

} // namespace

class_descriptor parse_descriptor( std::string_view text )
{
  static constexpr std::string_view cap_sign = "∩";
  std::optional<class_descriptor> result;
  std::size_t start = 0;
  for ( ;; )
  {
    std::size_t end = start, sep = 0;
    while ( end < text.size() )
    {
      if ( text[end] == '&' )
      {
        sep = 1;
        break;
      }
      if ( text.substr( end ).starts_with( cap_sign ) )
      {
        sep = cap_sign.size();
        break;
      }
      ++end;
    }
    const auto raw = trim( text.substr( start, end - start ) );
    const auto at = raw.empty() ? start : static_cast<std::size_t>( raw.data() - text.data() );
    const auto d = parse_token( raw, at );
    result = result ? descriptor_meet( *result, d ) : d;
    if ( end >= text.size() )
      break;
    start = end + sep;
  }
  return *result;
}

std::vector<word> descriptor_kernel( const class_descriptor& d, unsigned n )
{
  if ( n == 0u || n > 6u )
    throw error( error_code::out_of_range, "descriptor spaces are computed for arities 1..6" );
  if ( !d.is_graded() )
    throw error( error_code::invalid_argument, "only graded classes span a space" );

  /* the degree and X constraints cut out a linear subspace of ANF vectors */
  const auto deg = effective( d.deg_cap(), n );
  const auto chr = effective( d.char_cap(), n + 1u );
  const auto points = 1u << n;
  const word high = ~kernels::degree_masks[chr - 1u];

  std::vector<std::pair<word, word>> pivots; /* (reduced image, combination) */
  std::vector<word> kernel;
  for ( auto s = 0u; s < points; ++s )
  {
    if ( static_cast<unsigned>( std::popcount( s ) ) > deg )
      continue;
    const word e = word{ 1 } << s;
    const auto t = kernels::moebius( e, n );
    word img = kernels::moebius( t ^ kernels::reverse( t, n ), n ) & high & kernels::full_mask( n );
    word comb = e;
    for ( const auto& [pv, pc] : pivots )
    {
      if ( img & ( word{ 1 } << std::countr_zero( pv ) ) )
      {
        img ^= pv;
        comb ^= pc;
      }
    }
    if ( img == 0u )
    {
      kernel.push_back( comb );
      continue;
    }
    /* keep pivots reduced so the lowest bit of each is unique */
    for ( auto& [pv, pc] : pivots )
    {
      if ( pv & ( word{ 1 } << std::countr_zero( img ) ) )
      {
        pv ^= img;
        pc ^= comb;
      }
    }
    pivots.emplace_back( img, comb );
  }
  return kernel;
}

uint64_t descriptor_slice_size( const class_descriptor& d, unsigned n )
{
  if ( n == 0u || n > 6u )
    throw error( error_code::out_of_range, "slice sizes are computed for arities 1..6" );
  switch ( d.kind() )
  {
  case descriptor_kind::empty:
    return 0u;
  case descriptor_kind::const0:
  case descriptor_kind::const1:
    return 1u;
  case descriptor_kind::all_const:
    return 2u;
  case descriptor_kind::graded:
    break;
  }

  const auto kernel = descriptor_kernel( d, n );
  /* profile functionals: c0 = constant coefficient, c1 = sum of all */
  uint8_t span = 1u; /* profile 0 is always reachable */
  for ( auto v : kernel )
  {
    const unsigned p = ( ( v & 1u ) ? 2u : 0u ) | ( ( std::popcount( v ) & 1 ) ? 1u : 0u );
    uint8_t next = span;
    for ( auto q = 0u; q < 4u; ++q )
    {
      if ( span & ( 1u << q ) )
        next |= static_cast<uint8_t>( 1u << ( q ^ p ) );
    }
    span = next;
  }
  const auto reach = static_cast<unsigned>( std::popcount( span ) );
  const uint64_t per_profile = ( uint64_t{ 1 } << kernel.size() ) / reach;
  uint64_t total = 0;
  for ( auto q = 0u; q < 4u; ++q )
  {
    if ( ( span & ( 1u << q ) ) && admits( d.get_block(), q ) )
      total += per_profile;
  }
  return total;
}

std::vector<class_descriptor> enumerate_descriptors( unsigned deg_bound, unsigned char_bound )
{
  std::vector<class_descriptor> out = { class_descriptor::empty(), class_descriptor::constant( false ),
                                        class_descriptor::constant( true ), class_descriptor::constants() };
  if ( deg_bound == 0u || char_bound == 0u )
    return out;
  std::vector<std::pair<cap, cap>> caps;
  for ( auto dv = 1u; dv <= deg_bound + 1u; ++dv )
  {
    const auto deg = dv <= deg_bound ? cap( dv ) : cap::infinite();
    for ( auto cv = 1u; cv <= char_bound && cap( cv ) < deg; ++cv )
      caps.emplace_back( deg, cap( cv ) );
    caps.emplace_back( deg, deg );
  }
  for ( auto [deg, chr] : caps )
  {
    for ( auto b : all_blocks )
      out.push_back( class_descriptor::graded( deg, chr, b ) );
  }
  return out;
}

} // namespace lcstab
