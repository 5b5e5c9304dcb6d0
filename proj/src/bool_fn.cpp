//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/bool_fn.hpp>
#include <lcstab/error.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace lcstab
{

namespace
{

std::size_t words_for( unsigned arity )
{
  return arity <= 6u ? 1u : std::size_t{ 1 } << ( arity - 6u );
}

void check_arity( unsigned arity )
{
  if ( arity == 0u || arity > max_arity )
  {
    throw error( error_code::out_of_range,
                 "arity " + std::to_string( arity ) + " outside 1.." + std::to_string( max_arity ) );
  }
}

void moebius_words( std::vector<word>& t, unsigned n )
{
  const auto inner = std::min( n, 6u );
  for ( auto& w : t )
  {
    w = kernels::moebius( w, inner );
  }
  for ( auto i = 6u; i < n; ++i )
  {
    const std::size_t stride = std::size_t{ 1 } << ( i - 6u );
    for ( std::size_t j = 0; j < t.size(); ++j )
    {
      if ( j & stride )
        t[j] ^= t[j - stride];
    }
  }
}

std::vector<word> reverse_words( const std::vector<word>& t, unsigned n )
{
  if ( n <= 6u )
    return { kernels::reverse( t[0], n ) };
  std::vector<word> r( t.rbegin(), t.rend() );
  for ( auto& w : r )
  {
    w = kernels::reverse( w, 6u );
  }
  return r;
}

int polydeg_words( const std::vector<word>& anf )
{
  int best = -1;
  for ( std::size_t j = 0; j < anf.size(); ++j )
  {
    if ( anf[j] == 0u )
      continue;
    best = std::max( best, std::popcount( j ) + kernels::polydeg( anf[j] ) );
  }
  return best;
}

std::vector<word> xor_words( const std::vector<word>& a, const std::vector<word>& b )
{
  std::vector<word> r( a.size() );
  for ( std::size_t j = 0; j < a.size(); ++j )
  {
    r[j] = a[j] ^ b[j];
  }
  return r;
}

void set_bit( std::vector<word>& t, uint64_t b )
{
  t[b >> 6u] |= word{ 1 } << ( b & 63u );
}

bool get_bit( const std::vector<word>& t, uint64_t b )
{
  return ( t[b >> 6u] >> ( b & 63u ) ) & 1u;
}

} // namespace

/* monomial_set */

bool monomial_less( monomial a, monomial b )
{
  const auto sa = std::popcount( a ), sb = std::popcount( b );
  if ( sa != sb )
    return sa < sb;
  /* same size: the first differing variable decides, smaller index first */
  while ( a != b )
  {
    const auto la = std::countr_zero( a ), lb = std::countr_zero( b );
    if ( la != lb )
      return la < lb;
    a &= a - 1u;
    b &= b - 1u;
  }
  return false;
}

monomial_set::monomial_set( unsigned arity, std::vector<monomial> monomials )
    : arity_( arity ), monomials_( std::move( monomials ) )
{
  check_arity( arity );
  for ( auto m : monomials_ )
  {
    if ( arity < 32u && ( m >> arity ) != 0u )
      throw error( error_code::out_of_range, "monomial uses a variable beyond the arity" );
  }
  std::sort( monomials_.begin(), monomials_.end(), monomial_less );
  if ( std::adjacent_find( monomials_.begin(), monomials_.end() ) != monomials_.end() )
    throw error( error_code::invalid_argument, "duplicate monomial" );
}

bool monomial_set::contains( monomial m ) const
{
  return std::binary_search( monomials_.begin(), monomials_.end(), m, monomial_less );
}

/* minor_map */

minor_map::minor_map( unsigned target_arity, std::vector<unsigned> images )
    : target_( target_arity ), images_( std::move( images ) )
{
  if ( images_.empty() )
    throw error( error_code::invalid_argument, "minor map needs a nonempty domain" );
  check_arity( target_arity );
  check_arity( static_cast<unsigned>( images_.size() ) );
  for ( auto v : images_ )
  {
    if ( v == 0u || v > target_arity )
      throw error( error_code::out_of_range, "minor map image " + std::to_string( v ) + " outside 1.." +
                                                 std::to_string( target_arity ) );
  }
}

minor_map minor_map::identity( unsigned n )
{
  std::vector<unsigned> images( n );
  for ( auto i = 0u; i < n; ++i )
    images[i] = i + 1u;
  return { n, std::move( images ) };
}

minor_map minor_map::identification( unsigned n, unsigned i, unsigned j )
{
  if ( n < 2u || i == 0u || i >= j || j > n )
    throw error( error_code::out_of_range, "identification needs 1 <= i < j <= n" );
  std::vector<unsigned> images( n );
  for ( auto m = 1u; m <= n; ++m )
    images[m - 1u] = m < j ? m : ( m == j ? i : m - 1u );
  return { n - 1u, std::move( images ) };
}

minor_map compose( const minor_map& tau, const minor_map& sigma )
{
  if ( sigma.target_arity() != tau.source_arity() )
    throw error( error_code::arity_mismatch, "minor maps are not composable" );
  std::vector<unsigned> images( sigma.source_arity() );
  for ( auto i = 1u; i <= sigma.source_arity(); ++i )
    images[i - 1u] = tau( sigma( i ) );
  return { tau.target_arity(), std::move( images ) };
}

/* bool_fn */

bool_fn::bool_fn( unsigned arity, std::vector<word> table )
    : arity_( arity ), table_( std::move( table ) )
{
  check_arity( arity );
  if ( table_.size() != words_for( arity ) )
    throw error( error_code::invalid_argument, "truth table length does not match arity" );
  if ( arity < 6u && ( table_[0] & ~kernels::full_mask( arity ) ) )
    throw error( error_code::invalid_argument, "truth table has bits beyond 2^arity" );
  anf_ = table_;
  moebius_words( anf_, arity_ );
}

bool_fn bool_fn::from_word( unsigned arity, word table )
{
  if ( arity > 6u )
    throw error( error_code::out_of_range, "single-word tables hold at most 6 arguments" );
  return { arity, { table } };
}

bool_fn bool_fn::constant( unsigned arity, bool value )
{
  check_arity( arity );
  std::vector<word> t( words_for( arity ), value ? ~word{ 0 } : word{ 0 } );
  if ( arity < 6u )
    t[0] &= kernels::full_mask( arity );
  return { arity, std::move( t ) };
}

bool_fn bool_fn::projection( unsigned arity, unsigned i )
{
  check_arity( arity );
  if ( i == 0u || i > arity )
    throw error( error_code::out_of_range, "projection index outside 1..arity" );
  std::vector<word> t( words_for( arity ) );
  for ( std::size_t j = 0; j < t.size(); ++j )
  {
    if ( i <= 6u )
      t[j] = kernels::var( std::min( arity, 6u ), i - 1u );
    else
      t[j] = ( j >> ( i - 7u ) ) & 1u ? ~word{ 0 } : word{ 0 };
  }
  return { arity, std::move( t ) };
}

bool bool_fn::value( uint64_t point ) const
{
  if ( point >= num_points() )
    throw error( error_code::out_of_range, "point outside the domain" );
  return get_bit( table_, point );
}

word bool_fn::table_word() const
{
  if ( arity_ > 6u )
    throw error( error_code::out_of_range, "table does not fit a single word" );
  return table_[0];
}

word bool_fn::anf_word() const
{
  if ( arity_ > 6u )
    throw error( error_code::out_of_range, "table does not fit a single word" );
  return anf_[0];
}

bool bool_fn::is_constant() const
{
  for ( std::size_t j = 1; j < anf_.size(); ++j )
  {
    if ( anf_[j] )
      return false;
  }
  return ( anf_[0] & ~word{ 1 } ) == 0u;
}

std::strong_ordering operator<=>( const bool_fn& a, const bool_fn& b )
{
  if ( auto c = a.arity_ <=> b.arity_; c != 0 )
    return c;
  /* compare as integers, most significant word first */
  for ( std::size_t j = a.table_.size(); j-- > 0; )
  {
    if ( auto c = a.table_[j] <=> b.table_[j]; c != 0 )
      return c;
  }
  return std::strong_ordering::equal;
}

/* operations */

monomial_set anf( const bool_fn& f )
{
  std::vector<monomial> ms;
  const auto& t = f.anf_table();
  for ( std::size_t j = 0; j < t.size(); ++j )
  {
    for ( auto w = t[j]; w; w &= w - 1u )
    {
      ms.push_back( static_cast<monomial>( ( j << 6u ) | static_cast<unsigned>( std::countr_zero( w ) ) ) );
    }
  }
  return { f.arity(), std::move( ms ) };
}

bool_fn from_anf( const monomial_set& m )
{
  std::vector<word> t( words_for( m.arity() ) );
  for ( auto s : m.monomials() )
    set_bit( t, s );
  moebius_words( t, m.arity() );
  return { m.arity(), std::move( t ) };
}

bool_fn minor( const bool_fn& f, const minor_map& sigma )
{
  if ( sigma.source_arity() != f.arity() )
    throw error( error_code::arity_mismatch, "minor map source arity differs from function arity" );
  const auto n = f.arity(), m = sigma.target_arity();
  if ( n <= 6u && m <= 6u )
  {
    std::vector<unsigned> s( n );
    for ( auto i = 0u; i < n; ++i )
      s[i] = sigma( i + 1u ) - 1u;
    return bool_fn::from_word( m, kernels::minor( f.table_word(), n, s, m ) );
  }
  std::vector<word> t( words_for( m ) );
  for ( uint64_t a = 0; a < ( uint64_t{ 1 } << m ); ++a )
  {
    uint64_t b = 0;
    for ( auto i = 0u; i < n; ++i )
      b |= ( ( a >> ( sigma( i + 1u ) - 1u ) ) & 1u ) << i;
    if ( get_bit( f.table(), b ) )
      set_bit( t, a );
  }
  return { m, std::move( t ) };
}

monomial_set minor_monomials( const monomial_set& m, const minor_map& sigma )
{
  if ( sigma.source_arity() != m.arity() )
    throw error( error_code::arity_mismatch, "minor map source arity differs from monomial arity" );
  std::vector<monomial> images;
  images.reserve( m.size() );
  for ( auto s : m.monomials() )
  {
    monomial img = 0u;
    for ( auto v = s; v; v &= v - 1u )
      img |= monomial{ 1 } << ( sigma( static_cast<unsigned>( std::countr_zero( v ) ) + 1u ) - 1u );
    images.push_back( img );
  }
  /* keep images hit an odd number of times */
  std::sort( images.begin(), images.end() );
  std::vector<monomial> kept;
  for ( std::size_t i = 0; i < images.size(); )
  {
    auto j = i;
    while ( j < images.size() && images[j] == images[i] )
      ++j;
    if ( ( j - i ) & 1u )
      kept.push_back( images[i] );
    i = j;
  }
  return { sigma.target_arity(), std::move( kept ) };
}

bool_fn add( const bool_fn& f, const bool_fn& g )
{
  if ( f.arity() != g.arity() )
    throw error( error_code::arity_mismatch, "sum of functions of different arities" );
  return { f.arity(), xor_words( f.table(), g.table() ) };
}

negation_triple negations( const bool_fn& f )
{
  auto outer = add( f, bool_fn::constant( f.arity(), true ) );
  bool_fn inner( f.arity(), reverse_words( f.table(), f.arity() ) );
  auto dual = add( inner, bool_fn::constant( f.arity(), true ) );
  return { std::move( outer ), std::move( inner ), std::move( dual ) };
}

bool_fn negate_argument( const bool_fn& f, unsigned i )
{
  if ( i == 0u || i > f.arity() )
    throw error( error_code::out_of_range, "argument index outside 1..arity" );
  std::vector<word> t( f.table().size() );
  const uint64_t flip = uint64_t{ 1 } << ( i - 1u );
  for ( uint64_t b = 0; b < f.num_points(); ++b )
  {
    if ( get_bit( f.table(), b ^ flip ) )
      set_bit( t, b );
  }
  return { f.arity(), std::move( t ) };
}

bool characteristic( monomial s, const bool_fn& f )
{
  if ( f.arity() < 32u && ( s >> f.arity() ) != 0u )
    throw error( error_code::out_of_range, "set is not a subset of the arguments" );
  auto count = 0u;
  for ( const auto poly = anf( f ); auto t : poly.monomials() )
  {
    if ( t != s && ( t & s ) == s )
      ++count;
  }
  return count & 1u;
}

int polydeg( const bool_fn& f )
{
  return polydeg_words( f.anf_table() );
}

signature compute_signature( word table, unsigned arity )
{
  signature s;
  s.degree = kernels::degree( table, arity );
  s.charrank = kernels::charrank( table, arity );
  s.c0 = kernels::value_at_zero( table );
  s.c1 = kernels::value_at_ones( table, arity );
  s.parity = kernels::parity( table, arity );
  return s;
}

signature compute_signature( const bool_fn& f )
{
  if ( f.arity() <= 6u )
    return compute_signature( f.table_word(), f.arity() );
  signature s;
  s.degree = static_cast<unsigned>( std::max( polydeg( f ), 0 ) );
  auto phi = xor_words( f.table(), reverse_words( f.table(), f.arity() ) );
  moebius_words( phi, f.arity() );
  s.charrank = static_cast<unsigned>( polydeg_words( phi ) + 1 );
  s.c0 = f.value_at_zero();
  s.c1 = f.value_at_ones();
  s.parity = s.c0 != s.c1;
  return s;
}

bool_fn derivative( const bool_fn& f, unsigned i )
{
  if ( i == 0u || i > f.arity() )
    throw error( error_code::out_of_range, "argument index outside 1..arity" );
  const monomial bit = monomial{ 1 } << ( i - 1u );
  std::vector<monomial> ms;
  for ( const auto poly = anf( f ); auto s : poly.monomials() )
  {
    if ( s & bit )
      ms.push_back( s & ~bit );
  }
  return from_anf( monomial_set( f.arity(), std::move( ms ) ) );
}

bool_fn monster( unsigned k )
{
  std::vector<unsigned> support( k + 1u );
  for ( auto i = 0u; i <= k; ++i )
    support[i] = i + 1u;
  return monster( k, k + 1u, support );
}

bool_fn monster( unsigned k, unsigned arity, std::span<const unsigned> support )
{
  if ( support.size() != k + 1u )
    throw error( error_code::invalid_argument, "monster W_k needs k + 1 support positions" );
  check_arity( arity );
  monomial full = 0u;
  for ( auto p : support )
  {
    if ( p == 0u || p > arity )
      throw error( error_code::out_of_range, "support position outside 1..arity" );
    if ( full & ( monomial{ 1 } << ( p - 1u ) ) )
      throw error( error_code::invalid_argument, "repeated support position" );
    full |= monomial{ 1 } << ( p - 1u );
  }
  std::vector<monomial> ms;
  for ( monomial s = ( full - 1u ) & full; s; s = ( s - 1u ) & full )
  {
    if ( s != full )
      ms.push_back( s );
  }
  return from_anf( monomial_set( arity, std::move( ms ) ) );
}

bool_fn compose( const bool_fn& g, std::span<const bool_fn> inner )
{
  if ( inner.size() != g.arity() )
    throw error( error_code::arity_mismatch, "number of inner functions differs from outer arity" );
  const auto m = inner.front().arity();
  for ( const auto& h : inner )
  {
    if ( h.arity() != m )
      throw error( error_code::arity_mismatch, "inner functions have different arities" );
  }
  if ( g.arity() <= 6u && m <= 6u )
  {
    std::vector<word> ws;
    for ( const auto& h : inner )
      ws.push_back( h.table_word() );
    return bool_fn::from_word( m, kernels::compose( g.table_word(), g.arity(), ws, m ) );
  }
  std::vector<word> t( words_for( m ) );
  for ( uint64_t a = 0; a < ( uint64_t{ 1 } << m ); ++a )
  {
    uint64_t b = 0;
    for ( auto i = 0u; i < g.arity(); ++i )
      b |= uint64_t{ inner[i].value( a ) } << i;
    if ( g.value( b ) )
      set_bit( t, a );
  }
  return { m, std::move( t ) };
}

std::vector<unsigned> essential_variables( const bool_fn& f )
{
  /* x_i is essential iff it occurs in some monomial */
  monomial used = 0u;
  for ( const auto poly = anf( f ); auto s : poly.monomials() )
    used |= s;
  std::vector<unsigned> vars;
  for ( auto i = 0u; i < f.arity(); ++i )
  {
    if ( used & ( monomial{ 1 } << i ) )
      vars.push_back( i + 1u );
  }
  return vars;
}

bool equivalent_up_to_fictitious( const bool_fn& f, const bool_fn& g )
{
  const auto ef = essential_variables( f ), eg = essential_variables( g );
  if ( ef.size() != eg.size() )
    return false;
  if ( ef.empty() )
    return f.value_at_zero() == g.value_at_zero();
  auto strip = [&]( const bool_fn& h, const std::vector<unsigned>& ess ) {
    /* minor onto the essential positions, in order; the rest go anywhere */
    std::vector<unsigned> images( h.arity(), 1u );
    for ( auto i = 0u; i < ess.size(); ++i )
      images[ess[i] - 1u] = i + 1u;
    return minor( h, minor_map( static_cast<unsigned>( ess.size() ), std::move( images ) ) );
  };
  return strip( f, ef ) == strip( g, eg );
}

} // namespace lcstab
