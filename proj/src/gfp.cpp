//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/error.hpp>
#include <lcstab/gfp.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <optional>

namespace lcstab
{

namespace
{

uint64_t checked_power( unsigned p, unsigned n, uint64_t bound, std::string_view what )
{
  uint64_t r = 1;
  for ( auto i = 0u; i < n; ++i )
  {
    r *= p;
    if ( r > bound )
      throw error( error_code::limit_exceeded, std::string( what ) + " exceeds " + std::to_string( bound ) );
  }
  return r;
}

void check_prime( unsigned p )
{
  if ( !is_prime( p ) )
    throw error( error_code::invalid_argument, std::to_string( p ) + " is not prime" );
  if ( p > gfp_max_prime )
    throw error( error_code::limit_exceeded, "primes above " + std::to_string( gfp_max_prime ) + " are not supported" );
}

unsigned mul_mod( unsigned a, unsigned b, unsigned p )
{
  return ( a * b ) % p;
}

unsigned pow_mod( unsigned a, unsigned e, unsigned p )
{
  unsigned r = 1u % p;
  for ( auto i = 0u; i < e; ++i )
    r = mul_mod( r, a, p );
  return r;
}

unsigned inv_mod( unsigned a, unsigned p )
{
  return pow_mod( a, p - 2u, p );
}

using matrix = std::vector<std::vector<unsigned>>;

/* V[x][e] = x^e with 0^0 = 1 */
matrix vandermonde( unsigned p )
{
  matrix v( p, std::vector<unsigned>( p ) );
  for ( auto x = 0u; x < p; ++x )
  {
    for ( auto e = 0u; e < p; ++e )
      v[x][e] = pow_mod( x, e, p );
  }
  return v;
}

matrix invert( matrix a, unsigned p )
{
  const auto n = a.size();
  matrix inv( n, std::vector<unsigned>( n, 0u ) );
  for ( std::size_t i = 0; i < n; ++i )
    inv[i][i] = 1u;
  for ( std::size_t col = 0; col < n; ++col )
  {
    auto piv = col;
    while ( a[piv][col] == 0u )
      ++piv;
    std::swap( a[piv], a[col] );
    std::swap( inv[piv], inv[col] );
    const auto s = inv_mod( a[col][col], p );
    for ( std::size_t j = 0; j < n; ++j )
    {
      a[col][j] = mul_mod( a[col][j], s, p );
      inv[col][j] = mul_mod( inv[col][j], s, p );
    }
    for ( std::size_t r = 0; r < n; ++r )
    {
      if ( r == col || a[r][col] == 0u )
        continue;
      const auto f = a[r][col];
      for ( std::size_t j = 0; j < n; ++j )
      {
        a[r][j] = ( a[r][j] + p * p - mul_mod( f, a[col][j], p ) ) % p;
        inv[r][j] = ( inv[r][j] + p * p - mul_mod( f, inv[col][j], p ) ) % p;
      }
    }
  }
  return inv;
}

/* applies the p x p matrix along every axis */
std::vector<uint8_t> transform( std::span<const uint8_t> in, const matrix& t, unsigned p, unsigned n )
{
  std::vector<uint8_t> cur( in.begin(), in.end() );
  std::vector<unsigned> fiber( p );
  uint64_t stride = 1;
  for ( auto axis = 0u; axis < n; ++axis, stride *= p )
  {
    for ( uint64_t base = 0; base < cur.size(); ++base )
    {
      if ( ( base / stride ) % p != 0u )
        continue;
      for ( auto x = 0u; x < p; ++x )
        fiber[x] = cur[base + x * stride];
      for ( auto e = 0u; e < p; ++e )
      {
        unsigned acc = 0;
        for ( auto x = 0u; x < p; ++x )
          acc += t[e][x] * fiber[x];
        cur[base + e * stride] = static_cast<uint8_t>( acc % p );
      }
    }
  }
  return cur;
}

std::vector<unsigned> digits( uint64_t index, unsigned p, unsigned n )
{
  std::vector<unsigned> d( n );
  for ( auto i = 0u; i < n; ++i, index /= p )
    d[i] = static_cast<unsigned>( index % p );
  return d;
}

uint64_t table_code( const gfp_fn& f )
{
  uint64_t code = 0;
  for ( auto i = f.num_points(); i-- > 0u; )
    code = code * f.prime() + f.values()[i];
  return code;
}

gfp_fn from_code( uint64_t code, unsigned p, unsigned n )
{
  const auto points = checked_power( p, n, gfp_max_points, "table size" );
  std::vector<uint8_t> v( points );
  for ( auto& x : v )
  {
    x = static_cast<uint8_t>( code % p );
    code /= p;
  }
  return gfp_fn::from_values( p, n, std::move( v ) );
}

uint64_t slice_size( unsigned p, unsigned n )
{
  const auto points = checked_power( p, n, 64u, "table size" );
  return checked_power( p, static_cast<unsigned>( points ), gfp_max_slice, "closure slice" );
}

} // namespace

bool is_prime( unsigned p )
{
  if ( p < 2u )
    return false;
  for ( auto d = 2u; d * d <= p; ++d )
  {
    if ( p % d == 0u )
      return false;
  }
  return true;
}

gfp_fn::gfp_fn( unsigned p, unsigned n, std::vector<uint8_t> values, std::vector<uint8_t> coeffs )
    : p_( p ), n_( n ), values_( std::move( values ) ), coeffs_( std::move( coeffs ) )
{
}

gfp_fn gfp_fn::from_values( unsigned p, unsigned arity, std::vector<uint8_t> values )
{
  check_prime( p );
  const auto points = checked_power( p, arity, gfp_max_points, "table size" );
  if ( values.size() != points )
    throw error( error_code::arity_mismatch, "expected " + std::to_string( points ) + " values, got " +
                                                 std::to_string( values.size() ) );
  for ( auto v : values )
  {
    if ( v >= p )
      throw error( error_code::out_of_range, "value " + std::to_string( v ) + " outside GF(" + std::to_string( p ) + ")" );
  }
  auto coeffs = gfp_interpolate( values, p, arity );
  return { p, arity, std::move( values ), std::move( coeffs ) };
}

gfp_fn gfp_fn::from_coefficients( unsigned p, unsigned arity, std::vector<uint8_t> coeffs )
{
  check_prime( p );
  const auto points = checked_power( p, arity, gfp_max_points, "table size" );
  if ( coeffs.size() != points )
    throw error( error_code::arity_mismatch, "expected " + std::to_string( points ) + " coefficients" );
  for ( auto& c : coeffs )
    c = static_cast<uint8_t>( c % p );
  auto values = gfp_evaluate( coeffs, p, arity );
  return { p, arity, std::move( values ), std::move( coeffs ) };
}

gfp_fn gfp_fn::constant( unsigned p, unsigned arity, unsigned c )
{
  check_prime( p );
  const auto points = checked_power( p, arity, gfp_max_points, "table size" );
  return from_values( p, arity, std::vector<uint8_t>( points, static_cast<uint8_t>( c % p ) ) );
}

gfp_fn gfp_fn::projection( unsigned p, unsigned arity, unsigned i )
{
  check_prime( p );
  if ( i == 0u || i > arity )
    throw error( error_code::out_of_range, "projection index outside 1..arity" );
  const auto points = checked_power( p, arity, gfp_max_points, "table size" );
  std::vector<uint8_t> v( points );
  for ( uint64_t x = 0; x < points; ++x )
    v[x] = static_cast<uint8_t>( digits( x, p, arity )[i - 1u] );
  return from_values( p, arity, std::move( v ) );
}

bool operator==( const gfp_fn& a, const gfp_fn& b )
{
  return a.p_ == b.p_ && a.n_ == b.n_ && a.values_ == b.values_;
}

std::strong_ordering operator<=>( const gfp_fn& a, const gfp_fn& b )
{
  if ( auto c = a.p_ <=> b.p_; c != 0 )
    return c;
  if ( auto c = a.n_ <=> b.n_; c != 0 )
    return c;
  return a.values_ <=> b.values_;
}

std::vector<uint8_t> gfp_interpolate( std::span<const uint8_t> values, unsigned p, unsigned arity )
{
  check_prime( p );
  if ( values.size() != checked_power( p, arity, gfp_max_points, "table size" ) )
    throw error( error_code::arity_mismatch, "table length is not p^n" );
  return transform( values, invert( vandermonde( p ), p ), p, arity );
}

std::vector<uint8_t> gfp_evaluate( std::span<const uint8_t> coeffs, unsigned p, unsigned arity )
{
  check_prime( p );
  if ( coeffs.size() != checked_power( p, arity, gfp_max_points, "table size" ) )
    throw error( error_code::arity_mismatch, "coefficient count is not p^n" );
  return transform( coeffs, vandermonde( p ), p, arity );
}

unsigned gfp_degree( const gfp_fn& f )
{
  unsigned best = 0;
  const auto& c = f.coefficients();
  for ( uint64_t e = 0; e < c.size(); ++e )
  {
    if ( c[e] == 0u )
      continue;
    unsigned d = 0;
    for ( auto x : digits( e, f.prime(), f.arity() ) )
      d += x;
    best = std::max( best, d );
  }
  return best;
}

gfp_fn gfp_add( const gfp_fn& f, const gfp_fn& g )
{
  if ( f.prime() != g.prime() || f.arity() != g.arity() )
    throw error( error_code::arity_mismatch, "sum of functions over different fields or arities" );
  std::vector<uint8_t> v( f.num_points() );
  for ( std::size_t i = 0; i < v.size(); ++i )
    v[i] = static_cast<uint8_t>( ( f.values()[i] + g.values()[i] ) % f.prime() );
  return gfp_fn::from_values( f.prime(), f.arity(), std::move( v ) );
}

gfp_fn gfp_scale( const gfp_fn& f, unsigned c )
{
  std::vector<uint8_t> v( f.num_points() );
  for ( std::size_t i = 0; i < v.size(); ++i )
    v[i] = static_cast<uint8_t>( ( f.values()[i] * ( c % f.prime() ) ) % f.prime() );
  return gfp_fn::from_values( f.prime(), f.arity(), std::move( v ) );
}

gfp_fn gfp_minor( const gfp_fn& f, std::span<const unsigned> sigma, unsigned m )
{
  const auto p = f.prime(), n = f.arity();
  if ( sigma.size() != n )
    throw error( error_code::arity_mismatch, "minor map length differs from the arity" );
  for ( auto s : sigma )
  {
    if ( s == 0u || s > m )
      throw error( error_code::out_of_range, "minor map image outside 1..m" );
  }
  const auto points = checked_power( p, m, gfp_max_points, "table size" );
  std::vector<uint64_t> weight( n );
  for ( auto i = 0u; i < n; ++i )
    weight[i] = i == 0u ? 1u : weight[i - 1u] * p;
  std::vector<uint8_t> v( points );
  for ( uint64_t y = 0; y < points; ++y )
  {
    const auto d = digits( y, p, m );
    uint64_t x = 0;
    for ( auto i = 0u; i < n; ++i )
      x += d[sigma[i] - 1u] * weight[i];
    v[y] = f.values()[x];
  }
  return gfp_fn::from_values( p, m, std::move( v ) );
}

gfp_fn gfp_star( const gfp_fn& f, const gfp_fn& g )
{
  const auto p = f.prime(), n = f.arity(), m = g.arity();
  if ( p != g.prime() )
    throw error( error_code::arity_mismatch, "functions over different fields" );
  const auto k = n + m - 1u;
  const auto points = checked_power( p, k, gfp_max_points, "table size" );
  const auto inner_points = checked_power( p, m, gfp_max_points, "table size" );
  std::vector<uint8_t> v( points );
  for ( uint64_t y = 0; y < points; ++y )
  {
    const auto first = g.values()[y % inner_points];
    const auto rest = y / inner_points;
    v[y] = f.values()[first + p * rest];
  }
  return gfp_fn::from_values( p, k, std::move( v ) );
}

gfp_class gfp_classify( std::span<const gfp_fn> fs )
{
  if ( fs.empty() )
    return {};
  const auto p = fs.front().prime();
  unsigned m = 0;
  for ( const auto& f : fs )
  {
    if ( f.prime() != p )
      throw error( error_code::invalid_argument, "functions over different fields" );
    m = std::max( m, gfp_degree( f ) );
  }
  return { gfp_class::kind::degree, m };
}

std::string gfp_class_name( const gfp_class& c )
{
  switch ( c.k )
  {
  case gfp_class::kind::empty:
    return "Empty";
  case gfp_class::kind::degree:
    return "D" + std::to_string( c.m );
  case gfp_class::kind::omega:
    return "Ω";
  }
  return "";
}

gfp_family::gfp_family( unsigned p, unsigned cap ) : p_( p ), sizes_( cap, 0u )
{
  check_prime( p );
  for ( auto n = 1u; n <= cap; ++n )
    slices_.emplace_back( slice_size( p, n ), false );
}

bool gfp_family::contains( const gfp_fn& f ) const
{
  if ( f.prime() != p_ || f.arity() == 0u || f.arity() > cap() )
    return false;
  return slices_[f.arity() - 1u][table_code( f )];
}

bool gfp_family::insert( const gfp_fn& f )
{
  if ( f.prime() != p_ || f.arity() == 0u || f.arity() > cap() )
    throw error( error_code::out_of_range, "function outside the family's field or arity range" );
  auto bit = slices_[f.arity() - 1u][table_code( f )];
  if ( bit )
    return false;
  bit = true;
  ++sizes_[f.arity() - 1u];
  return true;
}

std::size_t gfp_family::size( unsigned arity ) const
{
  if ( arity == 0u || arity > cap() )
    throw error( error_code::out_of_range, "arity outside 1..cap" );
  return sizes_[arity - 1u];
}

std::vector<gfp_fn> gfp_family::members( unsigned arity ) const
{
  if ( arity == 0u || arity > cap() )
    throw error( error_code::out_of_range, "arity outside 1..cap" );
  std::vector<gfp_fn> out;
  const auto& s = slices_[arity - 1u];
  for ( uint64_t code = 0; code < s.size(); ++code )
  {
    if ( s[code] )
      out.push_back( from_code( code, p_, arity ) );
  }
  return out;
}

gfp_family gfp_closure_oracle( std::span<const gfp_fn> fs, unsigned p, unsigned cap )
{
  if ( p != 2u && p != 3u && p != 5u )
    throw error( error_code::limit_exceeded, "the closure oracle supports p in {2, 3, 5}" );
  gfp_family out( p, cap );
  if ( fs.empty() )
    return out;

  std::deque<gfp_fn> pending;
  for ( const auto& f : fs )
  {
    if ( f.prime() != p )
      throw error( error_code::invalid_argument, "generator over a different field" );
    if ( f.arity() == 0u || f.arity() > cap )
      throw error( error_code::limit_exceeded, "generator arity exceeds the closure cap" );
    pending.push_back( f );
  }
  /* constants come from composing c with any member */
  pending.push_back( gfp_fn::constant( p, 1u, 1u ) );

  std::vector<std::vector<gfp_fn>> members( cap + 1u );
  std::vector<gfp_fn> substitutes;
  substitutes.push_back( gfp_add( gfp_fn::projection( p, 2u, 1u ), gfp_fn::projection( p, 2u, 2u ) ) );
  for ( auto c = 0u; c < p; ++c )
  {
    substitutes.push_back( gfp_scale( gfp_fn::projection( p, 1u, 1u ), c ) );
    substitutes.push_back( gfp_fn::constant( p, 1u, c ) );
  }

  while ( !pending.empty() )
  {
    const auto t = std::move( pending.front() );
    pending.pop_front();
    const auto n = t.arity();
    /* each slice is a linear space; adding t extends it by all multiples */
    auto& ms = members[n];
    if ( ms.empty() )
    {
      ms.push_back( gfp_fn::constant( p, n, 0u ) );
      out.insert( ms.front() );
    }
    if ( out.contains( t ) )
      continue;
    if ( ms.size() * p > slice_size( p, n ) )
      throw error( error_code::limit_exceeded, "closure slice too large" );
    const auto old = ms.size();
    for ( auto c = 1u; c < p; ++c )
    {
      const auto ct = gfp_scale( t, c );
      for ( std::size_t k = 0; k < old; ++k )
        ms.push_back( gfp_add( ms[k], ct ) );
    }
    for ( const auto& s : ms )
      out.insert( s );

    /* minors and right substitutions are linear, so t's images suffice */
    for ( auto m = 1u; m <= cap; ++m )
    {
      std::vector<unsigned> sigma( n, 1u );
      for ( ;; )
      {
        pending.push_back( gfp_minor( t, sigma, m ) );
        auto i = n;
        while ( i > 0u && ++sigma[i - 1u] > m )
          sigma[--i] = 1u;
        if ( i == 0u )
          break;
      }
    }
    for ( const auto& g : substitutes )
    {
      if ( n + g.arity() - 1u <= cap )
        pending.push_back( gfp_star( t, g ) );
    }
  }
  return out;
}

gfp_family gfp_degree_family( unsigned p, unsigned k, unsigned cap )
{
  gfp_family out( p, cap );
  for ( auto n = 1u; n <= cap; ++n )
  {
    const auto count = slice_size( p, n );
    for ( uint64_t code = 0; code < count; ++code )
    {
      const auto f = from_code( code, p, n );
      if ( gfp_degree( f ) <= k )
        out.insert( f );
    }
  }
  return out;
}

/* literals */

namespace
{

class gfp_parser
{
public:
  gfp_parser( std::string_view text, std::size_t offset, unsigned p, unsigned n )
      : text_( text ), offset_( offset ), p_( p ), n_( n ), points_( checked_power( p, n, gfp_max_points, "table size" ) )
  {
  }

  std::vector<unsigned> parse()
  {
    auto v = sum();
    skip();
    if ( pos_ != text_.size() )
      fail( "unexpected character" );
    return v;
  }

private:
  [[noreturn]] void fail( const std::string& what ) const { throw parse_error( what, offset_ + pos_ ); }

  void skip()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
      ++pos_;
  }

  bool eat( char c )
  {
    skip();
    if ( pos_ < text_.size() && text_[pos_] == c )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned number()
  {
    skip();
    unsigned v = 0;
    const auto* b = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars( b, text_.data() + text_.size(), v );
    if ( ec != std::errc() )
      fail( "expected a number" );
    pos_ += static_cast<std::size_t>( ptr - b );
    return v;
  }

  std::vector<unsigned> constant( unsigned c ) const { return std::vector<unsigned>( points_, c % p_ ); }

  std::vector<unsigned> sum()
  {
    bool negate = eat( '-' );
    auto acc = constant( 0u );
    for ( ;; )
    {
      const auto t = product();
      for ( std::size_t i = 0; i < points_; ++i )
        acc[i] = ( acc[i] + ( negate ? p_ - t[i] : t[i] ) ) % p_;
      if ( eat( '+' ) )
        negate = false;
      else if ( eat( '-' ) )
        negate = true;
      else
        return acc;
    }
  }

  bool factor_ahead()
  {
    skip();
    if ( pos_ >= text_.size() )
      return false;
    const auto c = text_[pos_];
    return c == 'x' || c == '(' || std::isdigit( static_cast<unsigned char>( c ) );
  }

  std::vector<unsigned> product()
  {
    auto acc = factor();
    for ( ;; )
    {
      if ( !eat( '*' ) && !factor_ahead() )
        return acc;
      const auto f = factor();
      for ( std::size_t i = 0; i < points_; ++i )
        acc[i] = ( acc[i] * f[i] ) % p_;
    }
  }

  std::vector<unsigned> factor()
  {
    skip();
    std::vector<unsigned> base;
    if ( eat( '(' ) )
    {
      base = sum();
      if ( !eat( ')' ) )
        fail( "expected ')'" );
    }
    else if ( pos_ < text_.size() && text_[pos_] == 'x' )
    {
      ++pos_;
      const auto i = number();
      if ( i == 0u || i > n_ )
        fail( "variable index outside 1.." + std::to_string( n_ ) );
      base.resize( points_ );
      for ( uint64_t x = 0; x < points_; ++x )
        base[x] = digits( x, p_, n_ )[i - 1u];
    }
    else if ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      base = constant( number() );
    else
      fail( "expected a term" );
    if ( eat( '^' ) )
    {
      const auto e = number();
      auto out = constant( 1u );
      for ( std::size_t i = 0; i < points_; ++i )
        out[i] = pow_mod( base[i], e, p_ );
      return out;
    }
    return base;
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  unsigned p_;
  unsigned n_;
  uint64_t points_;
};

std::size_t skip_spaces( std::string_view s, std::size_t pos )
{
  while ( pos < s.size() && std::isspace( static_cast<unsigned char>( s[pos] ) ) )
    ++pos;
  return pos;
}

unsigned read_unsigned( std::string_view s, std::size_t& pos, const char* what )
{
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars( s.data() + pos, s.data() + s.size(), v );
  if ( ec != std::errc() )
    throw parse_error( std::string( "expected " ) + what, pos );
  pos = static_cast<std::size_t>( ptr - s.data() );
  return v;
}

} // namespace

gfp_fn parse_gfp( std::string_view text )
{
  std::size_t pos = skip_spaces( text, 0u );
  if ( text.substr( pos, 4u ) == "gfp:" )
    pos += 4u;
  pos = skip_spaces( text, pos );
  if ( text.substr( pos, 2u ) != "p=" )
    throw parse_error( "expected p=<prime>", pos );
  pos += 2u;
  const auto p_pos = pos;
  const auto p = read_unsigned( text, pos, "a prime" );
  if ( !is_prime( p ) )
    throw parse_error( std::to_string( p ) + " is not prime", p_pos );
  if ( p > gfp_max_prime )
    throw error( error_code::limit_exceeded, "primes above " + std::to_string( gfp_max_prime ) + " are not supported" );
  pos = skip_spaces( text, pos );

  /* split off an "@n" suffix */
  auto body = text.substr( pos );
  std::optional<unsigned> arity;
  if ( const auto at = body.rfind( '@' ); at != std::string_view::npos )
  {
    std::size_t apos = pos + at + 1u;
    arity = read_unsigned( text, apos, "an arity" );
    if ( skip_spaces( text, apos ) != text.size() )
      throw parse_error( "unexpected text after the arity", apos );
    body = body.substr( 0u, at );
  }

  if ( body.substr( 0u, 3u ) == "vt:" )
  {
    std::vector<uint8_t> values;
    std::size_t vpos = pos + 3u;
    const auto end = pos + body.size();
    for ( ;; )
    {
      vpos = skip_spaces( text, vpos );
      const auto v_at = vpos;
      const auto v = read_unsigned( text, vpos, "a value" );
      if ( v >= p )
        throw parse_error( "value outside GF(" + std::to_string( p ) + ")", v_at );
      values.push_back( static_cast<uint8_t>( v ) );
      vpos = skip_spaces( text, vpos );
      if ( vpos >= end )
        break;
      if ( text[vpos] != ',' )
        throw parse_error( "expected ','", vpos );
      ++vpos;
    }
    unsigned n = 0;
    uint64_t points = 1;
    while ( points < values.size() )
    {
      points *= p;
      ++n;
    }
    if ( points != values.size() || n == 0u )
      throw parse_error( "value count is not a positive power of " + std::to_string( p ), pos );
    if ( arity && *arity != n )
      throw error( error_code::arity_mismatch, "value count does not match @" + std::to_string( *arity ) );
    return gfp_fn::from_values( p, n, std::move( values ) );
  }

  std::size_t offset = pos;
  if ( body.substr( 0u, 5u ) == "poly:" )
  {
    body = body.substr( 5u );
    offset += 5u;
  }
  unsigned max_var = 0;
  for ( std::size_t i = 0; i < body.size(); ++i )
  {
    if ( body[i] != 'x' )
      continue;
    std::size_t j = offset + i + 1u;
    if ( j < text.size() && std::isdigit( static_cast<unsigned char>( text[j] ) ) )
      max_var = std::max( max_var, read_unsigned( text, j, "a variable index" ) );
  }
  const auto n = arity.value_or( std::max( max_var, 1u ) );
  if ( n < max_var )
    throw parse_error( "arity below the largest variable index", offset + body.size() );
  if ( n == 0u )
    throw error( error_code::out_of_range, "arity must be positive" );
  gfp_parser parser( body, offset, p, n );
  const auto v = parser.parse();
  return gfp_fn::from_values( p, n, std::vector<uint8_t>( v.begin(), v.end() ) );
}

std::string format_gfp_polynomial( const gfp_fn& f )
{
  const auto p = f.prime(), n = f.arity();
  /* monomials as index lists with multiplicity, ordered by (degree, lexicographic) */
  std::vector<std::pair<std::vector<unsigned>, unsigned>> terms;
  const auto& c = f.coefficients();
  unsigned max_var = 0;
  for ( uint64_t e = 0; e < c.size(); ++e )
  {
    if ( c[e] == 0u )
      continue;
    std::vector<unsigned> idx;
    const auto d = digits( e, p, n );
    for ( auto i = 0u; i < n; ++i )
    {
      for ( auto k = 0u; k < d[i]; ++k )
        idx.push_back( i + 1u );
      if ( d[i] )
        max_var = std::max( max_var, i + 1u );
    }
    terms.emplace_back( std::move( idx ), c[e] );
  }
  std::sort( terms.begin(), terms.end(), []( const auto& a, const auto& b ) {
    if ( a.first.size() != b.first.size() )
      return a.first.size() < b.first.size();
    return a.first < b.first;
  } );

  std::string out;
  for ( const auto& [idx, coef] : terms )
  {
    if ( !out.empty() )
      out += " + ";
    if ( idx.empty() )
    {
      out += std::to_string( coef );
      continue;
    }
    if ( coef != 1u )
      out += std::to_string( coef ) + "*";
    for ( std::size_t i = 0; i < idx.size(); )
    {
      auto j = i;
      while ( j < idx.size() && idx[j] == idx[i] )
        ++j;
      if ( i != 0u )
        out += "*";
      out += "x" + std::to_string( idx[i] );
      if ( j - i > 1u )
        out += "^" + std::to_string( j - i );
      i = j;
    }
  }
  if ( out.empty() )
    out = "0";
  if ( n != std::max( max_var, 1u ) )
    out += "@" + std::to_string( n );
  return out;
}

std::string format_gfp( const gfp_fn& f )
{
  return "gfp:p=" + std::to_string( f.prime() ) + " poly:" + format_gfp_polynomial( f );
}

} // namespace lcstab
