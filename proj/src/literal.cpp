//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/error.hpp>
#include <lcstab/literal.hpp>

#include <algorithm>
#include <bit>
#include <cctype>

namespace lcstab
{

namespace
{

using poly = std::vector<monomial>; /* sorted, no repeats */

poly poly_add( const poly& a, const poly& b )
{
  poly r;
  std::set_symmetric_difference( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( r ) );
  return r;
}

poly poly_mul( const poly& a, const poly& b )
{
  poly r;
  for ( auto x : a )
  {
    for ( auto y : b )
      r.push_back( x | y );
  }
  std::sort( r.begin(), r.end() );
  poly odd;
  for ( std::size_t i = 0; i < r.size(); )
  {
    auto j = i;
    while ( j < r.size() && r[j] == r[i] )
      ++j;
    if ( ( j - i ) & 1u )
      odd.push_back( r[i] );
    i = j;
  }
  return odd;
}

class parser
{
public:
  explicit parser( std::string_view text ) : s_( text ) {}

  bool_fn run()
  {
    skip();
    if ( at_end() )
      fail( "expected a function" );
    bool_fn f = s_.substr( pos_ ).starts_with( "tt:" ) ? table_form() : poly_form();
    skip();
    if ( !at_end() )
      fail( std::string( "unexpected '" ) + s_[pos_] + "'" );
    return f;
  }

private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip()
  {
    while ( !at_end() && std::isspace( static_cast<unsigned char>( s_[pos_] ) ) )
      ++pos_;
  }

  [[noreturn]] void fail( const std::string& what ) const { throw parse_error( what, pos_ ); }

  unsigned number()
  {
    if ( !std::isdigit( static_cast<unsigned char>( peek() ) ) )
      fail( "expected a number" );
    unsigned v = 0;
    while ( std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      v = v * 10u + static_cast<unsigned>( s_[pos_++] - '0' );
      if ( v > 1000000u )
        fail( "number too large" );
    }
    return v;
  }

  /* optional "@n" */
  unsigned arity_suffix( unsigned implied )
  {
    skip();
    if ( peek() != '@' )
      return implied;
    ++pos_;
    skip();
    const auto at = pos_;
    const auto n = number();
    if ( n == 0u || n > max_arity )
      throw error( error_code::limit_exceeded,
                   "arity " + std::to_string( n ) + " outside 1.." + std::to_string( max_arity ) +
                       " at position " + std::to_string( at ) );
    if ( n < implied )
    {
      pos_ = at;
      fail( "arity suffix @" + std::to_string( n ) + " is below the highest variable x" +
            std::to_string( implied ) );
    }
    return n;
  }

  bool_fn table_form()
  {
    pos_ += 3u;
    std::string bits;
    if ( s_.substr( pos_ ).starts_with( "0b" ) )
    {
      pos_ += 2u;
      while ( peek() == '0' || peek() == '1' )
        bits += s_[pos_++];
    }
    else if ( s_.substr( pos_ ).starts_with( "0x" ) )
    {
      pos_ += 2u;
      while ( std::isxdigit( static_cast<unsigned char>( peek() ) ) )
      {
        const auto c = static_cast<char>( std::tolower( static_cast<unsigned char>( s_[pos_++] ) ) );
        const unsigned v = c <= '9' ? static_cast<unsigned>( c - '0' ) : static_cast<unsigned>( c - 'a' + 10 );
        for ( int k = 3; k >= 0; --k )
          bits += ( ( v >> k ) & 1u ) ? '1' : '0';
      }
    }
    else
    {
      fail( "expected 0b or 0x after tt:" );
    }
    if ( bits.empty() )
      fail( "empty truth table" );
    const auto digits_end = pos_;

    skip();
    unsigned n = 0;
    if ( peek() == '@' )
    {
      ++pos_;
      skip();
      const auto at = pos_;
      n = number();
      if ( n == 0u || n > max_arity )
        throw error( error_code::limit_exceeded,
                     "arity " + std::to_string( n ) + " outside 1.." + std::to_string( max_arity ) +
                         " at position " + std::to_string( at ) );
      const auto need = std::size_t{ 1 } << n;
      /* a single hex digit may carry a 1- or 2-point table in its leading bits */
      if ( bits.size() > need && bits.size() == 4u &&
           bits.find( '1', need ) == std::string::npos )
        bits.resize( need );
      if ( bits.size() != need )
      {
        pos_ = at;
        fail( "table has " + std::to_string( bits.size() ) + " bits but @" + std::to_string( n ) +
              " needs " + std::to_string( need ) );
      }
    }
    else
    {
      if ( bits.size() < 2u || !std::has_single_bit( bits.size() ) )
      {
        pos_ = digits_end;
        fail( "table length must be a power of two, at least 2" );
      }
      n = static_cast<unsigned>( std::countr_zero( bits.size() ) );
      if ( n > max_arity )
        throw error( error_code::limit_exceeded, "truth table exceeds the arity limit" );
    }

    std::vector<word> t( n <= 6u ? 1u : std::size_t{ 1 } << ( n - 6u ) );
    for ( std::size_t b = 0; b < bits.size(); ++b )
    {
      if ( bits[b] == '1' )
        t[b >> 6u] |= word{ 1 } << ( b & 63u );
    }
    return { n, std::move( t ) };
  }

  bool_fn poly_form()
  {
    auto p = sum();
    auto arity = std::max( max_var_, 1u );
    arity = arity_suffix( arity );
    return from_anf( monomial_set( arity, std::move( p ) ) );
  }

  poly sum()
  {
    auto p = product();
    skip();
    while ( peek() == '+' )
    {
      ++pos_;
      p = poly_add( p, product() );
      skip();
    }
    return p;
  }

  bool starts_factor()
  {
    skip();
    const auto c = peek();
    return c == 'x' || c == 'X' || c == '(' || c == '0' || c == '1';
  }

  poly product()
  {
    auto p = factor();
    for ( ;; )
    {
      skip();
      if ( peek() == '*' )
      {
        ++pos_;
        p = poly_mul( p, factor() );
      }
      else if ( starts_factor() )
      {
        p = poly_mul( p, factor() );
      }
      else
      {
        return p;
      }
    }
  }

  poly factor()
  {
    skip();
    const auto c = peek();
    if ( c == 'x' || c == 'X' )
    {
      ++pos_;
      const auto at = pos_;
      const auto i = number();
      if ( i == 0u )
      {
        pos_ = at;
        fail( "variables are numbered from 1" );
      }
      if ( i > max_arity )
        throw error( error_code::limit_exceeded,
                     "variable x" + std::to_string( i ) + " exceeds the arity limit " +
                         std::to_string( max_arity ) + " at position " + std::to_string( at ) );
      max_var_ = std::max( max_var_, i );
      return { monomial{ 1 } << ( i - 1u ) };
    }
    if ( c == '0' || c == '1' )
    {
      ++pos_;
      if ( std::isdigit( static_cast<unsigned char>( peek() ) ) )
        fail( "constants must be 0 or 1" );
      return c == '1' ? poly{ 0u } : poly{};
    }
    if ( c == '(' )
    {
      ++pos_;
      auto p = sum();
      skip();
      if ( peek() != ')' )
        fail( "expected ')'" );
      ++pos_;
      return p;
    }
    if ( at_end() )
      fail( "unexpected end of input" );
    fail( std::string( "unexpected '" ) + c + "'" );
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  unsigned max_var_ = 0;
};

} // namespace

bool_fn parse_function( std::string_view text )
{
  return parser( text ).run();
}

std::string format_polynomial( const bool_fn& f )
{
  const auto ms = anf( f );
  std::string out;
  unsigned max_var = 0;
  for ( auto m : ms.monomials() )
  {
    if ( !out.empty() )
      out += " + ";
    if ( m == 0u )
    {
      out += "1";
      continue;
    }
    bool first = true;
    for ( auto v = m; v; v &= v - 1u )
    {
      const auto i = static_cast<unsigned>( std::countr_zero( v ) ) + 1u;
      max_var = std::max( max_var, i );
      if ( !first )
        out += "*";
      out += "x" + std::to_string( i );
      first = false;
    }
  }
  if ( out.empty() )
    out = "0";
  if ( f.arity() != std::max( max_var, 1u ) )
    out += "@" + std::to_string( f.arity() );
  return out;
}

std::string format_table( const bool_fn& f )
{
  std::string out = "tt:0b";
  for ( uint64_t b = 0; b < f.num_points(); ++b )
    out += f.value( b ) ? '1' : '0';
  return out;
}

} // namespace lcstab
