//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/error.hpp>
#include <lcstab/fn_class.hpp>

#include <algorithm>
#include <bit>

namespace lcstab
{

namespace
{
constexpr unsigned dense_limit = 4u;
}

fn_slice::fn_slice( unsigned arity ) : arity_( arity )
{
  if ( arity == 0u || arity > max_class_cap )
    throw error( error_code::out_of_range, "slice arity outside 1.." + std::to_string( max_class_cap ) );
  if ( arity <= dense_limit )
    bits_.assign( std::max<std::size_t>( 1u, ( std::size_t{ 1 } << ( 1u << arity ) ) / 64u ), 0u );
}

bool fn_slice::contains( word t ) const
{
  if ( arity_ <= dense_limit )
    return ( bits_[t >> 6u] >> ( t & 63u ) ) & 1u;
  return sparse_.count( t ) != 0u;
}

bool fn_slice::insert( word t )
{
  if ( ( t & ~kernels::full_mask( arity_ ) ) != 0u )
    throw error( error_code::invalid_argument, "table has bits beyond the slice arity" );
  if ( arity_ <= dense_limit )
  {
    auto& w = bits_[t >> 6u];
    const auto bit = uint64_t{ 1 } << ( t & 63u );
    if ( w & bit )
      return false;
    w |= bit;
    ++size_;
    return true;
  }
  if ( !sparse_.insert( t ).second )
    return false;
  ++size_;
  return true;
}

std::vector<word> fn_slice::members() const
{
  std::vector<word> out;
  out.reserve( size_ );
  if ( arity_ <= dense_limit )
  {
    for ( std::size_t j = 0; j < bits_.size(); ++j )
    {
      for ( auto w = bits_[j]; w; w &= w - 1u )
        out.push_back( ( j << 6u ) | static_cast<word>( std::countr_zero( w ) ) );
    }
    return out;
  }
  out.assign( sparse_.begin(), sparse_.end() );
  std::sort( out.begin(), out.end() );
  return out;
}

void fn_slice::for_each( const std::function<void( word )>& fn ) const
{
  if ( arity_ <= dense_limit )
  {
    for ( std::size_t j = 0; j < bits_.size(); ++j )
    {
      for ( auto w = bits_[j]; w; w &= w - 1u )
        fn( ( j << 6u ) | static_cast<word>( std::countr_zero( w ) ) );
    }
    return;
  }
  for ( auto t : members() )
    fn( t );
}

bool operator==( const fn_slice& a, const fn_slice& b )
{
  return a.arity_ == b.arity_ && a.size_ == b.size_ && a.bits_ == b.bits_ && a.sparse_ == b.sparse_;
}

fn_class::fn_class( unsigned cap, provenance p ) : origin_( p )
{
  if ( cap == 0u || cap > max_class_cap )
    throw error( error_code::limit_exceeded, "class cap " + std::to_string( cap ) + " outside 1.." +
                                                  std::to_string( max_class_cap ) );
  for ( auto n = 1u; n <= cap; ++n )
    slices_.emplace_back( n );
}

const fn_slice& fn_class::slice( unsigned arity ) const
{
  if ( arity == 0u || arity > cap() )
    throw error( error_code::out_of_range, "arity " + std::to_string( arity ) + " outside the class cap" );
  return slices_[arity - 1u];
}

fn_slice& fn_class::slice( unsigned arity )
{
  if ( arity == 0u || arity > cap() )
    throw error( error_code::out_of_range, "arity " + std::to_string( arity ) + " outside the class cap" );
  return slices_[arity - 1u];
}

bool fn_class::contains( const bool_fn& f ) const
{
  return f.arity() <= cap() && slice( f.arity() ).contains( f.table_word() );
}

bool fn_class::contains( word t, unsigned arity ) const
{
  return arity >= 1u && arity <= cap() && slice( arity ).contains( t );
}

bool fn_class::insert( const bool_fn& f )
{
  return slice( f.arity() ).insert( f.table_word() );
}

bool fn_class::insert( word t, unsigned arity )
{
  return slice( arity ).insert( t );
}

bool fn_class::empty() const
{
  return std::all_of( slices_.begin(), slices_.end(), []( const auto& s ) { return s.empty(); } );
}

std::vector<bool_fn> fn_class::functions( unsigned arity ) const
{
  std::vector<bool_fn> out;
  for ( auto t : slice( arity ).members() )
    out.push_back( bool_fn::from_word( arity, t ) );
  return out;
}

fn_class filter_class( unsigned cap, const std::function<bool( word, unsigned )>& pred, provenance p )
{
  if ( cap > dense_limit )
    throw error( error_code::limit_exceeded, "exhaustive filtering is limited to arity " +
                                                  std::to_string( dense_limit ) );
  fn_class out( cap, p );
  for ( auto n = 1u; n <= cap; ++n )
  {
    const uint64_t count = uint64_t{ 1 } << ( 1u << n );
    for ( uint64_t t = 0; t < count; ++t )
    {
      if ( pred( t, n ) )
        out.insert( t, n );
    }
  }
  return out;
}

} // namespace lcstab
