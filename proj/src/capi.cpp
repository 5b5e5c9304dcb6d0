//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab.h>

#include "report.hpp"

#include <lcstab/closure.hpp>
#include <lcstab/error.hpp>
#include <lcstab/literal.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

struct lcs_function
{
  lcstab::bool_fn fn;
};

struct lcs_descriptor
{
  lcstab::class_descriptor d;
};

namespace
{

thread_local std::string last_message;
thread_local long last_position = -1;

lcs_status status_of( lcstab::error_code c )
{
  switch ( c )
  {
  case lcstab::error_code::parse:
    return LCS_ERR_PARSE;
  case lcstab::error_code::arity_mismatch:
    return LCS_ERR_ARITY;
  case lcstab::error_code::out_of_range:
    return LCS_ERR_RANGE;
  case lcstab::error_code::limit_exceeded:
    return LCS_ERR_LIMIT;
  case lcstab::error_code::invalid_argument:
    return LCS_ERR_INVALID;
  }
  return LCS_ERR_INTERNAL;
}

lcs_status fail( lcs_status s, std::string message, long position = -1 )
{
  last_message = std::move( message );
  last_position = position;
  return s;
}

/* runs body, translating exceptions into status codes */
template<typename F>
lcs_status guarded( F&& body )
{
  try
  {
    last_message.clear();
    last_position = -1;
    body();
    return LCS_OK;
  }
  catch ( const lcstab::parse_error& e )
  {
    return fail( LCS_ERR_PARSE, e.what(), static_cast<long>( e.position() ) );
  }
  catch ( const lcstab::error& e )
  {
    return fail( status_of( e.code() ), e.what() );
  }
  catch ( const std::bad_alloc& )
  {
    return fail( LCS_ERR_LIMIT, "out of memory" );
  }
  catch ( const std::exception& e )
  {
    return fail( LCS_ERR_INTERNAL, e.what() );
  }
  catch ( ... )
  {
    return fail( LCS_ERR_INTERNAL, "unknown failure" );
  }
}

char* dup_string( const std::string& s )
{
  auto* out = static_cast<char*>( std::malloc( s.size() + 1u ) );
  if ( !out )
    throw std::bad_alloc();
  std::memcpy( out, s.c_str(), s.size() + 1u );
  return out;
}

std::vector<std::string> collect( const char* const* literals, size_t count )
{
  if ( count != 0u && !literals )
    throw lcstab::error( lcstab::error_code::invalid_argument, "null literal array" );
  std::vector<std::string> out;
  for ( size_t i = 0; i < count; ++i )
  {
    if ( !literals[i] )
      throw lcstab::error( lcstab::error_code::invalid_argument, "null literal" );
    out.emplace_back( literals[i] );
  }
  return out;
}

lcstab::clone_id clone_at( size_t index )
{
  if ( index >= lcstab::num_clones )
    throw lcstab::error( lcstab::error_code::out_of_range, "clone index out of range" );
  return lcstab::all_clones()[index];
}

#define LCS_REQUIRE( ... )                                      \
  do                                                            \
  {                                                             \
    if ( !( __VA_ARGS__ ) )                                     \
      return fail( LCS_ERR_NULL, "null argument: " #__VA_ARGS__ ); \
  } while ( 0 )

} // namespace

extern "C" {

const char* lcs_version( void ) { return "1.0.0"; }

const char* lcs_status_name( lcs_status s )
{
  switch ( s )
  {
  case LCS_OK:
    return "ok";
  case LCS_ERR_PARSE:
    return "parse error";
  case LCS_ERR_ARITY:
    return "arity mismatch";
  case LCS_ERR_RANGE:
    return "out of range";
  case LCS_ERR_LIMIT:
    return "limit exceeded";
  case LCS_ERR_INVALID:
    return "invalid argument";
  case LCS_ERR_NULL:
    return "null argument";
  case LCS_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char* lcs_last_error( void ) { return last_message.c_str(); }

long lcs_last_error_position( void ) { return last_position; }

void lcs_string_free( char* s ) { std::free( s ); }

lcs_status lcs_function_parse( const char* text, lcs_function** out )
{
  LCS_REQUIRE( text && out );
  return guarded( [&] { *out = new lcs_function{ lcstab::parse_function( text ) }; } );
}

lcs_status lcs_function_from_table( unsigned arity, uint64_t table, lcs_function** out )
{
  LCS_REQUIRE( out );
  return guarded( [&] {
    if ( arity == 0u || arity > 6u )
      throw lcstab::error( lcstab::error_code::out_of_range, "table words hold arities 1..6" );
    if ( arity < 6u && ( table >> ( 1u << arity ) ) != 0u )
      throw lcstab::error( lcstab::error_code::out_of_range, "table has bits above 2^arity" );
    *out = new lcs_function{ lcstab::bool_fn::from_word( arity, table ) };
  } );
}

void lcs_function_free( lcs_function* f ) { delete f; }

lcs_status lcs_function_arity( const lcs_function* f, unsigned* out )
{
  LCS_REQUIRE( f && out );
  *out = f->fn.arity();
  return LCS_OK;
}

lcs_status lcs_function_value( const lcs_function* f, uint64_t point, int* out )
{
  LCS_REQUIRE( f && out );
  return guarded( [&] {
    if ( point >= f->fn.num_points() )
      throw lcstab::error( lcstab::error_code::out_of_range, "point outside 0..2^n - 1" );
    *out = f->fn.value( point ) ? 1 : 0;
  } );
}

lcs_status lcs_function_polynomial( const lcs_function* f, char** out )
{
  LCS_REQUIRE( f && out );
  return guarded( [&] { *out = dup_string( lcstab::format_polynomial( f->fn ) ); } );
}

lcs_status lcs_function_table( const lcs_function* f, char** out )
{
  LCS_REQUIRE( f && out );
  return guarded( [&] { *out = dup_string( lcstab::format_table( f->fn ) ); } );
}

lcs_status lcs_function_signature( const lcs_function* f, lcs_signature* out )
{
  LCS_REQUIRE( f && out );
  return guarded( [&] {
    const auto s = lcstab::compute_signature( f->fn );
    *out = { s.degree, s.charrank, s.parity ? 1 : 0, s.c0 ? 1 : 0, s.c1 ? 1 : 0 };
  } );
}

lcs_status lcs_function_equal( const lcs_function* f, const lcs_function* g, int* out )
{
  LCS_REQUIRE( f && g && out );
  *out = f->fn == g->fn ? 1 : 0;
  return LCS_OK;
}

size_t lcs_clone_count( void ) { return lcstab::num_clones; }

const char* lcs_clone_name( size_t index )
{
  if ( index >= lcstab::num_clones )
    return nullptr;
  /* names are string literals */
  return lcstab::clone_name( lcstab::all_clones()[index] ).data();
}

lcs_status lcs_clone_find( const char* name, size_t* index )
{
  LCS_REQUIRE( name && index );
  return guarded( [&] {
    const auto c = lcstab::clone_from_name( name );
    if ( !c )
      throw lcstab::error( lcstab::error_code::invalid_argument, std::string( "unknown clone '" ) + name + "'" );
    *index = static_cast<size_t>( *c );
  } );
}

lcs_status lcs_clone_member( size_t clone, const lcs_function* f, int* out )
{
  LCS_REQUIRE( f && out );
  return guarded( [&] { *out = lcstab::member( clone_at( clone ), f->fn ) ? 1 : 0; } );
}

lcs_status lcs_clone_leq( size_t a, size_t b, int* out )
{
  LCS_REQUIRE( out );
  return guarded( [&] { *out = lcstab::clone_leq( clone_at( a ), clone_at( b ) ) ? 1 : 0; } );
}

lcs_status lcs_descriptor_parse( const char* text, lcs_descriptor** out )
{
  LCS_REQUIRE( text && out );
  return guarded( [&] { *out = new lcs_descriptor{ lcstab::parse_descriptor( text ) }; } );
}

void lcs_descriptor_free( lcs_descriptor* d ) { delete d; }

lcs_status lcs_descriptor_name( const lcs_descriptor* d, char** out )
{
  LCS_REQUIRE( d && out );
  return guarded( [&] { *out = dup_string( lcstab::descriptor_name( d->d ) ); } );
}

lcs_status lcs_descriptor_code( const lcs_descriptor* d, char** out )
{
  LCS_REQUIRE( d && out );
  return guarded( [&] { *out = dup_string( lcstab::descriptor_code( d->d ) ); } );
}

lcs_status lcs_descriptor_member( const lcs_descriptor* d, const lcs_function* f, int* out )
{
  LCS_REQUIRE( d && f && out );
  return guarded( [&] { *out = lcstab::descriptor_member( d->d, f->fn ) ? 1 : 0; } );
}

lcs_status lcs_descriptor_leq( const lcs_descriptor* a, const lcs_descriptor* b, int* out )
{
  LCS_REQUIRE( a && b && out );
  return guarded( [&] { *out = lcstab::descriptor_leq( a->d, b->d ) ? 1 : 0; } );
}

lcs_status lcs_descriptor_meet( const lcs_descriptor* a, const lcs_descriptor* b, lcs_descriptor** out )
{
  LCS_REQUIRE( a && b && out );
  return guarded( [&] { *out = new lcs_descriptor{ lcstab::descriptor_meet( a->d, b->d ) }; } );
}

lcs_status lcs_descriptor_complement( const lcs_descriptor* d, lcs_descriptor** out )
{
  LCS_REQUIRE( d && out );
  return guarded( [&] { *out = new lcs_descriptor{ lcstab::descriptor_complement( d->d ) }; } );
}

lcs_status lcs_descriptor_slice_size( const lcs_descriptor* d, unsigned arity, uint64_t* out )
{
  LCS_REQUIRE( d && out );
  return guarded( [&] {
    if ( arity == 0u || arity > 6u )
      throw lcstab::error( lcstab::error_code::out_of_range, "slice sizes are available for arities 1..6" );
    *out = lcstab::descriptor_slice_size( d->d, arity );
  } );
}

lcs_status lcs_classify( const lcs_function* const* fs, size_t count, lcs_descriptor** out )
{
  LCS_REQUIRE( out && ( fs || count == 0u ) );
  return guarded( [&] {
    std::vector<lcstab::bool_fn> v;
    for ( size_t i = 0; i < count; ++i )
    {
      if ( !fs[i] )
        throw lcstab::error( lcstab::error_code::invalid_argument, "null function" );
      v.push_back( fs[i]->fn );
    }
    *out = new lcs_descriptor{ lcstab::classify( v ) };
  } );
}

lcs_status lcs_report_analyze( const char* const* literals, size_t count, char** json )
{
  LCS_REQUIRE( json );
  return guarded( [&] { *json = dup_string( lcstab::report::analyze( collect( literals, count ) ).dump( 2 ) ); } );
}

lcs_status lcs_report_closure( const char* const* literals, size_t count, unsigned cap, int check, char** json )
{
  LCS_REQUIRE( json );
  return guarded( [&] {
    if ( cap == 0u || cap > 6u )
      throw lcstab::error( lcstab::error_code::out_of_range, "closure cap must be in 1..6" );
    *json = dup_string( lcstab::report::closure( collect( literals, count ), cap, check != 0 ).dump( 2 ) );
  } );
}

lcs_status lcs_report_stability( const char* klass, const char* const* literals, size_t count, const char* clone,
                                 lcs_side side, unsigned cap, char** json )
{
  LCS_REQUIRE( json );
  return guarded( [&] {
    if ( cap == 0u || cap > 6u )
      throw lcstab::error( lcstab::error_code::out_of_range, "stability cap must be in 1..6" );
    std::optional<lcstab::side> which;
    if ( side == LCS_SIDE_RIGHT )
      which = lcstab::side::right;
    else if ( side == LCS_SIDE_LEFT )
      which = lcstab::side::left;
    else if ( side != LCS_SIDE_BOTH )
      throw lcstab::error( lcstab::error_code::invalid_argument, "unknown side" );
    std::optional<std::string> k, c;
    if ( klass )
      k = klass;
    if ( clone )
      c = clone;
    *json = dup_string( lcstab::report::stability( k, collect( literals, count ), c, which, cap ).dump( 2 ) );
  } );
}

lcs_status lcs_report_table3( const lcs_table3_options* opts, char** json, int* verified )
{
  LCS_REQUIRE( json );
  return guarded( [&] {
    lcstab::table3_options o;
    const lcs_table3_options defaults{ 0u, 0u, nullptr, nullptr, 0 };
    const auto& in = opts ? *opts : defaults;
    o.check.cap = in.cap == 0u ? 4u : in.cap;
    if ( o.check.cap < 2u || o.check.cap > 6u )
      throw lcstab::error( lcstab::error_code::out_of_range, "table cap must be in 2..6" );
    o.max_param = in.max_param == 0u ? o.check.cap - 1u : in.max_param;
    if ( o.max_param >= o.check.cap )
      throw lcstab::error( lcstab::error_code::out_of_range, "parameters must stay below the cap" );
    if ( in.params )
      o.filter = lcstab::report::parse_params( in.params );
    if ( in.row )
      o.pattern = in.row;
    o.inject_fault = in.inject_fault != 0;
    const auto doc = lcstab::report::table3( o );
    if ( verified )
      *verified = doc["summary"]["verified"].get<bool>() ? 1 : 0;
    *json = dup_string( doc.dump( 2 ) );
  } );
}

lcs_status lcs_report_gfp( const char* const* literals, size_t count, unsigned cap, int check, char** json )
{
  LCS_REQUIRE( json );
  return guarded( [&] {
    if ( cap == 0u )
      throw lcstab::error( lcstab::error_code::out_of_range, "closure cap must be positive" );
    *json = dup_string( lcstab::report::gfp( collect( literals, count ), cap, check != 0 ).dump( 2 ) );
  } );
}

lcs_status lcs_report_lattice( unsigned deg_bound, unsigned char_bound, int dot, char** out )
{
  LCS_REQUIRE( out );
  return guarded( [&] {
    if ( deg_bound > 16u || char_bound > 16u )
      throw lcstab::error( lcstab::error_code::out_of_range, "bounds are limited to 16" );
    *out = dup_string( dot ? lcstab::report::lattice_dot( deg_bound, char_bound )
                           : lcstab::report::lattice( deg_bound, char_bound ).dump( 2 ) );
  } );
}

} // extern "C"
