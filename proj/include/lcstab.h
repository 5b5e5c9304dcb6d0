/*===----------------------------------------------------------------------===*
 *
 * Part of the lcstab project, under the Apache License v2.0.
 * SPDX-License-Identifier: Apache-2.0
 *
 *===----------------------------------------------------------------------===*
 *
 * C interface to lcstab.
 *
 * Every call returns an lcs_status.  On failure a message (and, for parse
 * errors, a character offset) is kept per thread; see lcs_last_error.
 * Strings handed out by the library are released with lcs_string_free.
 *
 *===----------------------------------------------------------------------===*/

#ifndef LCSTAB_H
#define LCSTAB_H

#include <stddef.h>
#include <stdint.h>

#if defined( _WIN32 )
#if defined( LCSTAB_BUILDING )
#define LCS_API __declspec( dllexport )
#else
#define LCS_API __declspec( dllimport )
#endif
#else
#define LCS_API __attribute__( ( visibility( "default" ) ) )
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lcs_status
{
  LCS_OK = 0,
  LCS_ERR_PARSE = 1,
  LCS_ERR_ARITY = 2,
  LCS_ERR_RANGE = 3,
  LCS_ERR_LIMIT = 4,
  LCS_ERR_INVALID = 5,
  LCS_ERR_NULL = 6,
  LCS_ERR_INTERNAL = 7
} lcs_status;

typedef struct lcs_function lcs_function;
typedef struct lcs_descriptor lcs_descriptor;

typedef struct lcs_signature
{
  unsigned degree;
  unsigned charrank;
  int parity; /* 1 for odd */
  int c0;     /* f(0, ..., 0) */
  int c1;     /* f(1, ..., 1) */
} lcs_signature;

LCS_API const char* lcs_version( void );
LCS_API const char* lcs_status_name( lcs_status s );
/* message of the last failed call on this thread, "" if none */
LCS_API const char* lcs_last_error( void );
/* character offset of the last parse error, or -1 */
LCS_API long lcs_last_error_position( void );
LCS_API void lcs_string_free( char* s );

/* Boolean functions */
LCS_API lcs_status lcs_function_parse( const char* text, lcs_function** out );
LCS_API lcs_status lcs_function_from_table( unsigned arity, uint64_t table, lcs_function** out );
LCS_API void lcs_function_free( lcs_function* f );
LCS_API lcs_status lcs_function_arity( const lcs_function* f, unsigned* out );
LCS_API lcs_status lcs_function_value( const lcs_function* f, uint64_t point, int* out );
LCS_API lcs_status lcs_function_polynomial( const lcs_function* f, char** out );
LCS_API lcs_status lcs_function_table( const lcs_function* f, char** out );
LCS_API lcs_status lcs_function_signature( const lcs_function* f, lcs_signature* out );
LCS_API lcs_status lcs_function_equal( const lcs_function* f, const lcs_function* g, int* out );

/* the nineteen clones, indexed 0..lcs_clone_count() - 1 */
LCS_API size_t lcs_clone_count( void );
LCS_API const char* lcs_clone_name( size_t index );
LCS_API lcs_status lcs_clone_find( const char* name, size_t* index );
LCS_API lcs_status lcs_clone_member( size_t clone, const lcs_function* f, int* out );
LCS_API lcs_status lcs_clone_leq( size_t a, size_t b, int* out );

/* listed classes */
LCS_API lcs_status lcs_descriptor_parse( const char* text, lcs_descriptor** out );
LCS_API void lcs_descriptor_free( lcs_descriptor* d );
LCS_API lcs_status lcs_descriptor_name( const lcs_descriptor* d, char** out );
LCS_API lcs_status lcs_descriptor_code( const lcs_descriptor* d, char** out );
LCS_API lcs_status lcs_descriptor_member( const lcs_descriptor* d, const lcs_function* f, int* out );
LCS_API lcs_status lcs_descriptor_leq( const lcs_descriptor* a, const lcs_descriptor* b, int* out );
LCS_API lcs_status lcs_descriptor_meet( const lcs_descriptor* a, const lcs_descriptor* b, lcs_descriptor** out );
LCS_API lcs_status lcs_descriptor_complement( const lcs_descriptor* d, lcs_descriptor** out );
LCS_API lcs_status lcs_descriptor_slice_size( const lcs_descriptor* d, unsigned arity, uint64_t* out );
LCS_API lcs_status lcs_classify( const lcs_function* const* fs, size_t count, lcs_descriptor** out );

/*
 * Reports.  Each writes a JSON document (schema in README.md) to *json.
 * Literal lists are arrays of strings; a NULL array with count 0 is empty.
 */
LCS_API lcs_status lcs_report_analyze( const char* const* literals, size_t count, char** json );
LCS_API lcs_status lcs_report_closure( const char* const* literals, size_t count, unsigned cap, int check,
                                       char** json );

typedef enum lcs_side
{
  LCS_SIDE_RIGHT = 0,
  LCS_SIDE_LEFT = 1,
  LCS_SIDE_BOTH = 2
} lcs_side;

/* the class is a descriptor text, or, when NULL, the closure of the literals */
LCS_API lcs_status lcs_report_stability( const char* klass, const char* const* literals, size_t count,
                                         const char* clone, lcs_side side, unsigned cap, char** json );

typedef struct lcs_table3_options
{
  unsigned cap;       /* 0 selects 4 */
  unsigned max_param; /* 0 selects cap - 1 */
  const char* params; /* e.g. "k=1,a=0", may be NULL */
  const char* row;    /* row pattern such as "X_k", may be NULL */
  int inject_fault;
} lcs_table3_options;

/* *verified is 1 when every record matched the table */
LCS_API lcs_status lcs_report_table3( const lcs_table3_options* opts, char** json, int* verified );

LCS_API lcs_status lcs_report_gfp( const char* const* literals, size_t count, unsigned cap, int check,
                                   char** json );

/* Hasse diagram of the listed classes up to the bounds; dot selects DOT output */
LCS_API lcs_status lcs_report_lattice( unsigned deg_bound, unsigned char_bound, int dot, char** out );

#ifdef __cplusplus
}
#endif

#endif /* LCSTAB_H */
