//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/clones.hpp>
#include <lcstab/error.hpp>
#include <lcstab/literal.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <mutex>

namespace lcstab
{

namespace
{

namespace k = kernels;

constexpr unsigned enumeration_cap = 4u;

struct clone_info
{
  clone_id id;
  std::string_view name;
  std::string_view symbol;
  bool listed;
  std::vector<std::string_view> basis;
};

/* constants are written "0" / "1" and read as unary functions */
const std::vector<clone_info>& infos()
{
  static const std::vector<clone_info> table = {
      { clone_id::omega, "Omega", "Ω", true, { "x1*x2 + 1" } },
      { clone_id::t0, "T0", "T0", false, { "x1*x2", "x1 + x2" } },
      { clone_id::t1, "T1", "T1", false, { "x1*x2 + x1 + x2", "x1 + x2 + 1" } },
      { clone_id::tc, "Tc", "Tc", false, { "x1*x2 + x1 + x2", "x1*x2 + x1*x3 + x1" } },
      { clone_id::m, "M", "M", false, { "x1*x2", "x1*x2 + x1 + x2", "0", "1" } },
      { clone_id::s, "S", "S", true, { "x1*x2 + x1*x3 + x2*x3", "x1 + 1" } },
      { clone_id::sc, "Sc", "Sc", false, { "x1*x2 + x1*x3 + x2*x3", "x1 + x2 + x3" } },
      { clone_id::sm, "SM", "SM", true, { "x1*x2 + x1*x3 + x2*x3" } },
      { clone_id::l, "L", "L", true, { "x1 + x2", "1" } },
      { clone_id::l0, "L0", "L0", false, { "x1 + x2" } },
      { clone_id::l1, "L1", "L1", false, { "x1 + x2 + 1" } },
      { clone_id::ls, "LS", "LS", true, { "x1 + x2 + x3", "x1 + 1" } },
      { clone_id::lc, "Lc", "Lc", true, { "x1 + x2 + x3" } },
      { clone_id::lambda_c, "Lambda_c", "Λc", true, { "x1*x2" } },
      { clone_id::v_c, "V_c", "Vc", true, { "x1*x2 + x1 + x2" } },
      { clone_id::i_star, "Istar", "I*", true, { "x1 + 1" } },
      { clone_id::i0, "I0", "I0", true, { "0" } },
      { clone_id::i1, "I1", "I1", true, { "1" } },
      { clone_id::ic, "Ic", "Ic", true, {} },
  };
  return table;
}

const clone_info& info( clone_id c )
{
  return infos().at( static_cast<std::size_t>( c ) );
}

/* upper covers among the nineteen */
const std::vector<std::pair<clone_id, clone_id>>& cover_pairs()
{
  using c = clone_id;
  static const std::vector<std::pair<clone_id, clone_id>> pairs = {
      { c::ic, c::i_star }, { c::ic, c::i0 },     { c::ic, c::i1 },  { c::ic, c::lc },
      { c::ic, c::sm },     { c::ic, c::lambda_c }, { c::ic, c::v_c }, { c::i_star, c::ls },
      { c::i0, c::l0 },     { c::i0, c::m },      { c::i1, c::l1 },  { c::i1, c::m },
      { c::lc, c::ls },     { c::lc, c::l0 },     { c::lc, c::l1 },  { c::lc, c::sc },
      { c::ls, c::l },      { c::ls, c::s },      { c::l0, c::l },   { c::l0, c::t0 },
      { c::l1, c::l },      { c::l1, c::t1 },     { c::l, c::omega }, { c::sm, c::sc },
      { c::sm, c::m },      { c::sc, c::s },      { c::sc, c::tc },  { c::s, c::omega },
      { c::lambda_c, c::m }, { c::lambda_c, c::tc }, { c::v_c, c::m }, { c::v_c, c::tc },
      { c::m, c::omega },   { c::tc, c::t0 },     { c::tc, c::t1 },  { c::t0, c::omega },
      { c::t1, c::omega },
  };
  return pairs;
}

using order_matrix = std::array<std::array<bool, num_clones>, num_clones>;

const order_matrix& order()
{
  static const order_matrix leq = [] {
    order_matrix r{};
    for ( auto i = 0u; i < num_clones; ++i )
      r[i][i] = true;
    for ( auto [a, b] : cover_pairs() )
      r[static_cast<std::size_t>( a )][static_cast<std::size_t>( b )] = true;
    for ( auto m = 0u; m < num_clones; ++m )
      for ( auto i = 0u; i < num_clones; ++i )
        for ( auto j = 0u; j < num_clones; ++j )
          r[i][j] = r[i][j] || ( r[i][m] && r[m][j] );
    return r;
  }();
  return leq;
}

bool is_projection( word t, unsigned n )
{
  for ( auto i = 0u; i < n; ++i )
  {
    if ( t == k::var( n, i ) )
      return true;
  }
  return false;
}

bool is_conjunction( word t, unsigned n )
{
  const auto a = k::moebius( t, n );
  return std::popcount( a ) == 1 && a != 1u;
}

} // namespace

const std::array<clone_id, num_clones>& all_clones()
{
  static const std::array<clone_id, num_clones> ids = [] {
    std::array<clone_id, num_clones> r{};
    for ( auto i = 0u; i < num_clones; ++i )
      r[i] = static_cast<clone_id>( i );
    return r;
  }();
  return ids;
}

std::string_view clone_name( clone_id c )
{
  return info( c ).name;
}

std::string_view clone_symbol( clone_id c )
{
  return info( c ).symbol;
}

std::optional<clone_id> clone_from_name( std::string_view name )
{
  auto lower = []( std::string_view s ) {
    std::string r;
    for ( auto ch : s )
      r += static_cast<char>( std::tolower( static_cast<unsigned char>( ch ) ) );
    return r;
  };
  const auto wanted = lower( name );
  for ( const auto& ci : infos() )
  {
    if ( name == ci.name || name == ci.symbol || wanted == lower( ci.name ) )
      return ci.id;
  }
  if ( wanted == "lambdac" || wanted == "λc" )
    return clone_id::lambda_c;
  if ( wanted == "vc" )
    return clone_id::v_c;
  if ( wanted == "i*" )
    return clone_id::i_star;
  if ( wanted == "all" )
    return clone_id::omega;
  return std::nullopt;
}

bool member( clone_id c, word t, unsigned n )
{
  const bool p0 = !k::value_at_zero( t );
  const bool p1 = k::value_at_ones( t, n );
  auto self_dual = [&] { return t == k::dual( t, n ); };
  auto linear = [&] { return k::degree( t, n ) <= 1u; };
  switch ( c )
  {
  case clone_id::omega:
    return true;
  case clone_id::t0:
    return p0;
  case clone_id::t1:
    return p1;
  case clone_id::tc:
    return p0 && p1;
  case clone_id::m:
    return k::is_monotone( t, n );
  case clone_id::s:
    return self_dual();
  case clone_id::sc:
    return p0 && p1 && self_dual();
  case clone_id::sm:
    return self_dual() && k::is_monotone( t, n );
  case clone_id::l:
    return linear();
  case clone_id::l0:
    return linear() && p0;
  case clone_id::l1:
    return linear() && p1;
  case clone_id::ls:
    return linear() && self_dual();
  case clone_id::lc:
    return linear() && p0 && p1;
  case clone_id::lambda_c:
    return is_conjunction( t, n );
  case clone_id::v_c:
    return is_conjunction( k::dual( t, n ), n );
  case clone_id::i_star:
    return is_projection( t, n ) || is_projection( k::complement( t, n ), n );
  case clone_id::i0:
    return is_projection( t, n ) || t == 0u;
  case clone_id::i1:
    return is_projection( t, n ) || t == k::full_mask( n );
  case clone_id::ic:
    return is_projection( t, n );
  }
  return false;
}

bool member( clone_id c, const bool_fn& f )
{
  if ( f.arity() <= 6u )
    return member( c, f.table_word(), f.arity() );

  /* wide functions: the same predicates through the generic operations */
  const auto sig = compute_signature( f );
  const auto neg = negations( f );
  const bool p0 = !sig.c0, p1 = sig.c1;
  const bool self_dual = neg.dual == f;
  const bool linear = sig.degree <= 1u;
  auto monotone = [&] {
    for ( auto i = 0u; i < f.arity(); ++i )
    {
      const uint64_t bit = uint64_t{ 1 } << i;
      for ( uint64_t b = 0; b < f.num_points(); ++b )
      {
        if ( !( b & bit ) && f.value( b ) && !f.value( b | bit ) )
          return false;
      }
    }
    return true;
  };
  auto projection = [&]( const bool_fn& g ) {
    const auto ms = anf( g );
    return ms.size() == 1u && std::popcount( ms.monomials()[0] ) == 1;
  };
  auto conjunction = [&]( const bool_fn& g ) {
    const auto ms = anf( g );
    return ms.size() == 1u && ms.monomials()[0] != 0u;
  };
  switch ( c )
  {
  case clone_id::omega: return true;
  case clone_id::t0: return p0;
  case clone_id::t1: return p1;
  case clone_id::tc: return p0 && p1;
  case clone_id::m: return monotone();
  case clone_id::s: return self_dual;
  case clone_id::sc: return p0 && p1 && self_dual;
  case clone_id::sm: return self_dual && monotone();
  case clone_id::l: return linear;
  case clone_id::l0: return linear && p0;
  case clone_id::l1: return linear && p1;
  case clone_id::ls: return linear && self_dual;
  case clone_id::lc: return linear && p0 && p1;
  case clone_id::lambda_c: return conjunction( f );
  case clone_id::v_c: return conjunction( neg.dual );
  case clone_id::i_star: return projection( f ) || projection( neg.outer );
  case clone_id::i0: return projection( f ) || ( sig.degree == 0u && !sig.c0 );
  case clone_id::i1: return projection( f ) || ( sig.degree == 0u && sig.c0 );
  case clone_id::ic: return projection( f );
  }
  return false;
}

const std::vector<bool_fn>& generators( clone_id c )
{
  static const std::vector<std::vector<bool_fn>> bases = [] {
    std::vector<std::vector<bool_fn>> r;
    for ( const auto& ci : infos() )
    {
      std::vector<bool_fn> fs;
      for ( auto text : ci.basis )
        fs.push_back( parse_function( text ) );
      r.push_back( std::move( fs ) );
    }
    return r;
  }();
  return bases.at( static_cast<std::size_t>( c ) );
}

bool has_listed_basis( clone_id c )
{
  return info( c ).listed;
}

bool clone_leq( clone_id a, clone_id b )
{
  return order()[static_cast<std::size_t>( a )][static_cast<std::size_t>( b )];
}

bool clone_covers( clone_id a, clone_id b )
{
  return std::find( cover_pairs().begin(), cover_pairs().end(), std::pair{ a, b } ) != cover_pairs().end();
}

const std::vector<word>& enumerate( clone_id c, unsigned arity )
{
  if ( arity == 0u || arity > enumeration_cap )
    throw error( error_code::limit_exceeded, "clone enumeration is limited to arities 1.." +
                                                  std::to_string( enumeration_cap ) );
  struct memo_entry
  {
    std::once_flag once;
    std::vector<word> members;
  };
  static std::array<std::array<memo_entry, enumeration_cap>, num_clones> memo;
  auto& e = memo[static_cast<std::size_t>( c )][arity - 1u];
  std::call_once( e.once, [&] {
    const uint64_t count = uint64_t{ 1 } << ( 1u << arity );
    for ( uint64_t t = 0; t < count; ++t )
    {
      if ( member( c, t, arity ) )
        e.members.push_back( t );
    }
  } );
  return e.members;
}

fn_class enumerate_class( clone_id c, unsigned cap )
{
  fn_class out( cap, provenance::enumerated );
  for ( auto n = 1u; n <= cap; ++n )
  {
    for ( auto t : enumerate( c, n ) )
      out.insert( t, n );
  }
  return out;
}

fn_class generate( const std::vector<bool_fn>& basis, unsigned cap )
{
  if ( cap == 0u || cap > enumeration_cap )
    throw error( error_code::limit_exceeded, "generation is limited to arities 1.." +
                                                  std::to_string( enumeration_cap ) );
  for ( const auto& g : basis )
  {
    if ( g.arity() > 6u )
      throw error( error_code::limit_exceeded, "basis functions are limited to 6 arguments" );
  }
  fn_class out( cap, provenance::closure );
  for ( auto m = 1u; m <= cap; ++m )
  {
    /* a term over x_1..x_m only ever needs m-ary subterms */
    std::vector<word> members;
    for ( auto i = 0u; i < m; ++i )
    {
      if ( out.insert( k::var( m, i ), m ) )
        members.push_back( k::var( m, i ) );
    }
    std::size_t done = 0;
    while ( done < members.size() )
    {
      const auto old_end = members.size();
      for ( const auto& g : basis )
      {
        const auto r = g.arity();
        /* tuples that involve at least one member from [done, old_end) */
        std::vector<std::size_t> idx( r, 0u );
        std::vector<word> inner( r );
        for ( ;; )
        {
          bool fresh = false;
          for ( auto i = 0u; i < r; ++i )
            fresh = fresh || idx[i] >= done;
          if ( fresh || r == 0u )
          {
            for ( auto i = 0u; i < r; ++i )
              inner[i] = members[idx[i]];
            const auto t = k::compose( g.table_word(), r, inner, m );
            if ( out.insert( t, m ) )
              members.push_back( t );
          }
          auto pos = 0u;
          while ( pos < r && ++idx[pos] == old_end )
            idx[pos++] = 0u;
          if ( pos == r )
            break;
        }
      }
      done = old_end;
    }
  }
  return out;
}

} // namespace lcstab
