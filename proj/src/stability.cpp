//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include <lcstab/closure.hpp>
#include <lcstab/error.hpp>
#include <lcstab/literal.hpp>
#include <lcstab/stability.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace lcstab
{

namespace
{

struct gen
{
  word t;
  unsigned arity;
  bool_fn fn;
};

std::vector<gen> prepare( std::span<const bool_fn> basis )
{
  std::vector<gen> out;
  for ( const auto& g : basis )
  {
    if ( g.arity() > kernels::max_word_arity )
      throw error( error_code::limit_exceeded, "basis functions are limited to arity 6" );
    out.push_back( { g.table_word(), g.arity(), g } );
  }
  std::stable_sort( out.begin(), out.end(), []( const auto& a, const auto& b ) { return a.arity < b.arity; } );
  return out;
}

bool_fn fn( word t, unsigned n )
{
  return bool_fn::from_word( n, t );
}

void note_method( std::vector<std::string>& methods, std::string_view m )
{
  if ( std::find( methods.begin(), methods.end(), m ) == methods.end() )
    methods.emplace_back( m );
}

std::string join( const std::vector<std::string>& parts, std::string_view sep )
{
  std::string out;
  for ( const auto& p : parts )
  {
    if ( !out.empty() )
      out += sep;
    out += p;
  }
  return out;
}

/* transposition, cycle, identification of the first two, fictitious extension */
struct map_step
{
  std::vector<unsigned> images;
  unsigned target;
};

std::vector<map_step> minor_generators( unsigned n, unsigned cap )
{
  std::vector<map_step> out;
  std::vector<unsigned> id( n );
  std::iota( id.begin(), id.end(), 0u );
  if ( n >= 2u )
  {
    auto t = id;
    std::swap( t[0], t[1] );
    out.push_back( { t, n } );
  }
  if ( n >= 3u )
  {
    std::vector<unsigned> c( n );
    for ( auto i = 0u; i < n; ++i )
      c[i] = ( i + 1u ) % n;
    out.push_back( { c, n } );
  }
  if ( n >= 2u )
  {
    std::vector<unsigned> s( n );
    s[0] = 0u;
    for ( auto i = 1u; i < n; ++i )
      s[i] = i - 1u;
    out.push_back( { s, n - 1u } );
  }
  if ( n < cap )
    out.push_back( { id, n + 1u } );
  return out;
}

std::optional<witness> check_minors( const fn_class& k )
{
  const auto cap = k.cap();
  for ( auto n = 1u; n <= cap; ++n )
  {
    const auto fs = k.slice( n ).members();
    for ( const auto& step : minor_generators( n, cap ) )
    {
      for ( auto f : fs )
      {
        const auto r = kernels::minor( f, n, step.images, step.target );
        if ( k.contains( r, step.target ) )
          continue;
        witness w{ fn( f, n ), {}, fn( r, step.target ), "minor", {}, false, {} };
        for ( auto i : step.images )
          w.minor_images.push_back( i + 1u );
        return w;
      }
    }
  }
  return std::nullopt;
}

/* permutations of [m] */
std::vector<std::vector<unsigned>> permutations( unsigned m )
{
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> p( m );
  std::iota( p.begin(), p.end(), 0u );
  do
  {
    out.push_back( p );
  } while ( std::next_permutation( p.begin(), p.end() ) );
  return out;
}

word orbit_min( word t, unsigned m, const std::vector<std::vector<unsigned>>& perms )
{
  auto best = t;
  for ( const auto& p : perms )
    best = std::min( best, kernels::minor( t, m, p, m ) );
  return best;
}

/* smallest table in each S_m orbit, for arities up to 4 */
const std::vector<bool>& orbit_representatives( unsigned m )
{
  static std::array<std::once_flag, 5> once;
  static std::array<std::vector<bool>, 5> tables;
  std::call_once( once[m], [m] {
    const auto perms = permutations( m );
    auto& t = tables[m];
    t.assign( std::size_t{ 1 } << ( 1u << m ), false );
    for ( std::size_t w = 0; w < t.size(); ++w )
      t[w] = orbit_min( w, m, perms ) == w;
  } );
  return tables[m];
}

bool permutation_closed( const fn_slice& s, const std::vector<word>& members, unsigned m )
{
  for ( const auto& step : minor_generators( m, m ) )
  {
    if ( step.target != m )
      continue;
    for ( auto f : members )
    {
      if ( !s.contains( kernels::minor( f, m, step.images, m ) ) )
        return false;
    }
  }
  return true;
}

/* a basis in echelon form keyed by leading bit */
class xor_basis
{
public:
  bool insert( word v )
  {
    v = reduce( v );
    if ( v == 0u )
      return false;
    rows_[63u - std::countl_zero( v )] = v;
    ++rank_;
    return true;
  }

  word reduce( word v ) const
  {
    while ( v != 0u )
    {
      const auto top = 63u - static_cast<unsigned>( std::countl_zero( v ) );
      if ( rows_[top] == 0u )
        break;
      v ^= rows_[top];
    }
    return v;
  }

  unsigned rank() const { return rank_; }

private:
  std::array<word, 64> rows_{};
  unsigned rank_ = 0;
};

struct left_outcome
{
  std::optional<witness> found;
  std::string method;
  bool complete = true;
};

witness left_witness( const gen& g, const std::vector<word>& tuple, unsigned m )
{
  std::vector<bool_fn> inner;
  for ( auto f : tuple )
    inner.push_back( fn( f, m ) );
  return witness{ g.fn, std::move( inner ), fn( kernels::compose( g.t, g.arity, tuple, m ), m ), "composition", {},
                  false, {} };
}

std::optional<witness> left_exhaustive( const fn_slice& s, const std::vector<word>& members, const gen& g,
                                        unsigned m, uint64_t budget, bool& complete )
{
  const auto r = g.arity;
  std::vector<word> firsts;
  if ( m >= 2u && permutation_closed( s, members, m ) )
  {
    if ( m <= 4u )
    {
      const auto& reps = orbit_representatives( m );
      for ( auto f : members )
      {
        if ( reps[f] )
          firsts.push_back( f );
      }
    }
    else if ( members.size() <= ( std::size_t{ 1 } << 14u ) )
    {
      const auto perms = permutations( m );
      for ( auto f : members )
      {
        if ( orbit_min( f, m, perms ) == f )
          firsts.push_back( f );
      }
    }
    else
      firsts = members;
  }
  else
    firsts = members;

  uint64_t tuples = 0;
  std::vector<word> tuple( r, members.front() );
  std::vector<std::size_t> pos( r, 0u );
  for ( auto f1 : firsts )
  {
    tuple[0] = f1;
    std::fill( pos.begin() + 1, pos.end(), 0u );
    std::fill( tuple.begin() + 1, tuple.end(), members.front() );
    for ( ;; )
    {
      if ( ++tuples > budget )
      {
        complete = false;
        return std::nullopt;
      }
      if ( !s.contains( kernels::compose( g.t, r, tuple, m ) ) )
        return left_witness( g, tuple, m );
      bool carry = true;
      for ( auto i = r; carry && i-- > 1u; )
      {
        if ( ++pos[i] < members.size() )
        {
          tuple[i] = members[pos[i]];
          carry = false;
        }
        else
        {
          pos[i] = 0u;
          tuple[i] = members.front();
        }
      }
      if ( carry )
        break;
    }
  }
  return std::nullopt;
}

left_outcome left_at( const fn_slice& s, const gen& g, unsigned m, uint64_t budget )
{
  left_outcome out;
  const auto members = s.members();
  if ( members.empty() )
  {
    out.method = "exhaustive";
    return out;
  }
  const auto r = g.arity;
  const auto s0 = members.front();
  const auto anf = kernels::moebius( g.t, r );

  if ( kernels::polydeg( anf ) <= 1 )
  {
    out.method = "affine";
    const bool c = ( anf & 1u ) != 0u;
    const auto cm = kernels::constant( m, c );
    std::vector<unsigned> vars;
    for ( auto i = 0u; i < r; ++i )
    {
      if ( ( anf >> ( 1u << i ) ) & 1u )
        vars.push_back( i );
    }
    std::vector<word> tuple( r, s0 );
    if ( vars.empty() )
    {
      if ( !s.contains( cm ) )
        out.found = left_witness( g, tuple, m );
      return out;
    }
    if ( vars.size() == 1u )
    {
      for ( auto f : members )
      {
        if ( !s.contains( f ^ cm ) )
        {
          tuple[vars[0]] = f;
          out.found = left_witness( g, tuple, m );
          break;
        }
      }
      return out;
    }
    /* closed under a sum of two or more arguments only if the slice is affine */
    xor_basis v;
    for ( auto f : members )
      v.insert( f ^ s0 );
    if ( v.rank() < 64u && members.size() == ( std::size_t{ 1 } << v.rank() ) )
    {
      const auto shift = cm ^ ( ( vars.size() + 1u ) % 2u == 1u ? s0 : word{ 0 } );
      if ( v.reduce( shift ) != 0u )
        out.found = left_witness( g, tuple, m );
      return out;
    }
    out.method = "exhaustive";
    out.found = left_exhaustive( s, members, g, m, ~uint64_t{ 0 }, out.complete );
    return out;
  }

  /* membership by profile alone: the result's profile is g applied to the input profiles */
  uint8_t realized = 0;
  for ( auto f : members )
    realized |= static_cast<uint8_t>( 1u << kernels::profile( f, m ) );
  const auto per_profile = uint64_t{ 1 } << ( ( 1u << m ) - 2u );
  if ( members.size() == static_cast<uint64_t>( std::popcount( realized ) ) * per_profile )
  {
    out.method = "profile";
    std::vector<unsigned> ps;
    for ( auto p = 0u; p < 4u; ++p )
    {
      if ( ( realized >> p ) & 1u )
        ps.push_back( p );
    }
    std::vector<std::vector<unsigned>> failing;
    std::vector<std::size_t> at( r, 0u );
    for ( ;; )
    {
      unsigned zeros = 0, ones = 0;
      for ( auto i = 0u; i < r; ++i )
      {
        zeros |= ( ( ps[at[i]] >> 1u ) & 1u ) << i;
        ones |= ( ps[at[i]] & 1u ) << i;
      }
      const auto q = ( ( ( g.t >> zeros ) & 1u ) ? 2u : 0u ) | ( ( ( g.t >> ones ) & 1u ) ? 1u : 0u );
      if ( !( ( realized >> q ) & 1u ) )
      {
        std::vector<unsigned> tp( r );
        for ( auto i = 0u; i < r; ++i )
          tp[i] = ps[at[i]];
        failing.push_back( tp );
      }
      auto i = r;
      while ( i > 0u && ++at[i - 1u] == ps.size() )
        at[--i] = 0u;
      if ( i == 0u )
        break;
    }
    if ( failing.empty() )
      return out;
    /* lexicographically first failing tuple, chosen greedily */
    std::vector<word> tuple;
    std::vector<unsigned> prefix;
    for ( auto i = 0u; i < r; ++i )
    {
      for ( auto f : members )
      {
        const auto p = kernels::profile( f, m );
        const bool extends = std::any_of( failing.begin(), failing.end(), [&]( const auto& tp ) {
          return std::equal( prefix.begin(), prefix.end(), tp.begin() ) && tp[i] == p;
        } );
        if ( extends )
        {
          tuple.push_back( f );
          prefix.push_back( p );
          break;
        }
      }
    }
    out.found = left_witness( g, tuple, m );
    return out;
  }

  out.method = "exhaustive";
  out.found = left_exhaustive( s, members, g, m, budget, out.complete );
  return out;
}

/* structured functions probed above the cap */

struct catalogue_entry
{
  word t;
  std::string label;
};

using catalogue_pool = std::array<std::vector<catalogue_entry>, kernels::max_word_arity + 1u>;

std::vector<std::pair<bool_fn, std::string>> catalogue_bases()
{
  constexpr auto top = kernels::max_word_arity;
  std::vector<std::pair<bool_fn, std::string>> out;
  auto add = [&]( unsigned n, word t ) {
    const auto f = fn( t, n );
    out.emplace_back( f, format_polynomial( f ) );
  };
  auto conj = []( unsigned k, unsigned n ) {
    auto t = kernels::full_mask( n );
    for ( auto i = 0u; i < k; ++i )
      t &= kernels::var( n, i );
    return t;
  };
  for ( auto a : { false, true } )
  {
    add( 1u, kernels::constant( 1u, a ) );
    add( 1u, kernels::var( 1u, 0u ) ^ kernels::constant( 1u, a ) );
    add( 2u, kernels::var( 2u, 0u ) ^ kernels::var( 2u, 1u ) ^ kernels::constant( 2u, a ) );
    add( 3u, kernels::var( 3u, 0u ) ^ kernels::var( 3u, 1u ) ^ kernels::var( 3u, 2u ) ^ kernels::constant( 3u, a ) );
    add( 2u, ( kernels::var( 2u, 0u ) & kernels::var( 2u, 1u ) ) ^ kernels::var( 2u, 1u ) ^ kernels::constant( 2u, a ) );
    for ( auto k = 2u; k <= top; ++k )
      add( k, conj( k, k ) ^ kernels::constant( k, a ) );
    for ( auto k = 1u; k < top; ++k )
      add( k + 1u, conj( k, k + 1u ) ^ kernels::var( k + 1u, k ) ^ kernels::constant( k + 1u, a ) );
    /* W_k, its sum with one of its own variables, and with a fresh one */
    for ( auto k = 2u; k < top; ++k )
    {
      const auto w = monster( k ).table_word();
      add( k + 1u, w ^ kernels::constant( k + 1u, a ) );
      add( k + 1u, w ^ kernels::var( k + 1u, k ) ^ kernels::constant( k + 1u, a ) );
      if ( k + 2u <= top )
      {
        const auto wide = kernels::shift( w, k + 1u, 0u, k + 2u );
        add( k + 2u, wide ^ kernels::var( k + 2u, k + 1u ) ^ kernels::constant( k + 2u, a ) );
      }
    }
  }
  return out;
}

/* every base function placed on every injective (or monotone) choice of variables */
catalogue_pool build_pool( bool all_injections )
{
  constexpr auto top = kernels::max_word_arity;
  catalogue_pool pool;
  std::array<std::unordered_map<word, std::size_t>, top + 1u> seen;
  for ( const auto& [base, label] : catalogue_bases() )
  {
    const auto r = base.arity();
    const auto t = base.table_word();
    for ( auto n = r; n <= top; ++n )
    {
      /* choose r of n positions, then order them */
      std::vector<bool> pick( n, false );
      std::fill( pick.begin(), pick.begin() + r, true );
      do
      {
        std::vector<unsigned> sigma;
        for ( auto i = 0u; i < n; ++i )
        {
          if ( pick[i] )
            sigma.push_back( i );
        }
        do
        {
          const auto e = kernels::minor( t, r, sigma, n );
          if ( seen[n].emplace( e, pool[n].size() ).second )
            pool[n].push_back( { e, label } );
        } while ( all_injections && std::next_permutation( sigma.begin(), sigma.end() ) );
      } while ( std::prev_permutation( pick.begin(), pick.end() ) );
    }
  }
  for ( auto& p : pool )
    std::sort( p.begin(), p.end(), []( const auto& a, const auto& b ) { return a.t < b.t; } );
  return pool;
}

const catalogue_pool& pool( bool all_injections )
{
  static std::once_flag once;
  static std::array<catalogue_pool, 2> pools;
  std::call_once( once, [] {
    pools[0] = build_pool( false );
    pools[1] = build_pool( true );
  } );
  return pools[all_injections ? 1u : 0u];
}

std::optional<witness> catalogue_right( const std::vector<gen>& gens, const class_descriptor& d, unsigned cap )
{
  constexpr auto top = kernels::max_word_arity;
  const auto& p = pool( true );
  for ( auto n = 1u; n <= top; ++n )
  {
    for ( const auto& e : p[n] )
    {
      if ( !descriptor_member( d, e.t, n ) )
        continue;
      for ( const auto& g : gens )
      {
        const auto a = n + g.arity - 1u;
        if ( a <= cap || a > top )
          continue;
        const auto r = kernels::star( e.t, n, g.t, g.arity );
        if ( descriptor_member( d, r, a ) )
          continue;
        return witness{ fn( e.t, n ), { g.fn }, fn( r, a ), "star", e.label + " * " + format_polynomial( g.fn ),
                        true, {} };
      }
    }
  }
  return std::nullopt;
}

/* one structured function followed by linear companions, as in the classical witnesses */
std::optional<witness> catalogue_left( const std::vector<gen>& gens, const class_descriptor& d, unsigned from )
{
  constexpr auto top = kernels::max_word_arity;
  const auto& p = pool( false );
  for ( const auto& g : gens )
  {
    const auto r = g.arity;
    for ( auto n = std::max( from, 1u ); n <= top; ++n )
    {
      std::vector<const catalogue_entry*> members, linear;
      for ( const auto& e : p[n] )
      {
        if ( !descriptor_member( d, e.t, n ) )
          continue;
        members.push_back( &e );
        if ( kernels::polydeg( kernels::moebius( e.t, n ) ) <= 1 )
          linear.push_back( &e );
      }
      if ( members.empty() || ( r > 1u && linear.empty() ) )
        continue;
      std::vector<std::size_t> at( r, 0u );
      std::vector<word> tuple( r );
      for ( const auto* first : members )
      {
        tuple[0] = first->t;
        std::fill( at.begin(), at.end(), 0u );
        for ( ;; )
        {
          for ( auto i = 1u; i < r; ++i )
            tuple[i] = linear[at[i]]->t;
          const auto res = kernels::compose( g.t, r, tuple, n );
          if ( !descriptor_member( d, res, n ) )
          {
            auto w = left_witness( g, tuple, n );
            std::vector<std::string> labels{ first->label };
            for ( auto i = 1u; i < r; ++i )
              labels.push_back( linear[at[i]]->label );
            w.family = format_polynomial( g.fn ) + " o (" + join( labels, ", " ) + ")";
            w.beyond_cap = true;
            return w;
          }
          auto i = r;
          while ( i > 1u && ++at[i - 1u] == linear.size() )
            at[--i] = 0u;
          if ( i <= 1u )
            break;
        }
      }
    }
  }
  return std::nullopt;
}

verdict right_check( const fn_class& k, const std::vector<gen>& gens, const check_options& opts,
                     const class_descriptor* exact, const std::optional<witness>& minor_failure )
{
  const auto cap = k.cap();
  verdict v;
  v.cap = cap;
  v.exhaustive_arity = cap;
  v.method = "exhaustive";
  if ( minor_failure )
  {
    v.holds = false;
    v.found = minor_failure;
    return v;
  }
  for ( auto n = 1u; n <= cap; ++n )
  {
    const auto fs = k.slice( n ).members();
    for ( const auto& g : gens )
    {
      const auto a = n + g.arity - 1u;
      if ( a > cap )
        continue;
      for ( auto f : fs )
      {
        const auto r = kernels::star( f, n, g.t, g.arity );
        if ( k.contains( r, a ) )
          continue;
        v.holds = false;
        v.found = witness{ fn( f, n ), { g.fn }, fn( r, a ), "star", {}, false, {} };
        return v;
      }
    }
  }
  if ( opts.beyond_cap && exact != nullptr )
  {
    if ( auto w = catalogue_right( gens, *exact, cap ) )
    {
      v.holds = false;
      v.found = std::move( w );
      v.method += "+catalogue";
    }
  }
  return v;
}

verdict left_check( const fn_class& k, const std::vector<gen>& gens, const check_options& opts,
                    const class_descriptor* exact )
{
  const auto cap = k.cap();
  verdict v;
  v.cap = cap;
  v.exhaustive_arity = cap;
  std::vector<std::string> methods;
  for ( const auto& g : gens )
  {
    for ( auto m = 1u; m <= cap; ++m )
    {
      auto out = left_at( k.slice( m ), g, m, opts.tuple_budget );
      note_method( methods, out.method );
      if ( out.found )
      {
        v.holds = false;
        v.found = std::move( out.found );
        v.method = join( methods, "+" );
        return v;
      }
      if ( !out.complete )
        v.exhaustive_arity = std::min( v.exhaustive_arity, m - 1u );
    }
  }
  if ( opts.beyond_cap && exact != nullptr )
  {
    if ( auto w = catalogue_left( gens, *exact, v.exhaustive_arity + 1u ) )
    {
      v.holds = false;
      v.found = std::move( w );
      note_method( methods, "catalogue" );
    }
  }
  v.method = join( methods, "+" );
  return v;
}

} // namespace

bool_fn star( const bool_fn& f, const bool_fn& g )
{
  const auto n = f.arity(), m = g.arity();
  const auto k = n + m - 1u;
  if ( k > max_arity )
    throw error( error_code::limit_exceeded, "f * g would have arity " + std::to_string( k ) );
  std::vector<bool_fn> inner;
  std::vector<bool_fn> gs;
  for ( auto i = 1u; i <= m; ++i )
    gs.push_back( bool_fn::projection( k, i ) );
  inner.push_back( compose( g, gs ) );
  for ( auto i = 1u; i < n; ++i )
    inner.push_back( bool_fn::projection( k, m + i ) );
  return compose( f, inner );
}

fn_class compose_classes( const fn_class& c, const fn_class& k, unsigned cap )
{
  constexpr uint64_t max_work = uint64_t{ 1 } << 32u;
  if ( cap > std::min( c.cap(), k.cap() ) )
    throw error( error_code::limit_exceeded, "both classes must be materialized up to the cap" );
  fn_class out( cap, provenance::ad_hoc );
  for ( auto m = 1u; m <= cap; ++m )
  {
    const auto ks = k.slice( m ).members();
    if ( ks.empty() )
      continue;
    for ( auto n = 1u; n <= cap; ++n )
    {
      const auto cs = c.slice( n ).members();
      double work = static_cast<double>( cs.size() );
      for ( auto i = 0u; i < n; ++i )
        work *= static_cast<double>( ks.size() );
      if ( work > static_cast<double>( max_work ) )
        throw error( error_code::limit_exceeded, "composition at arities (" + std::to_string( n ) + ", " +
                                                      std::to_string( m ) + ") is too large to enumerate" );
      std::vector<std::size_t> at( n, 0u );
      std::vector<word> tuple( n );
      for ( ;; )
      {
        for ( auto i = 0u; i < n; ++i )
          tuple[i] = ks[at[i]];
        for ( auto f : cs )
          out.insert( kernels::compose( f, n, tuple, m ), m );
        auto i = n;
        while ( i > 0u && ++at[i - 1u] == ks.size() )
          at[--i] = 0u;
        if ( i == 0u )
          break;
      }
    }
  }
  return out;
}

std::string_view side_name( side s )
{
  return s == side::right ? "right" : "left";
}

verdict right_stable( const fn_class& k, std::span<const bool_fn> basis, const check_options& opts,
                      const class_descriptor* exact )
{
  return right_check( k, prepare( basis ), opts, exact, check_minors( k ) );
}

verdict left_stable( const fn_class& k, std::span<const bool_fn> basis, const check_options& opts,
                     const class_descriptor* exact )
{
  return left_check( k, prepare( basis ), opts, exact );
}

verdict right_stable( const fn_class& k, clone_id c, const check_options& opts )
{
  return right_stable( k, generators( c ), opts );
}

verdict left_stable( const fn_class& k, clone_id c, const check_options& opts )
{
  return left_stable( k, generators( c ), opts );
}

verdict right_stable( const class_descriptor& d, clone_id c, const check_options& opts )
{
  return right_stable( materialize( d, opts.cap ), generators( c ), opts, &d );
}

verdict left_stable( const class_descriptor& d, clone_id c, const check_options& opts )
{
  return left_stable( materialize( d, opts.cap ), generators( c ), opts, &d );
}

/* the table */

namespace
{

enum class family : uint8_t
{
  blocks,
  x,
  d,
  dx,
  d0,
  d0_c,
  empty,
};

enum class shape : uint8_t
{
  all,
  c_a,
  e_a,
  even,
  odd,
  c_a_e_b,
};

enum class guard : uint8_t
{
  any,
  ge2,
  eq1,
  eq1_same,
  eq1_diff,
};

enum class expr_kind : uint8_t
{
  fixed,
  t_a,
  l_a,
  t_a_t_b,
  l_a_l_b,
};

struct clone_expr
{
  expr_kind kind;
  clone_id c = clone_id::omega;
};

constexpr clone_expr fixed( clone_id c )
{
  return { expr_kind::fixed, c };
}

constexpr clone_expr T_a{ expr_kind::t_a };
constexpr clone_expr L_a{ expr_kind::l_a };
constexpr clone_expr T_ab{ expr_kind::t_a_t_b };
constexpr clone_expr L_ab{ expr_kind::l_a_l_b };

struct row
{
  family fam;
  shape sh;
  guard when;
  clone_expr right;
  clone_expr left;
};

using enum clone_id;

// clang-format off
constexpr std::array rows = {
  row{ family::blocks, shape::all,     guard::any, fixed( omega ), fixed( omega ) },
  row{ family::blocks, shape::c_a,     guard::any, fixed( t0 ),    T_a },
  row{ family::blocks, shape::e_a,     guard::any, fixed( t1 ),    T_a },
  row{ family::blocks, shape::even,    guard::any, fixed( tc ),    fixed( omega ) },
  row{ family::blocks, shape::odd,     guard::any, fixed( tc ),    fixed( s ) },
  row{ family::blocks, shape::c_a_e_b, guard::any, fixed( tc ),    T_ab },

  row{ family::x, shape::all,     guard::ge2,      fixed( ls ), fixed( l ) },
  row{ family::x, shape::all,     guard::eq1,      fixed( s ),  fixed( l ) },
  row{ family::x, shape::c_a,     guard::ge2,      fixed( lc ), L_a },
  row{ family::x, shape::c_a,     guard::eq1,      fixed( sc ), L_a },
  row{ family::x, shape::e_a,     guard::ge2,      fixed( lc ), L_a },
  row{ family::x, shape::e_a,     guard::eq1,      fixed( sc ), L_a },
  row{ family::x, shape::even,    guard::ge2,      fixed( lc ), fixed( l ) },
  row{ family::x, shape::even,    guard::eq1,      fixed( s ),  fixed( omega ) },
  row{ family::x, shape::odd,     guard::ge2,      fixed( lc ), fixed( ls ) },
  row{ family::x, shape::odd,     guard::eq1,      fixed( s ),  fixed( s ) },
  row{ family::x, shape::c_a_e_b, guard::ge2,      fixed( lc ), L_ab },
  row{ family::x, shape::c_a_e_b, guard::eq1_same, fixed( sc ), T_a },
  row{ family::x, shape::c_a_e_b, guard::eq1_diff, fixed( sc ), fixed( sc ) },

  row{ family::d, shape::all,     guard::any, fixed( l ),  fixed( l ) },
  row{ family::d, shape::c_a,     guard::any, fixed( l0 ), L_a },
  row{ family::d, shape::e_a,     guard::any, fixed( l1 ), L_a },
  row{ family::d, shape::even,    guard::ge2, fixed( lc ), fixed( l ) },
  row{ family::d, shape::even,    guard::eq1, fixed( ls ), fixed( l ) },
  row{ family::d, shape::odd,     guard::ge2, fixed( lc ), fixed( ls ) },
  row{ family::d, shape::odd,     guard::eq1, fixed( ls ), fixed( ls ) },
  row{ family::d, shape::c_a_e_b, guard::any, fixed( lc ), L_ab },

  row{ family::dx, shape::all,     guard::any, fixed( ls ), fixed( l ) },
  row{ family::dx, shape::c_a,     guard::any, fixed( lc ), L_a },
  row{ family::dx, shape::e_a,     guard::any, fixed( lc ), L_a },
  row{ family::dx, shape::even,    guard::ge2, fixed( lc ), fixed( l ) },
  row{ family::dx, shape::even,    guard::eq1, fixed( ls ), fixed( l ) },
  row{ family::dx, shape::odd,     guard::ge2, fixed( lc ), fixed( ls ) },
  row{ family::dx, shape::odd,     guard::eq1, fixed( ls ), fixed( ls ) },
  row{ family::dx, shape::c_a_e_b, guard::any, fixed( lc ), L_ab },

  row{ family::d0,    shape::all, guard::any, fixed( omega ), fixed( omega ) },
  row{ family::d0_c,  shape::c_a, guard::any, fixed( omega ), T_a },
  row{ family::empty, shape::all, guard::any, fixed( omega ), fixed( omega ) },
};
// clang-format on

clone_id evaluate( const clone_expr& e, bool a, bool b )
{
  switch ( e.kind )
  {
  case expr_kind::fixed:
    return e.c;
  case expr_kind::t_a:
    return a ? t1 : t0;
  case expr_kind::l_a:
    return a ? l1 : l0;
  case expr_kind::t_a_t_b:
    return a != b ? tc : ( a ? t1 : t0 );
  case expr_kind::l_a_l_b:
    return a != b ? lc : ( a ? l1 : l0 );
  }
  return e.c;
}

std::string_view shape_name( shape s )
{
  switch ( s )
  {
  case shape::all:
    return "";
  case shape::c_a:
    return "C_a";
  case shape::e_a:
    return "E_a";
  case shape::even:
    return "Even";
  case shape::odd:
    return "Odd";
  case shape::c_a_e_b:
    return "C_aE_b";
  }
  return "";
}

std::string pattern_name( family f, shape s )
{
  std::string prefix;
  switch ( f )
  {
  case family::blocks:
    return s == shape::all ? "Ω" : std::string( shape_name( s ) );
  case family::x:
    prefix = "X_k";
    break;
  case family::d:
    prefix = "D_k";
    break;
  case family::dx:
    prefix = "D_i ∩ X_j";
    break;
  case family::d0:
    return "D0";
  case family::d0_c:
    return "D0 ∩ C_a";
  case family::empty:
    return "Empty";
  }
  return s == shape::all ? prefix : prefix + " ∩ " + std::string( shape_name( s ) );
}

std::string guard_name( guard g, family f )
{
  const std::string p = f == family::dx ? "j" : "k";
  switch ( g )
  {
  case guard::any:
    return "";
  case guard::ge2:
    return p + " ≥ 2";
  case guard::eq1:
    return p + " = 1";
  case guard::eq1_same:
    return p + " = 1, a = b";
  case guard::eq1_diff:
    return p + " = 1, a ≠ b";
  }
  return "";
}

struct located
{
  family fam;
  shape sh;
  table3_params params;
};

located locate( const class_descriptor& d )
{
  located out{ family::empty, shape::all, {} };
  switch ( d.kind() )
  {
  case descriptor_kind::empty:
    return out;
  case descriptor_kind::all_const:
    out.fam = family::d0;
    return out;
  case descriptor_kind::const0:
  case descriptor_kind::const1:
    out.fam = family::d0_c;
    out.sh = shape::c_a;
    out.params.a = d.kind() == descriptor_kind::const1;
    return out;
  case descriptor_kind::graded:
    break;
  }
  const auto deg = d.deg_cap(), chr = d.char_cap();
  if ( !deg.is_finite() )
  {
    out.fam = chr.is_finite() ? family::x : family::blocks;
    if ( chr.is_finite() )
      out.params.k = chr.value();
  }
  else if ( chr == deg )
  {
    out.fam = family::d;
    out.params.k = deg.value();
  }
  else
  {
    out.fam = family::dx;
    out.params.i = deg.value();
    out.params.j = chr.value();
  }
  switch ( d.get_block() )
  {
  case block::all:
    out.sh = shape::all;
    break;
  case block::c0:
  case block::c1:
    out.sh = shape::c_a;
    out.params.a = d.get_block() == block::c1;
    break;
  case block::e0:
  case block::e1:
    out.sh = shape::e_a;
    out.params.a = d.get_block() == block::e1;
    break;
  case block::eq:
    out.sh = shape::even;
    break;
  case block::neq:
    out.sh = shape::odd;
    break;
  default:
    out.sh = shape::c_a_e_b;
    out.params.a = ( mask( d.get_block() ) & mask( block::c1 ) ) != 0u;
    out.params.b = ( mask( d.get_block() ) & mask( block::e1 ) ) != 0u;
    break;
  }
  return out;
}

bool guard_matches( guard g, const located& l )
{
  const auto p = l.fam == family::dx ? l.params.j : l.params.k;
  switch ( g )
  {
  case guard::any:
    return true;
  case guard::ge2:
    return p && *p >= 2u;
  case guard::eq1:
    return p && *p == 1u;
  case guard::eq1_same:
    return p && *p == 1u && l.params.a == l.params.b;
  case guard::eq1_diff:
    return p && *p == 1u && l.params.a != l.params.b;
  }
  return false;
}

std::optional<unsigned> param_value( const table3_params& p, const std::string& key )
{
  if ( key == "i" )
    return p.i;
  if ( key == "j" )
    return p.j;
  if ( key == "k" )
    return p.k;
  if ( key == "a" && p.a )
    return *p.a ? 1u : 0u;
  if ( key == "b" && p.b )
    return *p.b ? 1u : 0u;
  return std::nullopt;
}

/* spaces dropped, "∩" read as "&", "Ω" as "Omega", ASCII letters folded */
std::string fold_pattern( std::string_view s )
{
  std::string out;
  for ( std::size_t i = 0; i < s.size(); )
  {
    if ( s.substr( i, 3 ) == "∩" )
    {
      out += '&';
      i += 3;
    }
    else if ( s.substr( i, 2 ) == "Ω" )
    {
      out += "omega";
      i += 2;
    }
    else
    {
      const char c = s[i++];
      if ( c != ' ' )
        out += static_cast<char>( std::tolower( static_cast<unsigned char>( c ) ) );
    }
  }
  return out;
}

} // namespace

table3_entry table3_lookup( const class_descriptor& d )
{
  const auto l = locate( d );
  for ( const auto& r : rows )
  {
    if ( r.fam != l.fam || r.sh != l.sh || !guard_matches( r.when, l ) )
      continue;
    const bool a = l.params.a.value_or( false ), b = l.params.b.value_or( false );
    return { pattern_name( r.fam, r.sh ), guard_name( r.when, r.fam ), l.params, evaluate( r.right, a, b ),
             evaluate( r.left, a, b ) };
  }
  throw error( error_code::invalid_argument, "no row for " + descriptor_code( d ) );
}

std::vector<table3_instance> instantiate_table3( unsigned max_param )
{
  std::vector<class_descriptor> ds;
  for ( auto b : all_blocks )
    ds.push_back( class_descriptor::graded( cap::infinite(), cap::infinite(), b ) );
  for ( auto k = 1u; k <= max_param; ++k )
  {
    for ( auto b : all_blocks )
      ds.push_back( class_descriptor::graded( cap::infinite(), cap( k ), b ) );
  }
  for ( auto k = 1u; k <= max_param; ++k )
  {
    for ( auto b : all_blocks )
      ds.push_back( class_descriptor::graded( cap( k ), cap( k ), b ) );
  }
  for ( auto i = 2u; i <= max_param; ++i )
  {
    for ( auto j = 1u; j < i; ++j )
    {
      for ( auto b : all_blocks )
        ds.push_back( class_descriptor::graded( cap( i ), cap( j ), b ) );
    }
  }
  ds.push_back( class_descriptor::constants() );
  ds.push_back( class_descriptor::constant( false ) );
  ds.push_back( class_descriptor::constant( true ) );
  ds.push_back( class_descriptor::empty() );

  std::vector<table3_instance> out;
  for ( const auto& d : ds )
  {
    const auto e = table3_lookup( d );
    out.push_back( { d, e.pattern, e.guard, e.params, e.right_max, e.left_max } );
  }
  return out;
}

table3_report verify_table3( const table3_options& opts )
{
  for ( const auto& kv : opts.filter )
  {
    if ( kv.first != "i" && kv.first != "j" && kv.first != "k" && kv.first != "a" && kv.first != "b" )
      throw error( error_code::invalid_argument, "unknown parameter '" + kv.first + "'" );
  }
  const auto wanted = fold_pattern( opts.pattern );

  table3_report report;
  report.cap = opts.check.cap;
  for ( auto& inst : instantiate_table3( opts.max_param ) )
  {
    if ( !wanted.empty() && fold_pattern( inst.pattern ) != wanted )
      continue;
    const bool keep = std::all_of( opts.filter.begin(), opts.filter.end(), [&]( const auto& kv ) {
      return param_value( inst.params, kv.first ) == kv.second;
    } );
    if ( keep )
      report.instances.push_back( std::move( inst ) );
  }
  if ( opts.inject_fault )
  {
    const auto it = std::find_if( report.instances.begin(), report.instances.end(),
                                  []( const auto& i ) { return i.right_max != omega; } );
    if ( it != report.instances.end() )
      it->right_max = omega;
  }

  for ( std::size_t idx = 0; idx < report.instances.size(); ++idx )
  {
    const auto& inst = report.instances[idx];
    const auto k = materialize( inst.klass, opts.check.cap );
    const auto minor_failure = check_minors( k );
    for ( auto which : { side::right, side::left } )
    {
      const auto max = which == side::right ? inst.right_max : inst.left_max;
      for ( auto c : all_clones() )
      {
        const auto gens = prepare( generators( c ) );
        table3_record rec;
        rec.instance = idx;
        rec.clone = c;
        rec.which = which;
        rec.expected_holds = clone_leq( c, max );
        rec.result = which == side::right ? right_check( k, gens, opts.check, &inst.klass, minor_failure )
                                          : left_check( k, gens, opts.check, &inst.klass );
        if ( !rec.ok() )
          ++report.failures;
        report.records.push_back( std::move( rec ) );
      }
    }
  }
  return report;
}

} // namespace lcstab
