//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/bool_fn.hpp>

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

namespace lcstab
{

/* largest cap a materialized class may have */
inline constexpr unsigned max_class_cap = 6u;

enum class provenance
{
  enumerated,
  closure,
  ad_hoc,
};

/*! \brief The functions of one arity, as a bitmap (arity <= 4) or a hash set. */
class fn_slice
{
public:
  explicit fn_slice( unsigned arity );

  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0u; }

  bool contains( word t ) const;
  /* true if t was not present */
  bool insert( word t );

  /* ascending */
  std::vector<word> members() const;
  void for_each( const std::function<void( word )>& fn ) const;

  friend bool operator==( const fn_slice& a, const fn_slice& b );

private:
  unsigned arity_;
  std::size_t size_ = 0;
  std::vector<uint64_t> bits_;
  std::unordered_set<word> sparse_;
};

/*! \brief Per-arity sets of functions for arities 1..cap. */
class fn_class
{
public:
  explicit fn_class( unsigned cap, provenance p = provenance::ad_hoc );

  unsigned cap() const noexcept { return static_cast<unsigned>( slices_.size() ); }
  provenance origin() const noexcept { return origin_; }
  void set_origin( provenance p ) noexcept { origin_ = p; }

  const fn_slice& slice( unsigned arity ) const;
  fn_slice& slice( unsigned arity );

  bool contains( const bool_fn& f ) const;
  bool contains( word t, unsigned arity ) const;
  bool insert( const bool_fn& f );
  bool insert( word t, unsigned arity );

  std::size_t size( unsigned arity ) const { return slice( arity ).size(); }
  bool empty() const;

  /* all members of arity n as functions, ascending */
  std::vector<bool_fn> functions( unsigned arity ) const;

  friend bool operator==( const fn_class& a, const fn_class& b ) { return a.slices_ == b.slices_; }

private:
  provenance origin_;
  std::vector<fn_slice> slices_;
};

/* set of all functions of arity 1..cap satisfying the predicate */
fn_class filter_class( unsigned cap, const std::function<bool( word, unsigned )>& pred,
                       provenance p = provenance::enumerated );

} // namespace lcstab
