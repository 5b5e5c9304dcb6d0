//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// JSON documents behind the lcs_report_* calls.  The schema is described in
// README.md.
//
//===----------------------------------------------------------------------===//

#pragma once

#include <lcstab/stability.hpp>

#include <json.hpp>

#include <optional>
#include <span>
#include <string>

namespace lcstab::report
{

using json = nlohmann::ordered_json;

json witness_json( const witness& w );
json verdict_json( const verdict& v );

json analyze( std::span<const std::string> literals );
json closure( std::span<const std::string> literals, unsigned cap, bool check );

/* sides: right, left, or both when unset; clone: all nineteen when unset */
json stability( const std::optional<std::string>& klass, std::span<const std::string> literals,
                const std::optional<std::string>& clone, std::optional<side> which, unsigned cap );

json table3( const table3_options& opts );

/* cap bounds the closure arity; the largest feasible value not above it is used */
json gfp( std::span<const std::string> literals, unsigned cap, bool check );

json lattice( unsigned deg_bound, unsigned char_bound );
std::string lattice_dot( unsigned deg_bound, unsigned char_bound );

/* "k=1,a=0" */
std::map<std::string, unsigned> parse_params( std::string_view text );

} // namespace lcstab::report
