//===----------------------------------------------------------------------===//
//
// Part of the lcstab project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcstab
{

enum class error_code
{
  parse,
  arity_mismatch,
  out_of_range,
  limit_exceeded,
  invalid_argument,
};

class error : public std::runtime_error
{
public:
  error( error_code code, const std::string& what )
      : std::runtime_error( what ), code_( code ) {}

  error_code code() const noexcept { return code_; }

private:
  error_code code_;
};

/* position is a 0-based character offset into the parsed text */
class parse_error : public error
{
public:
  parse_error( const std::string& what, std::size_t position )
      : error( error_code::parse, what + " at position " + std::to_string( position ) ),
        message_( what ), position_( position ) {}

  /* without the position suffix */
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string message_;
  std::size_t position_;
};

} // namespace lcstab
