#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "enriques/quasihomogeneous.hpp"

namespace enriques {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts `k,l,p,q` or `[x*][y*](x^p+y^q)` (parentheses optional without
/// unit factors; whitespace ignored). Swaps p/q together with k/l when
/// p > q. Malformed text throws ParseError; a well-formed spec outside the
/// normal form throws DomainError from validate().
QuasihomogeneousSpec parse_spec(std::string_view text);

}  // namespace enriques
