#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "stickcut/counting.hpp"

namespace stickcut {

/// Raised by parse_instance with line/field context in the message.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adversarial family: sticks (m-j)·x + j for j = 0..m/2, padded with
/// copies of x-1 up to m² sticks; k = 3m²/8 + 3m/4. The optimal cut length
/// is x, which is neither a stick length nor L_i/k for any stick.
/// Requires m a positive multiple of 4 and x >= m/2 (rational x allowed);
/// throws std::domain_error otherwise.
Instance gen_example(std::uint64_t m, const Rational& x);

/// The first n primes in decreasing order; pairwise coprime lengths keep
/// almost all candidates distinct.
Instance gen_primes(std::size_t n, std::uint64_t k);

/// n lengths drawn uniformly from {a/b : 1 <= a <= max_num, 1 <= b <= max_den},
/// deterministic for a given seed. Duplicates (after reduction) are kept.
Instance gen_random(std::size_t n, std::uint64_t k, std::uint64_t max_num,
                    std::uint64_t max_den, std::uint64_t seed);

/// Instance file: a UTF-8 JSON document (no BOM) with exactly two fields,
///   {"k": <positive integer>, "sticks": ["a", "a/b", ...]}
/// Unknown fields, empty stick lists, non-positive lengths and malformed
/// rationals are rejected with a ParseError naming the offending field.
Instance parse_instance(const std::string& text);

/// Canonical serialization; parse_instance(serialize_instance(i)) == i, and
/// canonical files round-trip byte-identically.
std::string serialize_instance(const Instance& inst);

}  // namespace stickcut
