#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rrgroup {

using Bits = std::vector<std::uint8_t>;
using Counts = std::vector<std::int64_t>;

/// (a_1, a_2, ...) -> (1^{a_1}, 0, 1^{a_2}, 0, ...). One zero per entry, a_k ones before it.
/// Throws std::invalid_argument on a negative entry.
Bits explosion(std::span<const std::int64_t> a);

/// Prefix of explosion(a) of length `limit`, consuming only as many entries as needed.
Bits explosion_prefix(std::span<const std::int64_t> a, std::size_t limit);

/// Prepends a zero.
Bits shift(std::span<const std::uint8_t> a);

/// `times` back-to-back copies of `a`.
Bits repeat(std::span<const std::uint8_t> a, std::uint64_t times);

/// Elementwise a += b over the common length.
void accumulate(Counts& a, std::span<const std::uint8_t> b);

std::string to_bit_string(std::span<const std::uint8_t> bits);

}  // namespace rrgroup
