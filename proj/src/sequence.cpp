#include "rrgroup/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrgroup {

namespace {

void check_counts(std::span<const std::int64_t> a) {
  if (std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v < 0; })) {
    throw std::invalid_argument("explosion of a sequence with a negative entry");
  }
}

}  // namespace

Bits explosion(std::span<const std::int64_t> a) {
  check_counts(a);
  std::size_t length = a.size();
  for (auto v : a) length += static_cast<std::size_t>(v);
  Bits out;
  out.reserve(length);
  for (auto v : a) {
    out.insert(out.end(), static_cast<std::size_t>(v), 1);
    out.push_back(0);
  }
  return out;
}

Bits explosion_prefix(std::span<const std::int64_t> a, std::size_t limit) {
  Bits out;
  out.reserve(limit);
  for (auto v : a) {
    if (out.size() >= limit) break;
    if (v < 0) throw std::invalid_argument("explosion of a sequence with a negative entry");
    const auto ones = std::min(static_cast<std::size_t>(v), limit - out.size());
    out.insert(out.end(), ones, 1);
    if (out.size() < limit) out.push_back(0);
  }
  return out;
}

Bits shift(std::span<const std::uint8_t> a) {
  Bits out;
  out.reserve(a.size() + 1);
  out.push_back(0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

Bits repeat(std::span<const std::uint8_t> a, std::uint64_t times) {
  Bits out;
  out.reserve(a.size() * times);
  for (std::uint64_t t = 0; t < times; ++t) out.insert(out.end(), a.begin(), a.end());
  return out;
}

void accumulate(Counts& a, std::span<const std::uint8_t> b) {
  const auto n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) a[k] += b[k];
}

std::string to_bit_string(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace rrgroup
