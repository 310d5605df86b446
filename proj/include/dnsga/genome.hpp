// Copyright 2026 The dnsga Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dnsga {

/// Fixed-length bit vector selecting a feature subset: bit i set means
/// feature i is retained.
///
/// Bits are packed into 64-bit words, least significant bit first. Bits past
/// size() in the final word are always zero, which keeps popcount, equality
/// and hashing word-wise.
class Genome {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Genome() = default;
  explicit Genome(std::size_t size, bool value = false);

  static Genome from_bitstring(std::string_view bits);  // "10110"
  static Genome from_hex(std::string_view hex, std::size_t size);
  static Genome from_words(std::vector<Word> words, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t popcount() const noexcept;
  std::span<const Word> words() const noexcept { return words_; }

  // Indices of the set bits in ascending order.
  std::vector<std::size_t> selected() const;

  std::string to_bitstring() const;
  // One hex digit per four bits in index order; bit 4j is the high bit of
  // digit j. Final digit is zero-padded.
  std::string to_hex() const;

  std::size_t hash() const noexcept;

  Genome complement() const;

  friend bool operator==(const Genome& a, const Genome& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  void clear_tail() noexcept;

  std::vector<Word> words_;
  std::size_t size_ = 0;
};

// Throws DimensionError on length mismatch.
std::size_t hamming_distance(const Genome& a, const Genome& b);

struct GenomeHash {
  std::size_t operator()(const Genome& g) const noexcept { return g.hash(); }
};

}  // namespace dnsga
