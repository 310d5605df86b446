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

#include "dnsga/genome.hpp"

#include <bit>
#include <utility>

#include "dnsga/error.hpp"
#include "dnsga/random.hpp"

namespace dnsga {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + Genome::kWordBits - 1) / Genome::kWordBits; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Genome::Genome(std::size_t size, bool value)
    : words_(word_count(size), value ? ~Word{0} : Word{0}), size_(size) {
  clear_tail();
}

Genome Genome::from_bitstring(std::string_view bits) {
  Genome g(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      g.set(i);
    } else if (bits[i] != '0') {
      throw InvalidArgument("bitstring contains a character other than 0/1");
    }
  }
  return g;
}

Genome Genome::from_hex(std::string_view hex, std::size_t size) {
  if (hex.size() != (size + 3) / 4) {
    throw DimensionError("hex genome has " + std::to_string(hex.size()) + " digits, expected " +
                         std::to_string((size + 3) / 4));
  }
  Genome g(size);
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const int v = hex_value(hex[j]);
    if (v < 0) throw InvalidArgument("invalid hex digit in genome");
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * j + b;
      const bool bit = (v >> (3 - b)) & 1;
      if (i >= size) {
        if (bit) throw InvalidArgument("hex genome has bits set past its length");
        continue;
      }
      if (bit) g.set(i);
    }
  }
  return g;
}

Genome Genome::from_words(std::vector<Word> words, std::size_t size) {
  if (words.size() != word_count(size)) throw DimensionError("word count does not match genome size");
  Genome g;
  g.words_ = std::move(words);
  g.size_ = size;
  g.clear_tail();
  return g;
}

void Genome::set(std::size_t i, bool value) noexcept {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t Genome::popcount() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> Genome::selected() const {
  std::vector<std::size_t> out;
  out.reserve(popcount());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word word = words_[w];
    while (word != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::string Genome::to_bitstring() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::string Genome::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s((size_ + 3) / 4, '0');
  for (std::size_t j = 0; j < s.size(); ++j) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * j + b;
      if (i < size_ && test(i)) v |= 1 << (3 - b);
    }
    s[j] = kDigits[v];
  }
  return s;
}

std::size_t Genome::hash() const noexcept {
  std::uint64_t h = mix64(size_);
  for (Word w : words_) h = mix64(h ^ w);
  return static_cast<std::size_t>(h);
}

Genome Genome::complement() const {
  Genome g = *this;
  for (Word& w : g.words_) w = ~w;
  g.clear_tail();
  return g;
}

void Genome::clear_tail() noexcept {
  const std::size_t rem = size_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

std::size_t hamming_distance(const Genome& a, const Genome& b) {
  if (a.size() != b.size()) {
    throw DimensionError("hamming_distance: lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
  }
  const auto wa = a.words();
  const auto wb = b.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) n += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return n;
}

}  // namespace dnsga
