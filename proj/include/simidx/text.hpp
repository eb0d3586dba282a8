// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simidx/types.hpp"

namespace simidx {

/// Code of the end-marker appended by ingest(). It is the NUL byte, which
/// orders below every other byte value.
inline constexpr std::int32_t kSentinelCode = 0;

/// Maps external symbol codes (byte values, or generator codes) to dense
/// ranks 0..size()-1 preserving code order.
class Alphabet {
 public:
  Alphabet() = default;

  /// Builds the alphabet of the distinct codes in `codes`.
  static Alphabet of(std::span<const std::int32_t> codes);

  [[nodiscard]] std::size_t size() const { return codes_.size(); }
  [[nodiscard]] std::int32_t code(Symbol rank) const { return codes_.at(rank); }
  [[nodiscard]] std::optional<Symbol> rank(std::int32_t code) const;
  [[nodiscard]] const std::vector<std::int32_t>& codes() const { return codes_; }

  /// Maps raw pattern bytes to ranks; nullopt if some byte is not in the
  /// alphabet (the pattern then cannot occur).
  [[nodiscard]] std::optional<std::vector<Symbol>> encode(std::string_view bytes) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  explicit Alphabet(std::vector<std::int32_t> sorted_codes) : codes_(std::move(sorted_codes)) {}

  std::vector<std::int32_t> codes_;
};

/// Immutable symbol sequence over a dense ordered alphabet.
class Text {
 public:
  /// `append_sentinel` appends kSentinelCode, which must not occur in `codes`.
  static Text from_codes(std::span<const std::int32_t> codes, bool append_sentinel);

  [[nodiscard]] std::span<const Symbol> symbols() const { return symbols_; }
  [[nodiscard]] std::size_t size() const { return symbols_.size(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
  [[nodiscard]] bool terminated() const { return terminated_; }
  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  /// Number of distinct symbols occurring in the text.
  [[nodiscard]] std::size_t sigma() const { return alphabet_.size(); }

  [[nodiscard]] std::vector<std::int32_t> codes() const;
  /// Raw bytes of the text, end-marker included. Throws if a code exceeds a byte.
  [[nodiscard]] std::string to_bytes() const;
  /// Printable rendering: the end-marker prints as '$', non-printable codes as <code>.
  [[nodiscard]] std::string render() const;
  [[nodiscard]] std::string render(std::span<const Symbol> symbols) const;

  /// For a terminated text core·t, returns reverse(core)·t over the same alphabet.
  [[nodiscard]] Text reversed_core() const;

  friend bool operator==(const Text&, const Text&) = default;

 private:
  Text(std::vector<Symbol> symbols, Alphabet alphabet, bool terminated)
      : symbols_(std::move(symbols)), alphabet_(std::move(alphabet)), terminated_(terminated) {}

  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
  bool terminated_ = false;
};

/// Reads raw bytes into a Text. With `append_terminator` a NUL end-marker is
/// appended and NUL bytes in the input are rejected. Otherwise the text counts
/// as terminated iff its last byte occurs exactly once.
Text ingest(std::string_view raw, bool append_terminator);

enum class Family { lemma52, fibonacci, thue_morse, unary, all_distinct, random, periodic };

struct FamilyParams {
  /// k for lemma52, the length n for every other family.
  std::size_t size = 1;
  std::size_t sigma = 2;   // random, periodic
  std::size_t period = 3;  // periodic
  std::uint64_t seed = 1;  // random, periodic
  bool terminate = false;  // append the end-marker
};

/// Generates one string of `family`.
///
/// lemma52 with parameter k yields the string
///   #1 1 #2 12 #3 123 ... #k 12..k #(k+1)
/// over 2k+1 symbols; digits 1..k get codes 1..k and barred symbols #1..#(k+1)
/// get codes k+1..2k+1, so ranks run 0..2k. Its last symbol is unique, so the
/// text is terminated without an appended end-marker.
Text gen_family(Family family, const FamilyParams& params);

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);

}  // namespace simidx
