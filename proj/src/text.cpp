// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#include "simidx/text.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>

namespace simidx {

Alphabet Alphabet::of(std::span<const std::int32_t> codes) {
  std::vector<std::int32_t> sorted(codes.begin(), codes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return Alphabet(std::move(sorted));
}

std::optional<Symbol> Alphabet::rank(std::int32_t code) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<Symbol>(it - codes_.begin());
}

std::optional<std::vector<Symbol>> Alphabet::encode(std::string_view bytes) const {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  for (unsigned char b : bytes) {
    auto r = rank(static_cast<std::int32_t>(b));
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

Text Text::from_codes(std::span<const std::int32_t> codes, bool append_sentinel) {
  if (codes.empty()) throw InvalidArgument("text must be non-empty");
  std::vector<std::int32_t> all(codes.begin(), codes.end());
  if (append_sentinel) {
    if (std::find(all.begin(), all.end(), kSentinelCode) != all.end())
      throw InvalidArgument("end-marker symbol occurs inside the input");
    all.push_back(kSentinelCode);
  }
  Alphabet alphabet = Alphabet::of(all);
  std::vector<Symbol> symbols;
  symbols.reserve(all.size());
  for (auto c : all) symbols.push_back(*alphabet.rank(c));
  const bool terminated =
      std::count(symbols.begin(), symbols.end(), symbols.back()) == 1;
  return Text(std::move(symbols), std::move(alphabet), terminated);
}

std::vector<std::int32_t> Text::codes() const {
  std::vector<std::int32_t> out;
  out.reserve(symbols_.size());
  for (auto s : symbols_) out.push_back(alphabet_.code(s));
  return out;
}

std::string Text::to_bytes() const {
  std::string out;
  out.reserve(symbols_.size());
  for (auto s : symbols_) {
    const auto c = alphabet_.code(s);
    if (c < 0 || c > 255) throw InvalidArgument("symbol code does not fit in a byte");
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::string Text::render(std::span<const Symbol> symbols) const {
  std::string out;
  for (auto s : symbols) {
    const auto c = alphabet_.code(s);
    if (c == kSentinelCode) {
      out.push_back('$');
    } else if (c >= 0x21 && c <= 0x7e && c != '<' && c != '$') {
      out.push_back(static_cast<char>(c));
    } else {
      out += '<' + std::to_string(c) + '>';
    }
  }
  return out;
}

std::string Text::render() const { return render(symbols_); }

Text Text::reversed_core() const {
  if (!terminated_) throw InvalidArgument("reversed_core requires a terminated text");
  std::vector<Symbol> rev(symbols_.rbegin() + 1, symbols_.rend());
  rev.push_back(symbols_.back());
  return Text(std::move(rev), alphabet_, true);
}

Text ingest(std::string_view raw, bool append_terminator) {
  if (raw.empty()) throw InvalidArgument("input is empty");
  std::vector<std::int32_t> codes;
  codes.reserve(raw.size());
  for (unsigned char b : raw) codes.push_back(b);
  return Text::from_codes(codes, append_terminator);
}

namespace {

std::int32_t letter_code(std::size_t rank, std::size_t sigma) {
  return sigma <= 26 ? static_cast<std::int32_t>('a' + rank) : static_cast<std::int32_t>(rank + 1);
}

std::vector<std::int32_t> fibonacci_codes(std::size_t n) {
  // F(1) = b, F(2) = a, F(i) = F(i-1) F(i-2); every F(i) is a prefix of F(i+1).
  std::string prev = "b";
  std::string cur = "a";
  while (cur.size() < n) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(n)};
}

constexpr std::array kFamilyNames{"lemma52", "fibonacci", "thue_morse", "unary",
                                  "all_distinct", "random", "periodic"};

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (name == kFamilyNames[i]) return static_cast<Family>(i);
  return std::nullopt;
}

std::string_view family_name(Family family) {
  return kFamilyNames.at(static_cast<std::size_t>(family));
}

Text gen_family(Family family, const FamilyParams& params) {
  if (params.size < 1) throw InvalidArgument("family size parameter must be >= 1");
  const std::size_t n = params.size;
  std::vector<std::int32_t> codes;
  switch (family) {
    case Family::lemma52: {
      const auto k = static_cast<std::int32_t>(n);
      auto bar = [k](std::int32_t i) { return k + i; };
      codes.push_back(bar(1));
      for (std::int32_t i = 1; i <= k; ++i) {
        for (std::int32_t d = 1; d <= i; ++d) codes.push_back(d);
        codes.push_back(bar(i + 1));
      }
      break;
    }
    case Family::fibonacci:
      codes = fibonacci_codes(n);
      break;
    case Family::thue_morse:
      for (std::size_t i = 0; i < n; ++i)
        codes.push_back(std::popcount(i) % 2 == 0 ? 'a' : 'b');
      break;
    case Family::unary:
      codes.assign(n, 'a');
      break;
    case Family::all_distinct:
      for (std::size_t i = 0; i < n; ++i) codes.push_back(letter_code(i, n));
      break;
    case Family::random: {
      if (params.sigma < 1) throw InvalidArgument("random family needs sigma >= 1");
      std::mt19937_64 rng(params.seed);
      std::uniform_int_distribution<std::size_t> dist(0, params.sigma - 1);
      for (std::size_t i = 0; i < n; ++i) codes.push_back(letter_code(dist(rng), params.sigma));
      break;
    }
    case Family::periodic: {
      if (params.sigma < 1 || params.period < 1)
        throw InvalidArgument("periodic family needs sigma >= 1 and period >= 1");
      std::mt19937_64 rng(params.seed);
      std::uniform_int_distribution<std::size_t> dist(0, params.sigma - 1);
      std::vector<std::int32_t> base;
      for (std::size_t i = 0; i < params.period; ++i) base.push_back(letter_code(dist(rng), params.sigma));
      for (std::size_t i = 0; i < n; ++i) codes.push_back(base[i % base.size()]);
      break;
    }
  }
  return Text::from_codes(codes, params.terminate);
}

}  // namespace simidx
