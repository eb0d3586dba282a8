// Copyright 2026 The simidx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace simidx {

/// Dense alphabet rank of a text symbol.
using Symbol = std::uint32_t;
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
/// Text positions and lengths.
using Index = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input (empty text, unknown family, malformed parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A structural invariant failed during construction; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A serialized index or an in-memory index with tampered links.
class CorruptIndex : public Error {
 public:
  using Error::Error;
};

/// Top and bottom tree nodes of a fast-link destination path.
struct FastLink {
  NodeId top = kNone;
  NodeId bottom = kNone;

  [[nodiscard]] bool valid() const { return top != kNone; }
  friend bool operator==(const FastLink&, const FastLink&) = default;
};

}  // namespace simidx
