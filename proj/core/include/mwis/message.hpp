#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mwis::sim {

/// Bit-packed message payload. size_bits() is what the CONGEST budget
/// is charged with.
class Message {
 public:
  Message() = default;

  std::size_t size_bits() const { return bits_; }
  std::span<const std::uint8_t> payload() const { return bytes_; }

  friend bool operator==(const Message&, const Message&) = default;

 private:
  friend class MessageWriter;
  friend class MessageReader;
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

/// Appends fields to a message, least-significant bit first.
///
/// Unsigned fields are self-delimiting: a fixed-width length prefix
/// followed by exactly the significant bits of the value, so a message
/// is charged for the magnitude it actually carries.
class MessageWriter {
 public:
  MessageWriter& flag(bool value);
  /// Raw fixed-width field (width <= 64).
  MessageWriter& bits(std::uint64_t value, unsigned width);
  /// 7-bit length prefix + significant bits.
  MessageWriter& uint(std::uint64_t value);
  /// Zig-zag encoded signed integer.
  MessageWriter& sint(std::int64_t value);
  /// 8-bit length prefix + significant bits.
  MessageWriter& u128(unsigned __int128 value);

  Message finish() { return std::move(message_); }

 private:
  Message message_;
};

/// Reads fields back in the order they were written. Reading past the end
/// throws std::out_of_range.
class MessageReader {
 public:
  explicit MessageReader(const Message& m) : message_(&m) {}

  bool flag();
  std::uint64_t bits(unsigned width);
  std::uint64_t uint();
  std::int64_t sint();
  unsigned __int128 u128();

  bool exhausted() const { return cursor_ == message_->bits_; }

 private:
  const Message* message_;
  std::size_t cursor_ = 0;
};

}  // namespace mwis::sim
