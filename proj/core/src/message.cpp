#include "mwis/message.hpp"

#include <bit>
#include <stdexcept>

namespace mwis::sim {

MessageWriter& MessageWriter::flag(bool value) { return bits(value ? 1 : 0, 1); }

MessageWriter& MessageWriter::bits(std::uint64_t value, unsigned width) {
  if (width > 64) throw std::invalid_argument("field width above 64 bits");
  auto& bytes = message_.bytes_;
  for (unsigned i = 0; i < width; ++i) {
    const std::size_t pos = message_.bits_ + i;
    if (pos / 8 >= bytes.size()) bytes.push_back(0);
    if ((value >> i) & 1U) bytes[pos / 8] |= static_cast<std::uint8_t>(1U << (pos % 8));
  }
  message_.bits_ += width;
  return *this;
}

MessageWriter& MessageWriter::uint(std::uint64_t value) {
  const auto width = static_cast<unsigned>(std::bit_width(value));
  bits(width, 7);
  return bits(value, width);
}

MessageWriter& MessageWriter::sint(std::int64_t value) {
  const auto u = static_cast<std::uint64_t>(value);
  return uint((u << 1) ^ static_cast<std::uint64_t>(value >> 63));
}

MessageWriter& MessageWriter::u128(unsigned __int128 value) {
  const auto hi = static_cast<std::uint64_t>(value >> 64);
  const auto lo = static_cast<std::uint64_t>(value);
  const unsigned width = hi != 0 ? 64 + static_cast<unsigned>(std::bit_width(hi))
                                 : static_cast<unsigned>(std::bit_width(lo));
  bits(width, 8);
  bits(lo, width < 64 ? width : 64);
  if (width > 64) bits(hi, width - 64);
  return *this;
}

bool MessageReader::flag() { return bits(1) != 0; }

std::uint64_t MessageReader::bits(unsigned width) {
  if (width > 64) throw std::invalid_argument("field width above 64 bits");
  if (cursor_ + width > message_->bits_) throw std::out_of_range("read past end of message");
  std::uint64_t value = 0;
  for (unsigned i = 0; i < width; ++i) {
    const std::size_t pos = cursor_ + i;
    if ((message_->bytes_[pos / 8] >> (pos % 8)) & 1U) value |= std::uint64_t{1} << i;
  }
  cursor_ += width;
  return value;
}

std::uint64_t MessageReader::uint() {
  const auto width = static_cast<unsigned>(bits(7));
  return bits(width);
}

std::int64_t MessageReader::sint() {
  const std::uint64_t u = uint();
  return static_cast<std::int64_t>((u >> 1) ^ (~(u & 1) + 1));
}

unsigned __int128 MessageReader::u128() {
  const auto width = static_cast<unsigned>(bits(8));
  unsigned __int128 value = bits(width < 64 ? width : 64);
  if (width > 64) value |= static_cast<unsigned __int128>(bits(width - 64)) << 64;
  return value;
}

}  // namespace mwis::sim
