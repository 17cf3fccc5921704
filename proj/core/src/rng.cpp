#include "mwis/rng.hpp"

#include <bit>

namespace mwis {

unsigned __int128 uniform_rank(Rng& rng, unsigned __int128 range) {
  using u128 = unsigned __int128;
  // Rejection sampling over the smallest power-of-two window covering range.
  const u128 top = range - 1;
  const auto hi = static_cast<std::uint64_t>(top >> 64);
  const auto lo = static_cast<std::uint64_t>(top);
  const int width = hi != 0 ? 64 + std::bit_width(hi) : std::bit_width(lo);
  const u128 mask = width >= 128 ? ~u128{0} : ((u128{1} << width) - 1);
  for (;;) {
    u128 x = (static_cast<u128>(rng()) << 64) | rng();
    x &= mask;
    if (x <= top) return x + 1;
  }
}

}  // namespace mwis
