#include "ifl/dynamics/rng.hpp"

namespace ifl {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32), 0x1f1u};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), id_(stream_id), engine_(seeded(seed, stream_id)) {}

}  // namespace ifl
