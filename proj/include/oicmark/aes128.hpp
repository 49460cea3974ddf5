#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace oic {

using AesBlock = std::array<std::uint8_t, 16>;
using AesKey = std::array<std::uint8_t, 16>;

/// AES-128 encryption (FIPS-197): 44-word key schedule, 10 rounds.
/// Only the forward direction is needed here.
class Aes128 {
 public:
  explicit Aes128(const AesKey& key);

  AesBlock encrypt_block(const AesBlock& plaintext) const;

  // Codebook mode: every 16-byte group enciphered independently.
  // `data.size()` must be a multiple of 16; throws std::invalid_argument.
  void encrypt_ecb(std::span<std::uint8_t> data) const;

  const std::array<std::uint32_t, 44>& round_keys() const { return words_; }

 private:
  std::array<std::uint32_t, 44> words_{};
};

}  // namespace oic
