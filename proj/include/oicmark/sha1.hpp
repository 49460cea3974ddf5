#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace oic {

using Sha1Digest = std::array<std::uint8_t, 20>;

/// Streaming SHA-1 (FIPS 180-4).
class Sha1 {
 public:
  Sha1();

  void update(std::span<const std::uint8_t> data);
  void update(std::string_view text);
  // Finalizes and resets the hasher.
  Sha1Digest finish();

 private:
  void compress(const std::uint8_t* chunk);

  std::array<std::uint32_t, 5> state_;
  std::array<std::uint8_t, 64> buffer_{};
  std::size_t buffered_ = 0;
  std::uint64_t length_ = 0;
};

Sha1Digest sha1(std::string_view text);
Sha1Digest sha1(std::span<const std::uint8_t> data);

std::string to_hex(std::span<const std::uint8_t> bytes, bool uppercase = false);

}  // namespace oic
