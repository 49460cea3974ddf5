#pragma once

#include <string>
#include <string_view>

#include "oicmark/aes128.hpp"
#include "oicmark/image.hpp"

namespace oic {

/// Key material derived from a capture-device identifier.
///
/// `digest_hex` is SHA-1 of the identifier's bytes as 40 uppercase hex digits;
/// `cipher_key` is the first 16 of those digits taken as ASCII characters,
/// i.e. the key for "abc" is the 16 bytes of the text "A9993E364706816A".
struct WatermarkKey {
  std::string device_id;
  std::string digest_hex;
  AesKey cipher_key{};
};

// Throws std::invalid_argument for an empty identifier.
WatermarkKey derive_key(std::string_view device_id);

/// The AES-128 enciphered blue plane, same shape as its padded input.
struct CipheredPlane {
  Plane bytes;
};

// Row-major bytes enciphered 16 at a time, no chaining. Requires 8-multiple
// dimensions and a key whose fields agree with each other.
CipheredPlane encrypt_plane(const PaddedPlane& plane, const WatermarkKey& key);

}  // namespace oic
