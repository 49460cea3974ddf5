#include "oicmark/key.hpp"

#include <algorithm>
#include <stdexcept>

#include "oicmark/sha1.hpp"

namespace oic {

WatermarkKey derive_key(std::string_view device_id) {
  if (device_id.empty()) throw std::invalid_argument("device id must not be empty");
  WatermarkKey key;
  key.device_id = std::string(device_id);
  key.digest_hex = to_hex(sha1(device_id), /*uppercase=*/true);
  std::copy_n(key.digest_hex.begin(), 16, key.cipher_key.begin());
  return key;
}

CipheredPlane encrypt_plane(const PaddedPlane& plane, const WatermarkKey& key) {
  const Plane& p = plane.plane;
  if (p.empty() || p.rows() % kBlockSize != 0 || p.cols() % kBlockSize != 0) {
    throw std::invalid_argument("encrypt_plane: plane must have 8-multiple dimensions");
  }
  if (key.digest_hex.size() != 40 ||
      !std::equal(key.cipher_key.begin(), key.cipher_key.end(), key.digest_hex.begin())) {
    throw std::invalid_argument("encrypt_plane: inconsistent watermark key");
  }
  CipheredPlane out{p};
  Aes128(key.cipher_key).encrypt_ecb(out.bytes.samples());
  return out;
}

}  // namespace oic
