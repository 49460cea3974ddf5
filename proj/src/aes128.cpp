#include "oicmark/aes128.hpp"

#include <algorithm>
#include <stdexcept>

namespace oic {
namespace {

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x & 0x80) ? 0x1B : 0x00));
}

constexpr std::uint8_t gf_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t p = 0;
  while (b) {
    if (b & 1) p ^= a;
    a = xtime(a);
    b >>= 1;
  }
  return p;
}

// S-box from the multiplicative inverse in GF(2^8) followed by the affine map.
constexpr std::array<std::uint8_t, 256> make_sbox() {
  std::array<std::uint8_t, 256> s{};
  for (int x = 0; x < 256; ++x) {
    std::uint8_t inv = 0;
    if (x != 0) {
      for (int y = 1; y < 256; ++y) {
        if (gf_mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1) {
          inv = static_cast<std::uint8_t>(y);
          break;
        }
      }
    }
    std::uint8_t b = inv;
    std::uint8_t r = 0x63;
    for (int i = 0; i < 5; ++i) {
      r ^= b;
      b = static_cast<std::uint8_t>((b << 1) | (b >> 7));
    }
    s[x] = r;
  }
  return s;
}

constexpr auto kSbox = make_sbox();
static_assert(kSbox[0x00] == 0x63 && kSbox[0x53] == 0xED && kSbox[0xFF] == 0x16);

constexpr std::uint32_t sub_word(std::uint32_t w) {
  return (std::uint32_t{kSbox[w >> 24]} << 24) | (std::uint32_t{kSbox[(w >> 16) & 0xFF]} << 16) |
         (std::uint32_t{kSbox[(w >> 8) & 0xFF]} << 8) | std::uint32_t{kSbox[w & 0xFF]};
}

constexpr std::uint32_t rot_word(std::uint32_t w) { return (w << 8) | (w >> 24); }

void add_round_key(AesBlock& s, const std::uint32_t* w) {
  for (int c = 0; c < 4; ++c) {
    s[4 * c] ^= static_cast<std::uint8_t>(w[c] >> 24);
    s[4 * c + 1] ^= static_cast<std::uint8_t>(w[c] >> 16);
    s[4 * c + 2] ^= static_cast<std::uint8_t>(w[c] >> 8);
    s[4 * c + 3] ^= static_cast<std::uint8_t>(w[c]);
  }
}

void sub_bytes(AesBlock& s) {
  for (auto& b : s) b = kSbox[b];
}

// State is column-major: s[4*c + r].
void shift_rows(AesBlock& s) {
  AesBlock t = s;
  for (int r = 1; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s[4 * c + r] = t[4 * ((c + r) % 4) + r];
  }
}

void mix_columns(AesBlock& s) {
  for (int c = 0; c < 4; ++c) {
    std::uint8_t* col = &s[4 * c];
    const std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
    col[0] = static_cast<std::uint8_t>(xtime(a0) ^ (xtime(a1) ^ a1) ^ a2 ^ a3);
    col[1] = static_cast<std::uint8_t>(a0 ^ xtime(a1) ^ (xtime(a2) ^ a2) ^ a3);
    col[2] = static_cast<std::uint8_t>(a0 ^ a1 ^ xtime(a2) ^ (xtime(a3) ^ a3));
    col[3] = static_cast<std::uint8_t>((xtime(a0) ^ a0) ^ a1 ^ a2 ^ xtime(a3));
  }
}

}  // namespace

Aes128::Aes128(const AesKey& key) {
  for (int i = 0; i < 4; ++i) {
    words_[i] = (std::uint32_t{key[4 * i]} << 24) | (std::uint32_t{key[4 * i + 1]} << 16) |
                (std::uint32_t{key[4 * i + 2]} << 8) | std::uint32_t{key[4 * i + 3]};
  }
  std::uint8_t rcon = 0x01;
  for (int i = 4; i < 44; ++i) {
    std::uint32_t t = words_[i - 1];
    if (i % 4 == 0) {
      t = sub_word(rot_word(t)) ^ (std::uint32_t{rcon} << 24);
      rcon = xtime(rcon);
    }
    words_[i] = words_[i - 4] ^ t;
  }
}

AesBlock Aes128::encrypt_block(const AesBlock& plaintext) const {
  AesBlock s = plaintext;
  add_round_key(s, &words_[0]);
  for (int round = 1; round < 10; ++round) {
    sub_bytes(s);
    shift_rows(s);
    mix_columns(s);
    add_round_key(s, &words_[4 * round]);
  }
  sub_bytes(s);
  shift_rows(s);
  add_round_key(s, &words_[40]);
  return s;
}

void Aes128::encrypt_ecb(std::span<std::uint8_t> data) const {
  if (data.size() % 16 != 0) {
    throw std::invalid_argument("AES-128 codebook mode needs a multiple of 16 bytes");
  }
  AesBlock block;
  for (std::size_t off = 0; off < data.size(); off += 16) {
    std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(off), 16, block.begin());
    const AesBlock out = encrypt_block(block);
    std::copy(out.begin(), out.end(), data.begin() + static_cast<std::ptrdiff_t>(off));
  }
}

}  // namespace oic
