#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tossup {

// 64-bit FNV-1a. Used for content hashes (reports, index caches), not security.
class Fnv1a {
 public:
  Fnv1a& update(std::string_view bytes) noexcept {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  std::uint64_t digest() const noexcept { return state_; }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t v = state_;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = kDigits[v & 0xF];
      v >>= 4;
    }
    return out;
  }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::string fnv1a_hex(std::string_view bytes) { return Fnv1a().update(bytes).hex(); }

}  // namespace tossup
