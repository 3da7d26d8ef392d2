#pragma once

#include <cstdint>
#include <string>

namespace xrv {

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xCBF29CE484222325ULL) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s, uint64_t h = 0xCBF29CE484222325ULL) {
    return fnv1a64(s.data(), s.size(), h);
}

inline std::string to_hex(uint64_t value, int digits = 16) {
    static const char* kDigits = "0123456789abcdef";
    std::string out(digits, '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[i] = kDigits[value & 0xF];
        value >>= 4;
    }
    return out;
}

inline std::string hash_hex(const std::string& s) { return to_hex(fnv1a64(s)); }

inline std::string short_hash(const std::string& s) { return to_hex(fnv1a64(s), 8); }

} // namespace xrv
