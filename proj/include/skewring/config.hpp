/*
   Copyright 2026 The skewring Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SKEWRING_CONFIG_HPP
#define SKEWRING_CONFIG_HPP

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace skewring {

/// Size limits for brute-force work.
struct Caps {
    /// Largest ring (coefficient ring, skew group ring, or solution set) that may be enumerated.
    std::uint64_t enumeration = std::uint64_t{1} << 16;
    /// Largest group order accepted by the group constructors.
    std::uint64_t group_order = 64;
    /// Largest skew group ring searched in witness-search mode (ideal membership is a bitset over R).
    std::uint64_t witness_search = std::uint64_t{1} << 26;

    friend bool operator==(const Caps&, const Caps&) = default;
};

namespace detail {

inline std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    std::string_view text(raw);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw InputError(std::string("environment variable ") + name + " is not a positive integer: " + raw);
    return value;
}

}  // namespace detail

/// Applies SKEWRING_ENUM_CAP, SKEWRING_GROUP_CAP and SKEWRING_WITNESS_CAP on top of `base`.
inline Caps caps_from_env(Caps base = {}) {
    base.enumeration = detail::env_u64("SKEWRING_ENUM_CAP", base.enumeration);
    base.group_order = detail::env_u64("SKEWRING_GROUP_CAP", base.group_order);
    base.witness_search = detail::env_u64("SKEWRING_WITNESS_CAP", base.witness_search);
    return base;
}

inline void require_within_cap(std::string_view what, std::uint64_t count, std::uint64_t cap) {
    if (count > cap) throw CapacityError(std::string(what), count, cap);
}

}  // namespace skewring

#endif  // SKEWRING_CONFIG_HPP
