// Copyright 2026 The mptzx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace mptzx {

/// Seeded 64-bit generator. Derived quantities (uniform doubles, coin flips)
/// are computed from raw engine output so streams are reproducible across
/// standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    bool coin() {
        return (engine_() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
uint64_t mix64(uint64_t x);

/// Order-sensitive combination of seed components into one 64-bit seed.
uint64_t derive_seed(std::initializer_list<uint64_t> parts);

/// FNV-1a over the bytes of `text`.
uint64_t fnv1a64(std::string_view text);

}  // namespace mptzx
