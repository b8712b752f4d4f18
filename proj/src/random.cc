//
// Copyright 2026 The mwpaug Authors
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
//

#include "mwpaug/random.h"

#include <limits>
#include <stdexcept>

namespace mwpaug {
namespace {

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

uint64_t FnvMix(uint64_t hash, std::string_view bytes) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= kFnvPrime;
  }
  return hash;
}

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int64_t RandomSource::UniformInt(int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("UniformInt: empty range");
  if (lo == hi) return lo;
  return NextInt(lo, hi);
}

double RandomSource::UniformReal(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("UniformReal: empty range");
  if (lo == hi) return lo;
  return NextReal(lo, hi);
}

int64_t SeededRandom::NextInt(int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (span == std::numeric_limits<uint64_t>::max()) {
    return static_cast<int64_t>(engine_());
  }
  const uint64_t range = span + 1;
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % range;
  uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + draw % range);
}

double SeededRandom::NextReal(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

uint64_t DeriveSeed(uint64_t global_seed, std::string_view record_id,
                    std::string_view salt, int round) {
  uint64_t hash = kFnvOffset;
  char seed_bytes[8];
  for (int i = 0; i < 8; ++i) {
    seed_bytes[i] = static_cast<char>((global_seed >> (8 * i)) & 0xff);
  }
  hash = FnvMix(hash, std::string_view(seed_bytes, 8));
  hash = FnvMix(hash, record_id);
  hash = FnvMix(hash, std::string_view("\0", 1));
  hash = FnvMix(hash, salt);
  hash = FnvMix(hash, std::string_view("\0", 1));
  const uint32_t r = static_cast<uint32_t>(round);
  char round_bytes[4];
  for (int i = 0; i < 4; ++i) {
    round_bytes[i] = static_cast<char>((r >> (8 * i)) & 0xff);
  }
  hash = FnvMix(hash, std::string_view(round_bytes, 4));
  return SplitMix64(hash);
}

}  // namespace mwpaug
