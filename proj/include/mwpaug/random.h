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

#ifndef MWPAUG_RANDOM_H_
#define MWPAUG_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace mwpaug {

// Source of randomness for every augmenter. Bounds are inclusive. A
// degenerate range (lo == hi) returns lo without consuming a draw, so scripted
// sources in tests only need values for genuine choices.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  int64_t UniformInt(int64_t lo, int64_t hi);
  double UniformReal(double lo, double hi);

 protected:
  virtual int64_t NextInt(int64_t lo, int64_t hi) = 0;
  virtual double NextReal(double lo, double hi) = 0;
};

// mt19937_64 with hand-rolled range reduction, so draws are identical across
// standard library implementations.
class SeededRandom : public RandomSource {
 public:
  explicit SeededRandom(uint64_t seed) : engine_(seed) {}

 protected:
  int64_t NextInt(int64_t lo, int64_t hi) override;
  double NextReal(double lo, double hi) override;

 private:
  std::mt19937_64 engine_;
};

// Per-record stream seed: a stable hash of (global seed, record id, method
// salt, round). Independent of processing order and worker count.
uint64_t DeriveSeed(uint64_t global_seed, std::string_view record_id,
                    std::string_view salt, int round = 0);

}  // namespace mwpaug

#endif  // MWPAUG_RANDOM_H_
