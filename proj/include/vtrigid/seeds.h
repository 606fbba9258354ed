// Copyright 2026 The vtrigid Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VTRIGID_SEEDS_H_
#define VTRIGID_SEEDS_H_

#include <cstdint>

namespace vtrigid {

// SplitMix64 finalizer.
inline uint64_t MixSeed(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Sub-seed for (stream, index) under a master seed. Streams separate the
// consumers of randomness (rank trials, certificates, pi sampling) so that
// adding draws to one never shifts another.
inline uint64_t DeriveSeed(uint64_t master, uint64_t stream, uint64_t index) {
  return MixSeed(MixSeed(master ^ MixSeed(stream)) + index);
}

enum SeedStream : uint64_t {
  kRankTrialStream = 1,
  kCertificateStream = 2,
  kPiSampleStream = 3,
  kProbeStream = 4,
};

}  // namespace vtrigid

#endif  // VTRIGID_SEEDS_H_
