// Copyright 2026 The iterfix Authors
//
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

#ifndef ITERFIX_COMMON_IO_H_
#define ITERFIX_COMMON_IO_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace iterfix {

// Throws InputError when the file cannot be read.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// .mini files end with one newline on disk; in memory they carry none.
std::string ReadSourceFile(const std::string& path);
void WriteSourceFile(const std::string& path, std::string_view text);

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string Digest(std::string_view data);

// Fisher-Yates driven by raw mt19937_64 output, so the permutation is the
// same on every standard library.
template <typename T>
void DeterministicShuffle(std::vector<T>& items, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace iterfix

#endif  // ITERFIX_COMMON_IO_H_
