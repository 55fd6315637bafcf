// Copyright 2026 The Authors.
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

#ifndef MILNOR_ALGEBRA_KERNELS_H_
#define MILNOR_ALGEBRA_KERNELS_H_

#include <cstddef>
#include <cstdint>

// Inner loops of prime-field elimination. Every kernel has a scalar
// reference version; vector versions are picked once at runtime and must
// agree with the reference bit for bit.
namespace milnor::kernels {

// dst[i] = (dst[i] + c * src[i]) mod m, for m < 2^31 and inputs reduced.
using AxpyModFn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                           std::uint32_t c, std::uint32_t m, std::size_t n);

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::uint32_t c, std::uint32_t m, std::size_t n);
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t c, std::uint32_t m, std::size_t n);

bool avx2_supported();

// The dispatched kernel. MILNOR_KERNEL=scalar forces the reference path.
AxpyModFn axpy_mod();
const char* axpy_mod_name();

}  // namespace milnor::kernels

#endif  // MILNOR_ALGEBRA_KERNELS_H_
