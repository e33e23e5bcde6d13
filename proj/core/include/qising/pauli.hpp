// Copyright 2026 The qising Authors
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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qising/matrixcore.hpp"

namespace qising {

/// i^phase * X^x * Z^z on up to 64 qubits; bit q of a mask refers to qubit q.
struct PauliString {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::uint8_t phase = 0;  // power of i, mod 4

    friend bool operator==(const PauliString &, const PauliString &) = default;

    bool same_support_pattern(const PauliString &o) const {
        return x == o.x && z == o.z;
    }
    bool commutes_with(const PauliString &o) const {
        return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
    }
    bool is_hermitian() const {
        return ((phase + std::popcount(x & z)) & 1) == 0;
    }
    PauliString adjoint() const;
    cplx phase_value() const;

    /// Exact normalized trace as a Gaussian integer (re, im).
    std::pair<int, int> ntrace_exact() const;

    CMat to_dense(int n_qubits) const;

    /// <P, M>_HS, reading only the D entries where P is nonzero.
    cplx coefficient_in(const CMat &m) const;

    std::string str(int n_qubits) const;
};

PauliString operator*(const PauliString &a, const PauliString &b);

/// Square matrix with one nonzero entry per column, drawn from {+1, -1}.
/// Products are computed in integer arithmetic.
struct SignedPermutation {
    std::vector<std::uint32_t> row;  // row index of the nonzero in each column
    std::vector<std::int8_t> sign;

    static SignedPermutation from_dense(const CMat &m);
    static SignedPermutation identity(std::size_t dim);

    std::size_t dim() const {
        return row.size();
    }
    friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;
};

SignedPermutation operator*(const SignedPermutation &a, const SignedPermutation &b);
SignedPermutation operator-(const SignedPermutation &a);

}  // namespace qising
