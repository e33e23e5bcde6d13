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

#include "qising/pauli.hpp"

#include "qising/error.hpp"

namespace qising {

namespace {

constexpr cplx kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString operator*(const PauliString &a, const PauliString &b) {
    int p = a.phase + b.phase + 2 * std::popcount(a.z & b.x);
    return {a.x ^ b.x, a.z ^ b.z, static_cast<std::uint8_t>(p & 3)};
}

PauliString PauliString::adjoint() const {
    int p = -phase + 2 * std::popcount(x & z);
    return {x, z, static_cast<std::uint8_t>(((p % 4) + 4) & 3)};
}

cplx PauliString::phase_value() const {
    return kPhases[phase & 3];
}

std::pair<int, int> PauliString::ntrace_exact() const {
    if (x != 0 || z != 0) {
        return {0, 0};
    }
    static constexpr int re[4] = {1, 0, -1, 0};
    static constexpr int im[4] = {0, 1, 0, -1};
    return {re[phase & 3], im[phase & 3]};
}

CMat PauliString::to_dense(int n_qubits) const {
    if (n_qubits < 64 && ((x | z) >> n_qubits) != 0) {
        fail(Errc::OutOfWindow, "Pauli string acts beyond " + std::to_string(n_qubits) + " qubits");
    }
    std::uint64_t dim = std::uint64_t{1} << n_qubits;
    CMat out = CMat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    cplx ph = phase_value();
    for (std::uint64_t s = 0; s < dim; s++) {
        double sgn = (std::popcount(z & s) & 1) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(s ^ x), static_cast<Eigen::Index>(s)) = sgn * ph;
    }
    return out;
}

cplx PauliString::coefficient_in(const CMat &m) const {
    auto dim = static_cast<std::uint64_t>(m.rows());
    cplx acc = 0;
    for (std::uint64_t s = 0; s < dim; s++) {
        double sgn = (std::popcount(z & s) & 1) ? -1.0 : 1.0;
        acc += sgn * m(static_cast<Eigen::Index>(s ^ x), static_cast<Eigen::Index>(s));
    }
    return std::conj(phase_value()) * acc / static_cast<double>(dim);
}

std::string PauliString::str(int n_qubits) const {
    static const char *signs[4] = {"+", "+i", "-", "-i"};
    // X^x Z^z = (-i)^{popcount(x&z)} prod Y on overlapping sites
    int p = (phase + 3 * std::popcount(x & z)) & 3;
    std::string out = signs[p];
    for (int q = 0; q < n_qubits; q++) {
        bool bx = (x >> q) & 1;
        bool bz = (z >> q) & 1;
        out += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : '_');
    }
    return out;
}

SignedPermutation SignedPermutation::from_dense(const CMat &m) {
    if (m.rows() != m.cols()) {
        fail(Errc::ShapeMismatch, "signed permutation must be square");
    }
    SignedPermutation out;
    auto n = static_cast<std::size_t>(m.rows());
    out.row.resize(n);
    out.sign.resize(n);
    for (std::size_t c = 0; c < n; c++) {
        int found = 0;
        for (std::size_t r = 0; r < n; r++) {
            cplx v = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            if (v == cplx(0)) {
                continue;
            }
            if (v != cplx(1) && v != cplx(-1)) {
                fail(Errc::InvalidArgument, "entry outside {0, +1, -1}");
            }
            found++;
            out.row[c] = static_cast<std::uint32_t>(r);
            out.sign[c] = v == cplx(1) ? 1 : -1;
        }
        if (found != 1) {
            fail(Errc::InvalidArgument, "column without exactly one nonzero entry");
        }
    }
    return out;
}

SignedPermutation SignedPermutation::identity(std::size_t dim) {
    SignedPermutation out;
    out.row.resize(dim);
    out.sign.assign(dim, 1);
    for (std::size_t k = 0; k < dim; k++) {
        out.row[k] = static_cast<std::uint32_t>(k);
    }
    return out;
}

SignedPermutation operator*(const SignedPermutation &a, const SignedPermutation &b) {
    if (a.dim() != b.dim()) {
        fail(Errc::ShapeMismatch, "signed permutation dimensions differ");
    }
    SignedPermutation out;
    out.row.resize(b.dim());
    out.sign.resize(b.dim());
    for (std::size_t c = 0; c < b.dim(); c++) {
        std::uint32_t mid = b.row[c];
        out.row[c] = a.row[mid];
        out.sign[c] = static_cast<std::int8_t>(a.sign[mid] * b.sign[c]);
    }
    return out;
}

SignedPermutation operator-(const SignedPermutation &a) {
    SignedPermutation out = a;
    for (auto &s : out.sign) {
        s = static_cast<std::int8_t>(-s);
    }
    return out;
}

}  // namespace qising
