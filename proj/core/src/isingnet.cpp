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

#include "qising/isingnet.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qising/error.hpp"

namespace qising {

namespace {

constexpr int kDenseCacheQubits = 8;

// r -= c * P, touching only the D nonzeros of P.
void subtract_pauli(CMat &r, const PauliString &p, cplx c) {
    auto dim = static_cast<std::uint64_t>(r.rows());
    cplx ph = c * p.phase_value();
    for (std::uint64_t s = 0; s < dim; s++) {
        double sgn = (std::popcount(p.z & s) & 1) ? -1.0 : 1.0;
        r(static_cast<Eigen::Index>(s ^ p.x), static_cast<Eigen::Index>(s)) -= sgn * ph;
    }
}

}  // namespace

void ChainConfig::validate() const {
    if (n_qubits() < 2) {
        fail(Errc::InvalidArgument, "window needs at least 2 qubit sites");
    }
    if (n_qubits() > max_qubits || max_qubits > 16) {
        fail(Errc::InvalidArgument, "window of " + std::to_string(n_qubits()) + " qubits exceeds the cap of " +
                                        std::to_string(max_qubits));
    }
    if (padding < 0) {
        fail(Errc::InvalidArgument, "padding must be >= 0");
    }
    if (x_min + padding > x_max - padding) {
        fail(Errc::OutOfWindow, "padding " + std::to_string(padding) + " leaves no interior sites in [" +
                                    std::to_string(x_min) + ", " + std::to_string(x_max) + "]");
    }
}

PauliString site_pauli(const ChainConfig &cfg, int site, int which) {
    if (site < cfg.x_min || site > cfg.x_max) {
        fail(Errc::OutOfWindow, "site " + std::to_string(site) + " outside the window");
    }
    std::uint64_t bit = std::uint64_t{1} << (site - cfg.x_min);
    PauliString p;
    if (which == 1) {
        p.x = bit;
    } else {
        p.z = bit;
    }
    return p;
}

IsingNet::IsingNet(ChainConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    if (n_qubits() <= kDenseCacheQubits) {
        for (HalfIndex i : generator_indices()) {
            dense_.emplace(i, symbol(i).to_dense(n_qubits()));
        }
    }
}

std::vector<HalfIndex> IsingNet::generator_indices() const {
    std::vector<HalfIndex> out;
    for (int tw = 2 * cfg_.x_min; tw <= 2 * cfg_.x_max; tw++) {
        out.push_back(HalfIndex::from_twice(tw));
    }
    return out;
}

PauliString IsingNet::symbol(HalfIndex i) const {
    if (!has_generator(i)) {
        fail(Errc::OutOfWindow, "generator U_" + i.str() + " needs sites outside [" + std::to_string(cfg_.x_min) +
                                    ", " + std::to_string(cfg_.x_max) + "]");
    }
    if (i.is_integer()) {
        return site_pauli(cfg_, i.floor(), 1);
    }
    int x = i.floor();
    return site_pauli(cfg_, x, 3) * site_pauli(cfg_, x + 1, 3);
}

CMat IsingNet::matrix(HalfIndex i) const {
    auto it = dense_.find(i);
    if (it != dense_.end()) {
        return it->second;
    }
    return symbol(i).to_dense(n_qubits());
}

Generator IsingNet::generator(HalfIndex i) const {
    return {i, symbol(i), matrix(i)};
}

SignedPermutation IsingNet::signed_permutation(HalfIndex i) const {
    PauliString p = symbol(i);
    auto dim = static_cast<std::size_t>(this->dim());
    SignedPermutation out;
    out.row.resize(dim);
    out.sign.resize(dim);
    for (std::size_t s = 0; s < dim; s++) {
        out.row[s] = static_cast<std::uint32_t>(s ^ p.x);
        out.sign[s] = (std::popcount(p.z & s) & 1) ? -1 : 1;
    }
    return out;
}

void IsingNet::require(const Interval &iv) const {
    if (iv.hi < iv.lo || !has_generator(iv.lo) || !has_generator(iv.hi)) {
        fail(Errc::OutOfWindow, "interval (" + iv.lo.str() + ", " + iv.hi.str() + ") not inside the window");
    }
}

PauliString IsingNet::monom_symbol(const Interval &iv, std::uint64_t subset) const {
    require(iv);
    PauliString out;
    for (int k = 0; k < iv.size(); k++) {
        if ((subset >> k) & 1) {
            out = out * symbol(iv.at(k));
        }
    }
    return out;
}

CMat IsingNet::monom(const Interval &iv, std::uint64_t subset) const {
    return monom_symbol(iv, subset).to_dense(n_qubits());
}

SpanBasis IsingNet::monom_basis(const Interval &iv) const {
    require(iv);
    std::vector<CMat> out;
    std::uint64_t count = std::uint64_t{1} << iv.size();
    out.reserve(count);
    for (std::uint64_t s = 0; s < count; s++) {
        out.push_back(monom(iv, s));
    }
    // Distinct Pauli strings are trace-orthogonal and unitary.
    return SpanBasis::from_orthonormal(dim(), std::move(out));
}

MonomExpansion IsingNet::expand(const CMat &m, const Interval &iv, double drop) const {
    require(iv);
    if (m.rows() != dim() || m.cols() != dim()) {
        fail(Errc::ShapeMismatch, "operator does not act on the window");
    }
    MonomExpansion out{iv, {}, 0};
    CMat rest = m;
    std::uint64_t count = std::uint64_t{1} << iv.size();
    for (std::uint64_t s = 0; s < count; s++) {
        PauliString p = monom_symbol(iv, s);
        cplx c = p.coefficient_in(m);
        if (std::abs(c) > drop) {
            out.terms.emplace_back(s, c);
            subtract_pauli(rest, p, c);
        }
    }
    out.residual = hs_norm(rest);
    return out;
}

LocalAlgebra IsingNet::interval_algebra(const Interval &iv) const {
    SpanBasis b = monom_basis(iv);
    int n = static_cast<int>(b.size());
    return {Region::cauchy_interval(iv.lo, iv.hi), std::move(b), n};
}

LocalAlgebra IsingNet::one_point_algebra(HalfIndex i) const {
    return interval_algebra({i, i});
}

std::pair<CMat, CMat> IsingNet::minimal_projections(HalfIndex i) const {
    CMat u = matrix(i);
    CMat one = identity(dim());
    return {0.5 * (one + u), 0.5 * (one - u)};
}

std::map<HalfIndex, Generator> build_generators(const ChainConfig &cfg) {
    IsingNet net(cfg);
    std::map<HalfIndex, Generator> out;
    for (HalfIndex i : net.generator_indices()) {
        out.emplace(i, net.generator(i));
    }
    return out;
}

RelationReport relation_check(const IsingNet &net) {
    RelationReport out;
    std::vector<HalfIndex> idx = net.generator_indices();
    std::vector<SignedPermutation> perms;
    for (HalfIndex i : idx) {
        perms.push_back(net.signed_permutation(i));
    }
    SignedPermutation one = SignedPermutation::identity(static_cast<std::size_t>(net.dim()));
    for (std::size_t a = 0; a < idx.size(); a++) {
        // signed permutations are orthogonal, so P^2 = 1 already gives P = P*
        if (!(perms[a] * perms[a] == one) || !net.symbol(idx[a]).is_hermitian()) {
            out.violations++;
        }
        for (std::size_t b = 0; b < idx.size(); b++) {
            out.pairs++;
            bool adjacent = std::abs(idx[a].twice() - idx[b].twice()) == 1;
            SignedPermutation ab = perms[a] * perms[b];
            SignedPermutation ba = perms[b] * perms[a];
            if (!(ab == (adjacent ? -ba : ba))) {
                out.violations++;
            }
        }
    }
    return out;
}

HaagReport haag_duality_check(const IsingNet &net, const Interval &iv) {
    Interval w = net.window();
    HaagReport out;
    out.expected = net.monom_basis(iv);
    if (iv.lo == w.lo && iv.hi == w.hi) {
        out.computed_commutant_dim = static_cast<int>(out.expected.size());
        out.match = true;
        out.informative = false;
        return out;
    }
    if (iv.lo.twice() - 1 < w.lo.twice() || iv.hi.twice() + 1 > w.hi.twice()) {
        fail(Errc::MarginTooSmall, "interval (" + iv.lo.str() + ", " + iv.hi.str() +
                                       ") needs one generator of margin inside the window");
    }
    std::vector<CMat> outside;
    for (HalfIndex k : net.generator_indices()) {
        if (k.twice() < iv.lo.twice() - 1 || k.twice() > iv.hi.twice() + 1) {
            outside.push_back(net.matrix(k));
        }
    }
    const ChainConfig &cfg = net.config();
    outside.push_back(site_pauli(cfg, cfg.x_min, 3).to_dense(net.n_qubits()));
    outside.push_back(site_pauli(cfg, cfg.x_max, 3).to_dense(net.n_qubits()));
    SpanBasis computed = relative_commutant(outside, net.monom_basis(w), 1e-9);
    out.computed_commutant_dim = static_cast<int>(computed.size());
    out.distance = span_distance(computed, out.expected);
    out.match = computed.size() == out.expected.size() && out.distance < 1e-9;
    return out;
}

}  // namespace qising
