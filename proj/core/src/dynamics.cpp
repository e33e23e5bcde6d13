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

#include "qising/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qising/error.hpp"

namespace qising {

namespace {

std::pair<int, int> key(HalfIndex i, int power) {
    return {i.twice(), power};
}

// Interval of generators whose beta-images determine beta^{-1}(U_i).
Interval inverse_support(HalfIndex i) {
    if (i.is_integer()) {
        return {i.shifted(-2), i.shifted(2)};
    }
    return {i.shifted(-1), i.shifted(1)};
}

void add_pauli(CMat &r, const PauliString &p, cplx c) {
    auto dim = static_cast<std::uint64_t>(r.rows());
    cplx ph = c * p.phase_value();
    for (std::uint64_t s = 0; s < dim; s++) {
        double sgn = (std::popcount(p.z & s) & 1) ? -1.0 : 1.0;
        r(static_cast<Eigen::Index>(s ^ p.x), static_cast<Eigen::Index>(s)) += sgn * ph;
    }
}

}  // namespace

void DynamicsParams::validate() const {
    const double h = std::numbers::pi / 2;
    for (double th : {theta1, theta2}) {
        if (!std::isfinite(th) || th <= -h || th > h + 1e-12) {
            fail(Errc::InvalidArgument, "theta must lie in (-pi/2, pi/2], got " + std::to_string(th));
        }
    }
    for (int e : {eta1, eta2}) {
        if (e != 1 && e != -1) {
            fail(Errc::InvalidArgument, "eta must be +1 or -1, got " + std::to_string(e));
        }
    }
}

std::string DynamicsParams::str() const {
    std::ostringstream os;
    os.precision(17);
    os << "theta1=" << theta1 << " theta2=" << theta2 << " eta1=" << eta1 << " eta2=" << eta2;
    return os.str();
}

DynamicsParams DynamicsParams::trivial() {
    return {std::numbers::pi / 2, std::numbers::pi / 2, 1, 1};
}

Automorphism::Automorphism(std::shared_ptr<const IsingNet> net, DynamicsParams params, PowerRange range)
    : net_(std::move(net)), params_(params), range_(range) {
    params_.validate();
    if (range_.min_power > 0 || range_.max_power < 0) {
        fail(Errc::InvalidArgument, "power range must contain 0");
    }
    for (HalfIndex i : net_->generator_indices()) {
        cache_.emplace(key(i, 0), net_->matrix(i));
    }
    for (int p = 1; p <= std::max(range_.max_power, range_.min_power < 0 ? 1 : 0); p++) {
        build_forward(p);
    }
    for (int p = -1; p >= range_.min_power; p--) {
        build_inverse(p);
    }
}

bool Automorphism::has_image(HalfIndex i, int power) const {
    return cache_.count(key(i, power)) > 0;
}

const CMat &Automorphism::image(HalfIndex i, int power) const {
    auto it = cache_.find(key(i, power));
    if (it == cache_.end()) {
        fail(Errc::OutOfWindow, "beta^" + std::to_string(power) + "(U_" + i.str() +
                                    ") needs sites beyond the window or power range");
    }
    return it->second;
}

const CMat &Automorphism::beta_on_integer(int x) const {
    return image(HalfIndex::integer(x), 1);
}

const CMat &Automorphism::beta_on_half(int x) const {
    return image(HalfIndex::integer(x).shifted(1), 1);
}

void Automorphism::build_forward(int p) {
    const cplx i1(0, 1);
    double s1 = std::sin(params_.theta1), c1 = std::cos(params_.theta1);
    double s2 = std::sin(params_.theta2), c2 = std::cos(params_.theta2);
    auto prev = [&](HalfIndex i) { return has_image(i, p - 1) ? &cache_.at(key(i, p - 1)) : nullptr; };
    Interval w = net_->window();
    for (int x = w.lo.floor(); x <= w.hi.floor(); x++) {
        HalfIndex i = HalfIndex::integer(x);
        const CMat *a = net_->has_generator(i.shifted(-1)) ? prev(i.shifted(-1)) : nullptr;
        const CMat *b = prev(i);
        const CMat *c = net_->has_generator(i.shifted(1)) ? prev(i.shifted(1)) : nullptr;
        if (!a || !b || !c) {
            continue;
        }
        CMat ab = (*a) * (*b);
        CMat bc = (*b) * (*c);
        cache_.emplace(key(i, p), params_.eta1 * s1 * s1 * (*b) + params_.eta1 * c1 * c1 * (ab * (*c)) +
                                      0.5 * i1 * std::sin(2 * params_.theta1) * (ab - bc));
    }
    for (int x = w.lo.floor(); x < w.hi.floor(); x++) {
        HalfIndex i = HalfIndex::integer(x).shifted(1);
        const CMat *h = prev(i);
        if (!h || !has_image(i.shifted(-1), p) || !has_image(i.shifted(1), p)) {
            continue;
        }
        const CMat &bx = cache_.at(key(i.shifted(-1), p));
        const CMat &bx1 = cache_.at(key(i.shifted(1), p));
        CMat bh = bx * (*h);
        CMat hb = (*h) * bx1;
        cache_.emplace(key(i, p), params_.eta2 * s2 * s2 * (*h) + params_.eta2 * c2 * c2 * (bh * bx1) +
                                      0.5 * i1 * std::sin(2 * params_.theta2) * (bh - hb));
    }
}

CMat Automorphism::solve_inverse(HalfIndex i) const {
    Interval j = inverse_support(i);
    int n = j.size();
    std::size_t count = std::size_t{1} << n;
    int dim = net_->dim();
    std::vector<CMat> prod(count);
    prod[0] = identity(dim);
    for (std::size_t s = 1; s < count; s++) {
        int hb = std::bit_width(s) - 1;
        prod[s] = prod[s ^ (std::size_t{1} << hb)] * image(j.at(hb), 1);
    }
    PauliString target = net_->symbol(i);
    CMat out = CMat::Zero(dim, dim);
    CMat check = net_->matrix(i);
    for (std::size_t s = 0; s < count; s++) {
        cplx c = std::conj(target.coefficient_in(prod[s]));
        if (std::abs(c) < 1e-14) {
            continue;
        }
        add_pauli(out, net_->monom_symbol(j, s), c);
        check -= c * prod[s];
    }
    if (hs_norm(check) > 1e-9) {
        fail(Errc::NotInSpan, "beta^{-1}(U_" + i.str() + ") not found in the neighbouring interval, residual " +
                                  std::to_string(hs_norm(check)));
    }
    return out;
}

void Automorphism::build_inverse(int p) {
    Interval w = net_->window();
    for (HalfIndex i : net_->generator_indices()) {
        if (p == -1) {
            Interval j = inverse_support(i);
            if (!w.contains(j.lo) || !w.contains(j.hi)) {
                continue;
            }
            bool ready = true;
            for (int k = 0; k < j.size(); k++) {
                ready = ready && has_image(j.at(k), 1);
            }
            if (ready) {
                cache_.emplace(key(i, p), solve_inverse(i));
            }
            continue;
        }
        if (!has_image(i, p + 1)) {
            continue;
        }
        int r = -(p + 1);
        Interval s{std::max(w.lo, i.shifted(-2 * r)), std::min(w.hi, i.shifted(2 * r))};
        try {
            cache_.emplace(key(i, p), apply(cache_.at(key(i, p + 1)), s, -1));
        } catch (const Error &e) {
            if (e.code() != Errc::OutOfWindow && e.code() != Errc::NotInSpan) {
                throw;
            }
        }
    }
}

CMat Automorphism::apply(const CMat &m, const Interval &hint, int power) const {
    MonomExpansion ex = net_->expand(m, hint);
    if (ex.residual > 1e-9) {
        fail(Errc::NotInSpan, "operator is not in the algebra of (" + hint.lo.str() + ", " + hint.hi.str() +
                                  "), residual " + std::to_string(ex.residual));
    }
    if (power == 0) {
        return m;
    }
    int dim = net_->dim();
    CMat out = CMat::Zero(dim, dim);
    for (auto [subset, c] : ex.terms) {
        CMat term = identity(dim);
        for (int k = 0; k < hint.size(); k++) {
            if ((subset >> k) & 1) {
                term = term * image(hint.at(k), power);
            }
        }
        out += c * term;
    }
    return out;
}

Interval cauchy_span(const Region &hint) {
    int lo = INT32_MAX;
    int hi = INT32_MIN;
    for (const auto &c : hint.minimals()) {
        int r = 2 * std::abs(c.t);
        lo = std::min(lo, c.x.twice() - r);
        hi = std::max(hi, c.x.twice() + r);
    }
    return {HalfIndex::from_twice(lo), HalfIndex::from_twice(hi)};
}

CMat Automorphism::apply(const CMat &m, const Region &hint, int power) const {
    Interval s = cauchy_span(hint);
    Interval w = net_->window();
    return apply(m, Interval{std::max(s.lo, w.lo), std::min(s.hi, w.hi)}, power);
}

CMat Automorphism::cone_operator(const MinimalCone &c) const {
    return image(c.x, -c.t);
}

CMat apply_automorphism(const Automorphism &dyn, const CMat &m, const Region &hint, int power) {
    return dyn.apply(m, hint, power);
}

CMat alpha_shift(const IsingNet &net, const CMat &m, int steps) {
    if (steps == 0) {
        return m;
    }
    int n = net.n_qubits();
    int k = std::abs(steps);
    if (k >= n) {
        fail(Errc::OutOfWindow, "shift by " + std::to_string(steps) + " leaves the window");
    }
    std::uint64_t dim = std::uint64_t{1} << n;
    std::uint64_t kept_dim = std::uint64_t{1} << (n - k);
    std::uint64_t low = (std::uint64_t{1} << k) - 1;
    std::uint64_t keep = kept_dim - 1;
    // Bits that leave the window: high bits for steps > 0, low bits otherwise.
    auto lost = [&](std::uint64_t s) { return steps > 0 ? (s >> (n - k)) : (s & low); };
    auto kept = [&](std::uint64_t s) { return steps > 0 ? (s & keep) : (s >> k); };
    auto embed = [&](std::uint64_t r) { return steps > 0 ? r : (r << k); };
    CMat reduced(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(kept_dim));
    for (std::uint64_t r = 0; r < kept_dim; r++) {
        for (std::uint64_t c = 0; c < kept_dim; c++) {
            reduced(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                m(static_cast<Eigen::Index>(embed(r)), static_cast<Eigen::Index>(embed(c)));
        }
    }
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    CMat out = CMat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t a = 0; a < dim; a++) {
        for (std::uint64_t b = 0; b < dim; b++) {
            cplx expect = lost(a) == lost(b) ? reduced(static_cast<Eigen::Index>(kept(a)),
                                                       static_cast<Eigen::Index>(kept(b)))
                                             : cplx(0);
            if (std::abs(m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) - expect) > 1e-12 * scale) {
                fail(Errc::OutOfWindow, "operator acts on sites that the shift moves out of the window");
            }
            // New trivial bits: low for steps > 0, high otherwise.
            std::uint64_t na = steps > 0 ? (a >> k) : (a & keep);
            std::uint64_t nb = steps > 0 ? (b >> k) : (b & keep);
            bool same = steps > 0 ? ((a & low) == (b & low)) : ((a >> (n - k)) == (b >> (n - k)));
            if (same) {
                out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                    reduced(static_cast<Eigen::Index>(na), static_cast<Eigen::Index>(nb));
            }
        }
    }
    return out;
}

LocalAlgebra cone_algebra(const Region &o, const Automorphism &dyn) {
    std::vector<CMat> gens;
    for (const auto &c : o.minimals()) {
        gens.push_back(dyn.cone_operator(c));
    }
    // The generators are self-adjoint, so the generated algebra is the bicommutant. Word
    // closure loses digits when theta is close to +-pi/2.
    int dim = dyn.net().dim();
    SpanBasis basis = commutant(commutant(orthonormalize(gens, dim, 1e-12), 1e-9, 1), 1e-9, 2);
    int lin = static_cast<int>(basis.size());
    if (o.is_double_cone()) {
        int n = o.n();
        if (lin != (1 << n)) {
            fail(Errc::DimensionMismatch, "region " + o.str() + " with n(O)=" + std::to_string(n) +
                                              " generated a " + std::to_string(lin) + "-dimensional algebra");
        }
        std::size_t z = center(basis, gens, 1e-9).size();
        if (z != (n % 2 == 0 ? 1u : 2u)) {
            fail(Errc::DimensionMismatch, "region " + o.str() + " has a " + std::to_string(z) + "-dimensional centre");
        }
    }
    return {o, std::move(basis), lin};
}

CausalityReport local_primitive_causality_check(const Automorphism &dyn) {
    CausalityReport out;
    const IsingNet &net = dyn.net();
    Interval w = net.window();
    for (int tw = w.lo.twice() + 1; tw <= w.hi.twice() - 1; tw++) {
        HalfIndex c = HalfIndex::from_twice(tw);
        Interval iv{c.shifted(-1), c.shifted(1)};
        Region completion = Region::cauchy_interval(iv.lo, iv.hi);
        bool supported = true;
        for (const auto &m : completion.minimals()) {
            supported = supported && dyn.has_image(m.x, -m.t);
        }
        if (!supported) {
            continue;
        }
        std::vector<MinimalCone> triple{{iv.lo, 0}, {c, 0}, {iv.hi, 0}};
        Region v(triple);
        SpanBasis direct = net.monom_basis(iv);
        LocalAlgebra full = cone_algebra(completion, dyn);
        double r = span_distance(direct, full.basis);
        out.entries.push_back({v, completion, r});
        out.max_residual = std::max(out.max_residual, r);
    }
    if (out.entries.empty()) {
        fail(Errc::OutOfWindow, "window too small for any neighbouring triple and its completion");
    }
    return out;
}

}  // namespace qising
