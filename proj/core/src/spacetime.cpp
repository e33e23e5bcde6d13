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

#include <algorithm>
#include <climits>
#include <cmath>

#include "qising/error.hpp"
#include "qising/spacetime.hpp"

namespace qising {

HalfIndex HalfIndex::from_double(double v) {
    double tw = 2 * v;
    if (!std::isfinite(tw) || tw != std::round(tw) || std::abs(tw) > 1e6) {
        fail(Errc::InvalidArgument, "site index must be a multiple of 1/2");
    }
    return from_twice(static_cast<int>(tw));
}

std::string HalfIndex::str() const {
    if (is_integer()) {
        return std::to_string(twice_ / 2);
    }
    return std::to_string(twice_) + "/2";
}

LightCone MinimalCone::lightcone() const {
    int tt = twice_tau();
    return {(tt + x.twice()) / 2, (tt - x.twice()) / 2};
}

MinimalCone MinimalCone::from_lightcone(LightCone c) {
    int k = c.u - c.v;
    int tt = c.u + c.v;
    return {HalfIndex::from_twice(k), (tt + (k & 1)) / 2};
}

std::string MinimalCone::str() const {
    return "(x=" + x.str() + ",t=" + std::to_string(t) + ")";
}

bool causally_precedes(const MinimalCone &a, const MinimalCone &b) {
    LightCone p = a.lightcone();
    LightCone q = b.lightcone();
    return p.u <= q.u && p.v <= q.v;
}

bool spacelike(const MinimalCone &a, const MinimalCone &b) {
    LightCone p = a.lightcone();
    LightCone q = b.lightcone();
    return (p.u - q.u) * (p.v - q.v) < 0;
}

Region::Region(std::vector<MinimalCone> cones) : cones_(std::move(cones)) {
    if (cones_.empty()) {
        fail(Errc::InvalidArgument, "a region needs at least one minimal cone");
    }
    std::sort(cones_.begin(), cones_.end());
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

Region Region::cone(const MinimalCone &c) {
    return Region({c});
}

Region Region::rect(int u1, int u2, int v1, int v2) {
    if (u2 < u1 || v2 < v1) {
        fail(Errc::InvalidArgument, "empty light-cone rectangle");
    }
    std::vector<MinimalCone> cones;
    for (int u = u1; u <= u2; u++) {
        for (int v = v1; v <= v2; v++) {
            cones.push_back(MinimalCone::from_lightcone({u, v}));
        }
    }
    return Region(std::move(cones));
}

Region Region::cauchy_interval(HalfIndex i, HalfIndex j, int t) {
    return span_cone({i, t}, {j, t});
}

bool Region::contains(const MinimalCone &c) const {
    return std::binary_search(cones_.begin(), cones_.end(), c);
}

bool Region::subset_of(const Region &other) const {
    return std::all_of(cones_.begin(), cones_.end(), [&](const MinimalCone &c) { return other.contains(c); });
}

bool Region::within(const ConePredicate &pred) const {
    return std::all_of(cones_.begin(), cones_.end(), pred);
}

Region::Bounds Region::bounds() const {
    Bounds b{INT_MAX, INT_MIN, INT_MAX, INT_MIN};
    for (const auto &c : cones_) {
        LightCone l = c.lightcone();
        b.u1 = std::min(b.u1, l.u);
        b.u2 = std::max(b.u2, l.u);
        b.v1 = std::min(b.v1, l.v);
        b.v2 = std::max(b.v2, l.v);
    }
    return b;
}

bool Region::is_double_cone() const {
    Bounds b = bounds();
    return static_cast<long>(cones_.size()) == static_cast<long>(b.u2 - b.u1 + 1) * (b.v2 - b.v1 + 1);
}

int Region::n_plus() const {
    Bounds b = bounds();
    return b.u2 - b.u1 + 1;
}

int Region::n_minus() const {
    Bounds b = bounds();
    return b.v2 - b.v1 + 1;
}

int Region::n() const {
    if (!is_double_cone()) {
        fail(Errc::InvalidArgument, "n(O) is defined for double cones only: " + str());
    }
    return n_plus() + n_minus() - 1;
}

Region Region::translated(int dt, int dx) const {
    std::vector<MinimalCone> out;
    out.reserve(cones_.size());
    for (const auto &c : cones_) {
        out.push_back(c.translated(dt, dx));
    }
    return Region(std::move(out));
}

Region Region::filtered(const ConePredicate &pred) const {
    std::vector<MinimalCone> out;
    std::copy_if(cones_.begin(), cones_.end(), std::back_inserter(out), pred);
    if (out.empty()) {
        fail(Errc::RegionSelectionFailure, "no cone of " + str() + " satisfies the predicate");
    }
    return Region(std::move(out));
}

HalfIndex Region::x_min() const {
    HalfIndex m = cones_.front().x;
    for (const auto &c : cones_) {
        m = std::min(m, c.x);
    }
    return m;
}

HalfIndex Region::x_max() const {
    HalfIndex m = cones_.front().x;
    for (const auto &c : cones_) {
        m = std::max(m, c.x);
    }
    return m;
}

int Region::t_min() const {
    int m = cones_.front().t;
    for (const auto &c : cones_) {
        m = std::min(m, c.t);
    }
    return m;
}

int Region::t_max() const {
    int m = cones_.front().t;
    for (const auto &c : cones_) {
        m = std::max(m, c.t);
    }
    return m;
}

std::string Region::str() const {
    if (is_double_cone()) {
        Bounds b = bounds();
        return "u[" + std::to_string(b.u1) + "," + std::to_string(b.u2) + "]v[" + std::to_string(b.v1) + "," +
               std::to_string(b.v2) + "]";
    }
    std::string out = "{";
    for (std::size_t k = 0; k < cones_.size(); k++) {
        out += (k ? " " : "") + cones_[k].str();
    }
    return out + "}";
}

Region span_cone(const MinimalCone &a, const MinimalCone &b) {
    LightCone p = a.lightcone();
    LightCone q = b.lightcone();
    return Region::rect(std::min(p.u, q.u), std::max(p.u, q.u), std::min(p.v, q.v), std::max(p.v, q.v));
}

Region join(const Region &a, const Region &b) {
    Region::Bounds x = a.bounds();
    Region::Bounds y = b.bounds();
    return Region::rect(std::min(x.u1, y.u1), std::max(x.u2, y.u2), std::min(x.v1, y.v1), std::max(x.v2, y.v2));
}

bool spacelike_separated(const Region &a, const Region &b) {
    for (const auto &p : a.minimals()) {
        for (const auto &q : b.minimals()) {
            if (!spacelike(p, q)) {
                return false;
            }
        }
    }
    return true;
}

ConePredicate backward_cone(const Region &r) {
    return [cones = r.minimals()](const MinimalCone &c) {
        return std::any_of(cones.begin(), cones.end(), [&](const MinimalCone &top) { return causally_precedes(c, top); });
    };
}

ConePredicate forward_cone(const Region &r) {
    return [cones = r.minimals()](const MinimalCone &c) {
        return std::any_of(cones.begin(), cones.end(), [&](const MinimalCone &low) { return causally_precedes(low, c); });
    };
}

ConePredicate wpast(const Region &a, const Region &b) {
    return [pa = backward_cone(a), pb = backward_cone(b)](const MinimalCone &c) { return pa(c) || pb(c); };
}

ConePredicate cpast(const Region &a, const Region &b) {
    return [pa = backward_cone(a), pb = backward_cone(b)](const MinimalCone &c) { return pa(c) && pb(c); };
}

ConePredicate spast(const Region &a, const Region &b) {
    std::vector<MinimalCone> all = a.minimals();
    all.insert(all.end(), b.minimals().begin(), b.minimals().end());
    return [all](const MinimalCone &c) {
        return std::all_of(all.begin(), all.end(), [&](const MinimalCone &p) { return causally_precedes(c, p); });
    };
}

WedgesAndBounds wedges_and_bounds(const Region &r) {
    Region::Bounds b = r.bounds();
    WedgesAndBounds out;
    out.w_left = [b](const MinimalCone &c) {
        LightCone l = c.lightcone();
        return l.u <= b.u2 && l.v >= b.v1;
    };
    out.w_right = [b](const MinimalCone &c) {
        LightCone l = c.lightcone();
        return l.u >= b.u1 && l.v <= b.v2;
    };
    out.i_plus = [b](const MinimalCone &c) {
        LightCone l = c.lightcone();
        return l.u >= b.u1 && l.v >= b.v1;
    };
    out.i_minus = [b](const MinimalCone &c) {
        LightCone l = c.lightcone();
        return l.u <= b.u2 && l.v <= b.v2;
    };
    return out;
}

int first_guess_shift(const Region &a, const Region &b, int max_shift) {
    Region top = join(a, b);
    ConePredicate common = cpast(a, b);
    for (int t = 0; t <= max_shift; t++) {
        if (top.translated(-t).within(common)) {
            return t;
        }
    }
    fail(Errc::RegionSelectionFailure, "no translate of the joined cone fits in the common past");
}

}  // namespace qising
