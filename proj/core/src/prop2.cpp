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

#include "qising/commoncause.hpp"
#include "qising/error.hpp"

namespace qising {

namespace {

constexpr int kMaxExtension = 4;

bool supported(const Region &r, const Automorphism &dyn) {
    return std::all_of(r.minimals().begin(), r.minimals().end(),
                       [&](const MinimalCone &c) { return dyn.has_image(c.x, -c.t); });
}

bool simple_and_supported(const Region &r, const Automorphism &dyn) {
    return r.n() % 2 == 0 && supported(r, dyn);
}

}  // namespace

Prop2Regions prop2_regions(const Region &o_a, const Region &o_b, const Automorphism &dyn) {
    Region::Bounds a = o_a.bounds();
    Region::Bounds b = o_b.bounds();
    for (int total = 0; total <= 2 * kMaxExtension; total++) {
        for (int k = 0; k <= std::min(total, kMaxExtension); k++) {
            int l = total - k;
            if (l > kMaxExtension) {
                continue;
            }
            // grow backwards along the left (resp. right) light ray
            Region left = Region::rect(a.u1 - k, a.u2, a.v1, a.v2);
            Region right = Region::rect(b.u1, b.u2, b.v1 - l, b.v2);
            if (!simple_and_supported(left, dyn) || !simple_and_supported(right, dyn) ||
                !spacelike_separated(left, right)) {
                continue;
            }
            Region joined = join(left, right);
            ConePredicate below = backward_cone(join(o_a, o_b));
            Region::Bounds j = joined.bounds();
            for (int m = 0; m <= kMaxExtension; m++) {
                Region ext = Region::rect(j.u1, j.u2, j.v1 - m, j.v2);
                if (!ext.within(below) || !simple_and_supported(ext, dyn)) {
                    continue;
                }
                Region loc = ext.filtered(wpast(o_a, o_b));
                return {left, right, joined, ext, loc};
            }
        }
    }
    fail(Errc::RegionSelectionFailure, "no simple regions for " + o_a.str() + ", " + o_b.str() +
                                           " fit in the window; enlarge it");
}

Prop2Result prop2_pipeline(const Region &o_a, const Region &o_b, const CMat &a, const CMat &b,
                           const Automorphism &dyn, const State &phi, const Lemma1Options &opt) {
    if (!o_a.is_double_cone() || !o_b.is_double_cone()) {
        fail(Errc::InvalidArgument, "event regions must be double cones");
    }
    if (!spacelike_separated(o_a, o_b)) {
        fail(Errc::InvalidArgument, "event regions are not spacelike separated");
    }
    // The construction grows O_a to the left; mirror when O_a lies to the right.
    if (!o_a.within(wedges_and_bounds(o_b).w_left)) {
        Prop2Result r = prop2_pipeline(o_b, o_a, b, a, dyn, phi, opt);
        return r;
    }
    LocalAlgebra alg_a = cone_algebra(o_a, dyn);
    LocalAlgebra alg_b = cone_algebra(o_b, dyn);
    if (alg_a.basis.residual(a) > 1e-9 || alg_b.basis.residual(b) > 1e-9) {
        fail(Errc::NotInSpan, "events are not in the algebras of their regions");
    }
    Prop2Regions regions = prop2_regions(o_a, o_b, dyn);
    LocalAlgebra n = cone_algebra(regions.extended, dyn);
    LocalAlgebra n1 = cone_algebra(regions.a_left, dyn);
    LocalAlgebra loc = cone_algebra(regions.localization, dyn);
    std::vector<CMat> gens;
    for (const auto &c : regions.extended.minimals()) {
        gens.push_back(dyn.cone_operator(c));
    }
    TensorSplit split(n.basis, n1.basis);
    Prop2Result out{lemma1_construct(split, phi, a, b, opt), regions, span_distance(n.basis, loc.basis),
                    center(n.basis, gens).size()};
    out.certificate.localization = regions.localization;
    out.certificate.localization_residual = loc.basis.residual(out.certificate.c);
    return out;
}

ChainConfig adjacent_window() {
    return {-2, 2, 0, 12};
}

AdjacentScenario adjacent_scenario(const Automorphism &dyn, int sign_a, int sign_b) {
    MinimalCone ca{HalfIndex::from_twice(-1), 1};
    MinimalCone cb{HalfIndex::from_twice(1), 1};
    CMat one = identity(dyn.net().dim());
    return {Region::cone(ca), Region::cone(cb), 0.5 * (one + sign_a * dyn.cone_operator(ca)),
            0.5 * (one + sign_b * dyn.cone_operator(cb))};
}

}  // namespace qising
