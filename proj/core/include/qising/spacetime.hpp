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

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace qising {

/// A value in (1/2)Z stored as twice its value.
class HalfIndex {
   public:
    constexpr HalfIndex() = default;

    static constexpr HalfIndex from_twice(int twice) {
        HalfIndex h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfIndex integer(int x) {
        return from_twice(2 * x);
    }
    /// Accepts values that are exact multiples of 1/2.
    static HalfIndex from_double(double v);

    constexpr int twice() const {
        return twice_;
    }
    constexpr bool is_integer() const {
        return (twice_ & 1) == 0;
    }
    double value() const {
        return twice_ / 2.0;
    }
    /// Largest integer not above the value.
    constexpr int floor() const {
        return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
    }
    constexpr HalfIndex shifted(int twice_steps) const {
        return from_twice(twice_ + twice_steps);
    }
    std::string str() const;

    friend constexpr auto operator<=>(HalfIndex, HalfIndex) = default;

   private:
    int twice_ = 0;
};

/// Light-cone coordinates u = tau + x, v = tau - x of a minimal cone.
struct LightCone {
    int u = 0;
    int v = 0;
    friend constexpr auto operator<=>(LightCone, LightCone) = default;
};

/// Minimal double cone O^m_x translated by t time units. Integer sites sit at tau = t,
/// half-integer sites at tau = t - 1/2.
struct MinimalCone {
    HalfIndex x;
    int t = 0;

    /// 2 * tau of the cone centre.
    int twice_tau() const {
        return 2 * t - (x.is_integer() ? 0 : 1);
    }
    LightCone lightcone() const;
    static MinimalCone from_lightcone(LightCone c);
    MinimalCone translated(int dt, int dx = 0) const {
        return {x.shifted(2 * dx), t + dt};
    }
    std::string str() const;

    friend auto operator<=>(const MinimalCone &a, const MinimalCone &b) {
        return a.lightcone() <=> b.lightcone();
    }
    friend bool operator==(const MinimalCone &a, const MinimalCone &b) {
        return a.x == b.x && a.t == b.t;
    }
};

/// a <= b in the lattice causal order (a in the causal past of b, or a == b).
bool causally_precedes(const MinimalCone &a, const MinimalCone &b);
bool spacelike(const MinimalCone &a, const MinimalCone &b);

using ConePredicate = std::function<bool(const MinimalCone &)>;

/// Nonempty finite set of minimal cones, kept sorted and unique.
class Region {
   public:
    struct Bounds {
        int u1, u2, v1, v2;
    };

    explicit Region(std::vector<MinimalCone> cones);

    static Region cone(const MinimalCone &c);
    /// All cones with u1 <= u <= u2 and v1 <= v <= v2.
    static Region rect(int u1, int u2, int v1, int v2);
    /// Double cone whose time-t slice is the interval (i, j).
    static Region cauchy_interval(HalfIndex i, HalfIndex j, int t = 0);

    const std::vector<MinimalCone> &minimals() const {
        return cones_;
    }
    std::size_t size() const {
        return cones_.size();
    }
    bool contains(const MinimalCone &c) const;
    bool subset_of(const Region &other) const;
    bool within(const ConePredicate &pred) const;
    Bounds bounds() const;
    bool is_double_cone() const;

    /// Only meaningful for double cones.
    int n_plus() const;
    int n_minus() const;
    int n() const;

    Region translated(int dt, int dx = 0) const;
    /// Cones of this region satisfying `pred`. Throws RegionSelectionFailure if none do.
    Region filtered(const ConePredicate &pred) const;
    /// Spatial sites occupied by the cones of this region.
    HalfIndex x_min() const;
    HalfIndex x_max() const;
    int t_min() const;
    int t_max() const;

    std::string str() const;

    friend bool operator==(const Region &, const Region &) = default;

   private:
    std::vector<MinimalCone> cones_;
};

Region span_cone(const MinimalCone &a, const MinimalCone &b);
/// Smallest double cone containing both regions.
Region join(const Region &a, const Region &b);
bool spacelike_separated(const Region &a, const Region &b);

ConePredicate backward_cone(const Region &r);
ConePredicate forward_cone(const Region &r);
ConePredicate wpast(const Region &a, const Region &b);
ConePredicate cpast(const Region &a, const Region &b);
ConePredicate spast(const Region &a, const Region &b);

struct WedgesAndBounds {
    ConePredicate w_left;
    ConePredicate w_right;
    ConePredicate i_plus;
    ConePredicate i_minus;
};

WedgesAndBounds wedges_and_bounds(const Region &r);

/// Smallest t >= 0 with join(a, b) translated by -t lying in cpast(a, b).
int first_guess_shift(const Region &a, const Region &b, int max_shift = 64);

struct Layer {
    char glyph;
    std::string name;
    std::string color;
    ConePredicate member;
};

struct Viewport {
    HalfIndex x_min;
    HalfIndex x_max;
    int t_min = -2;
    int t_max = 2;
};

/// One row per half time step, newest on top. The first matching layer wins.
std::string render_text(const std::vector<Layer> &layers, const Viewport &view);
std::string render_svg(const std::vector<Layer> &layers, const Viewport &view);

}  // namespace qising
