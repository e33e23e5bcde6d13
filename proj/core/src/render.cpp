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

#include <sstream>

#include "qising/spacetime.hpp"

namespace qising {

namespace {

const Layer *layer_of(const std::vector<Layer> &layers, const MinimalCone &c) {
    for (const auto &l : layers) {
        if (l.member(c)) {
            return &l;
        }
    }
    return nullptr;
}

// Lattice cell at (2x, 2tau), if there is one.
bool cell(int twice_x, int twice_tau, MinimalCone &out) {
    bool int_site = (twice_x & 1) == 0;
    bool int_time = (twice_tau & 1) == 0;
    if (int_site != int_time) {
        return false;
    }
    out.x = HalfIndex::from_twice(twice_x);
    out.t = int_site ? twice_tau / 2 : (twice_tau + 1) / 2;
    return true;
}

}  // namespace

std::string render_text(const std::vector<Layer> &layers, const Viewport &view) {
    std::ostringstream os;
    int lo = 2 * view.t_min - 1;
    int hi = 2 * view.t_max;
    for (int tt = hi; tt >= lo; tt--) {
        os << (tt % 2 == 0 ? "t=" + std::to_string(tt / 2) : std::string("   "));
        os << (tt % 2 == 0 && tt >= 0 && tt / 2 < 10 ? "  " : " ");
        for (int tx = view.x_min.twice(); tx <= view.x_max.twice(); tx++) {
            MinimalCone c;
            if (!cell(tx, tt, c)) {
                os << ' ';
                continue;
            }
            const Layer *l = layer_of(layers, c);
            os << (l ? l->glyph : '.');
        }
        os << '\n';
    }
    for (const auto &l : layers) {
        os << "  " << l.glyph << "  " << l.name << '\n';
    }
    return os.str();
}

std::string render_svg(const std::vector<Layer> &layers, const Viewport &view) {
    const double s = 40;
    int lo = 2 * view.t_min - 1;
    int hi = 2 * view.t_max;
    double width = (view.x_max.twice() - view.x_min.twice() + 2) * s / 2;
    double height = (hi - lo + 2) * s / 2;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height + 20 * layers.size()
       << "\">\n";
    for (int tt = hi; tt >= lo; tt--) {
        for (int tx = view.x_min.twice(); tx <= view.x_max.twice(); tx++) {
            MinimalCone c;
            if (!cell(tx, tt, c)) {
                continue;
            }
            const Layer *l = layer_of(layers, c);
            double cx = (tx - view.x_min.twice() + 1) * s / 2;
            double cy = (hi - tt + 1) * s / 2;
            double h = s / 2;
            os << "  <polygon points=\"" << cx - h << ',' << cy << ' ' << cx << ',' << cy - h << ' ' << cx + h << ','
               << cy << ' ' << cx << ',' << cy + h << "\" fill=\"" << (l ? l->color : "none")
               << "\" stroke=\"#888\" stroke-width=\"1\"><title>" << c.str() << "</title></polygon>\n";
        }
    }
    for (std::size_t k = 0; k < layers.size(); k++) {
        double y = height + 15 + 20 * static_cast<double>(k);
        os << "  <rect x=\"5\" y=\"" << y - 10 << "\" width=\"12\" height=\"12\" fill=\"" << layers[k].color
           << "\"/><text x=\"22\" y=\"" << y << "\" font-size=\"12\">" << layers[k].name << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace qising
