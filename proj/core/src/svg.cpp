// Copyright 2026 The storient Authors
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

#include <algorithm>
#include <sstream>

#include "storient/layout.hpp"

namespace storient {

std::string render_svg(const Drawing& d, const SvgOptions& options) {
  const int scale = std::max(1, options.scale);
  const int margin = std::max(0, options.margin);
  const int width = d.width * scale + 2 * margin;
  const int height = d.height * scale + 2 * margin;
  // Upward drawing: grid y grows toward the top of the page.
  auto px = [&](const Point& p) { return std::to_string(margin + p.x * scale); };
  auto py = [&](const Point& p) { return std::to_string(margin + (d.height - p.y) * scale); };

  std::vector<char> red(d.edges.size(), 0);
  for (EdgeId e : options.highlight) {
    if (e >= 0 && e < static_cast<EdgeId>(red.size())) red[e] = 1;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g fill=\"none\" stroke-width=\"2\">\n";
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& line = d.edges[e];
    if (line.empty()) continue;
    out << "<path id=\"e" << e << "\" stroke=\"" << (red[e] ? "red" : "black") << "\" d=\"";
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << (i == 0 ? "M" : " L") << px(line[i]) << ' ' << py(line[i]);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  const int radius = std::max(2, scale / 5);
  out << "<g fill=\"black\">\n";
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    const Point& p = d.vertices[v];
    out << "<circle id=\"v" << v << "\" cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"" << radius << "\"/>\n";
  }
  out << "</g>\n";
  if (options.vertex_labels) {
    out << "<g font-family=\"sans-serif\" font-size=\"" << std::max(8, scale / 2) << "\" fill=\"blue\">\n";
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
      const Point& p = d.vertices[v];
      out << "<text x=\"" << margin + p.x * scale + radius + 1 << "\" y=\"" << margin + (d.height - p.y) * scale - radius - 1
          << "\">" << v << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace storient
