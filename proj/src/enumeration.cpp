#include "enumeration.hpp"

#include <algorithm>
#include <set>

namespace hackenbush {

const char* shape_name(ShapeClass s) {
    switch (s) {
        case ShapeClass::Strings: return "strings";
        case ShapeClass::Trees: return "trees";
        case ShapeClass::Graphs: return "graphs";
    }
    return "?";
}

namespace {

using ColorString = std::vector<Color>;

// All strings of length 1..max_len, ordered by length then lexicographically.
std::vector<ColorString> all_strings(std::size_t max_len, const std::vector<Color>& first,
                                     const std::vector<Color>& rest) {
    std::vector<ColorString> out;
    std::vector<ColorString> layer;
    for (Color c : first) layer.push_back({c});
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<ColorString> next;
        for (const auto& s : layer)
            for (Color c : rest) {
                next.push_back(s);
                next.back().push_back(c);
            }
        layer = std::move(next);
    }
    return out;
}

Position build_strings(const std::vector<const ColorString*>& chosen) {
    if (chosen.empty()) return Position();
    std::set<VertexId> ground;
    std::vector<Edge> edges;
    VertexId next_vertex = 0;
    EdgeId next_edge = 0;
    for (const ColorString* s : chosen) {
        VertexId prev = next_vertex++;
        ground.insert(prev);
        for (Color c : *s) {
            VertexId v = next_vertex++;
            edges.push_back(Edge{next_edge++, prev, v, c});
            prev = v;
        }
    }
    return Position(std::move(ground), std::move(edges));
}

void string_multisets(const std::vector<ColorString>& strings, std::size_t start, std::size_t budget,
                      std::vector<const ColorString*>& chosen, const PositionSink& sink) {
    sink(build_strings(chosen));
    for (std::size_t i = start; i < strings.size(); ++i) {
        if (strings[i].size() > budget) break;  // sorted by length
        chosen.push_back(&strings[i]);
        string_multisets(strings, i, budget - strings[i].size(), chosen, sink);
        chosen.pop_back();
    }
}

void trees(std::size_t max_edges, const std::vector<Color>& colors, const PositionSink& sink) {
    for (std::size_t k = 0; k <= max_edges; ++k) {
        std::vector<std::size_t> parent(k, 0);
        while (true) {
            std::vector<std::size_t> color_idx(k, 0);
            while (true) {
                std::vector<Edge> edges;
                for (std::size_t j = 0; j < k; ++j)
                    edges.push_back(Edge{static_cast<EdgeId>(j), static_cast<VertexId>(parent[j]),
                                         static_cast<VertexId>(j + 1), colors[color_idx[j]]});
                sink(Position({0}, std::move(edges)));
                // odometer over colours, last digit fastest
                std::size_t d = k;
                while (d > 0 && ++color_idx[d - 1] == colors.size()) color_idx[--d] = 0;
                if (d == 0) break;
            }
            // parent[j] ranges over 0..j
            std::size_t d = k;
            while (d > 0 && ++parent[d - 1] > d - 1) parent[--d] = 0;
            if (d == 0) break;
        }
    }
}

struct EdgeType {
    VertexId u, v;
    Color color;
};

bool labels_form_prefix(const std::vector<EdgeType>& types, const std::vector<std::size_t>& chosen) {
    std::uint64_t used = 0;
    for (std::size_t t : chosen) used |= (std::uint64_t{1} << types[t].u) | (std::uint64_t{1} << types[t].v);
    used >>= 1;  // drop ground vertex 0
    return (used & (used + 1)) == 0;
}

void graph_multisets(const std::vector<EdgeType>& types, std::size_t start, std::size_t budget,
                     std::vector<std::size_t>& chosen, const PositionSink& sink) {
    if (labels_form_prefix(types, chosen)) {
        std::vector<Edge> edges;
        edges.reserve(chosen.size());
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            const EdgeType& t = types[chosen[j]];
            edges.push_back(Edge{static_cast<EdgeId>(j), t.u, t.v, t.color});
        }
        if (is_pruned({0}, edges)) sink(Position({0}, std::move(edges)));
    }
    if (budget == 0) return;
    for (std::size_t i = start; i < types.size(); ++i) {
        chosen.push_back(i);
        graph_multisets(types, i, budget - 1, chosen, sink);
        chosen.pop_back();
    }
}

void graphs(std::size_t max_edges, const std::vector<Color>& colors, std::size_t max_vertices,
            const PositionSink& sink) {
    const std::size_t n = std::min(max_edges, max_vertices);
    std::vector<EdgeType> types;
    for (VertexId u = 0; u <= n; ++u)
        for (VertexId v = u; v <= n; ++v)
            for (Color c : colors) types.push_back({u, v, c});
    std::vector<std::size_t> chosen;
    graph_multisets(types, 0, max_edges, chosen, sink);
}

}  // namespace

void for_each_string_collection(std::size_t max_edges, const std::vector<Color>& first_colors,
                                const std::vector<Color>& rest_colors, const PositionSink& sink) {
    auto strings = all_strings(max_edges, first_colors, rest_colors);
    std::vector<const ColorString*> chosen;
    string_multisets(strings, 0, max_edges, chosen, sink);
}

void for_each_position(ShapeClass shape, std::size_t max_edges, const std::vector<Color>& colors,
                       const PositionSink& sink, std::size_t max_graph_vertices) {
    if (colors.empty()) throw Error(ErrorCode::InvalidArgument, "color set must not be empty");
    if (max_edges > kMaxEdges) throw Error(ErrorCode::TooLarge, "enumeration bound exceeds the edge cap");
    switch (shape) {
        case ShapeClass::Strings: for_each_string_collection(max_edges, colors, colors, sink); break;
        case ShapeClass::Trees: trees(max_edges, colors, sink); break;
        case ShapeClass::Graphs:
            if (max_graph_vertices >= 63) throw Error(ErrorCode::InvalidArgument, "too many graph vertices");
            graphs(max_edges, colors, max_graph_vertices, sink);
            break;
    }
}

std::vector<Position> enumerate_positions(ShapeClass shape, std::size_t max_edges, const std::vector<Color>& colors,
                                          std::size_t max_graph_vertices) {
    std::vector<Position> out;
    for_each_position(shape, max_edges, colors, [&](const Position& p) { out.push_back(p); }, max_graph_vertices);
    return out;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Position random_position(std::size_t max_edges, std::size_t max_vertices, const std::vector<Color>& colors,
                         std::uint64_t seed) {
    if (max_vertices < 1) throw Error(ErrorCode::InvalidArgument, "max_vertices must be at least 1");
    if (colors.empty()) throw Error(ErrorCode::InvalidArgument, "color set must not be empty");
    if (max_edges > kMaxEdges) throw Error(ErrorCode::TooLarge, "random position exceeds the edge cap");
    SplitMix64 rng(seed);
    std::vector<VertexId> reached{0};
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < max_edges; ++i) {
        VertexId u = reached[rng.below(reached.size())];
        const bool can_grow = reached.size() < max_vertices;
        std::uint64_t k = rng.below(reached.size() + (can_grow ? 1 : 0));
        VertexId v;
        if (k == reached.size()) {
            v = static_cast<VertexId>(reached.size());
            reached.push_back(v);
        } else {
            v = reached[k];
        }
        Color c = colors[rng.below(colors.size())];
        edges.push_back(Edge{static_cast<EdgeId>(i), u, v, c});
    }
    return Position({0}, std::move(edges));
}

}  // namespace hackenbush
