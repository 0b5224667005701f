#include "reduction.hpp"

#include <limits>

namespace hackenbush {

namespace {

VertexId smallest_unused(const std::set<VertexId>& used, VertexId from = 0) {
    VertexId v = from;
    while (used.contains(v)) ++v;
    return v;
}

std::vector<Edge> redirect_ground(const Position& p, VertexId target) {
    std::vector<Edge> edges = p.edges();
    for (Edge& e : edges) {
        if (p.is_ground(e.u)) e.u = target;
        if (p.is_ground(e.v)) e.v = target;
    }
    return edges;
}

std::set<VertexId> non_ground_vertices(const Position& p) {
    std::set<VertexId> out;
    for (VertexId v : p.vertices())
        if (!p.is_ground(v)) out.insert(v);
    return out;
}

}  // namespace

Position merge_ground(const Position& p) {
    const VertexId merged = smallest_unused(p.vertices());
    return Position({merged}, redirect_ground(p, merged), non_ground_vertices(p));
}

Position to_misere_instance(const Position& p) {
    if (p.has_green())
        throw Error(ErrorCode::GreenEdge, "reduction source must be a Red-Blue position (found a green edge)");
    const VertexId merged = smallest_unused(p.vertices());
    const VertexId new_ground = smallest_unused(p.vertices(), merged + 1);

    std::vector<Edge> edges = redirect_ground(p, merged);
    if (!p.empty() && p.edges().back().id == std::numeric_limits<EdgeId>::max())
        throw Error(ErrorCode::InvalidArgument, "no edge id left for the green edge");
    const EdgeId green_id = p.empty() ? 0 : p.edges().back().id + 1;
    edges.push_back(Edge{green_id, new_ground, merged, Color::Green});

    std::set<VertexId> extra = non_ground_vertices(p);
    extra.insert(merged);
    return Position({new_ground}, std::move(edges), std::move(extra));
}

}  // namespace hackenbush
