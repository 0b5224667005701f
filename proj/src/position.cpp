#include "position.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace hackenbush {

char color_letter(Color c) {
    switch (c) {
        case Color::Blue: return 'B';
        case Color::Red: return 'R';
        case Color::Green: return 'G';
    }
    return '?';
}

std::optional<Color> color_from_letter(char c) {
    switch (c) {
        case 'B': return Color::Blue;
        case 'R': return Color::Red;
        case 'G': return Color::Green;
        default: return std::nullopt;
    }
}

const char* player_name(Player p) { return p == Player::Left ? "Left" : "Right"; }

std::vector<Color> parse_color_set(std::string_view letters) {
    std::vector<Color> out;
    for (char ch : letters) {
        auto c = color_from_letter(ch);
        if (!c) throw Error(ErrorCode::UnknownColor, std::string("unknown color letter '") + ch + "'");
        if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "color set must not be empty");
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<bool> reachable_edges(const std::set<VertexId>& ground, const std::vector<Edge>& edges) {
    std::unordered_map<VertexId, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(i);
        if (!edges[i].is_loop()) incident[edges[i].v].push_back(i);
    }
    std::vector<bool> keep(edges.size(), false);
    std::set<VertexId> seen(ground.begin(), ground.end());
    std::vector<VertexId> stack(ground.begin(), ground.end());
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        auto it = incident.find(x);
        if (it == incident.end()) continue;
        for (std::size_t i : it->second) {
            keep[i] = true;
            VertexId y = edges[i].u == x ? edges[i].v : edges[i].u;
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
    return keep;
}

}  // namespace

std::vector<Edge> prune_edges(const std::set<VertexId>& ground, const std::vector<Edge>& edges) {
    auto keep = reachable_edges(ground, edges);
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (keep[i]) out.push_back(edges[i]);
    return out;
}

bool is_pruned(const std::set<VertexId>& ground, const std::vector<Edge>& edges) {
    auto keep = reachable_edges(ground, edges);
    return std::all_of(keep.begin(), keep.end(), [](bool b) { return b; });
}

Position::Position() : ground_{0}, vertices_{0} {}

Position::Position(std::set<VertexId> ground, std::vector<Edge> edges, std::set<VertexId> extra_vertices)
    : ground_(std::move(ground)), vertices_(std::move(extra_vertices)) {
    if (ground_.empty()) throw Error(ErrorCode::NoGround, "position needs at least one ground vertex");
    if (edges.size() > kMaxEdges)
        throw Error(ErrorCode::TooLarge, "position has " + std::to_string(edges.size()) +
                                             " edges; at most " + std::to_string(kMaxEdges) + " are supported");
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].id == edges[i - 1].id)
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge id " + std::to_string(edges[i].id));
    vertices_.insert(ground_.begin(), ground_.end());
    for (const Edge& e : edges) {
        vertices_.insert(e.u);
        vertices_.insert(e.v);
    }
    edges_ = prune_edges(ground_, edges);
}

const Edge* Position::find_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    return it != edges_.end() && it->id == id ? &*it : nullptr;
}

bool Position::has_green() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.color == Color::Green; });
}

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

std::uint32_t parse_id(std::string_view tok, std::size_t line, const char* what) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        syntax_error(line, std::string("expected non-negative integer ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Position parse_position(std::string_view text) {
    std::set<VertexId> ground;
    std::vector<Edge> edges;
    std::set<EdgeId> ids;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;

        if (tok[0] == "ground") {
            if (tok.size() < 2) syntax_error(line_no, "'ground' needs at least one vertex id");
            for (std::size_t i = 1; i < tok.size(); ++i) ground.insert(parse_id(tok[i], line_no, "vertex id"));
        } else if (tok[0] == "edge") {
            if (tok.size() != 5) syntax_error(line_no, "expected 'edge <eid> <u> <v> <color>'");
            Edge e;
            e.id = parse_id(tok[1], line_no, "edge id");
            e.u = parse_id(tok[2], line_no, "vertex id");
            e.v = parse_id(tok[3], line_no, "vertex id");
            auto c = tok[4].size() == 1 ? color_from_letter(tok[4][0]) : std::nullopt;
            if (!c)
                throw Error(ErrorCode::UnknownColor,
                            "line " + std::to_string(line_no) + ": unknown color '" + tok[4] + "' (expected B, R or G)");
            e.color = *c;
            if (!ids.insert(e.id).second)
                throw Error(ErrorCode::DuplicateEdge,
                            "line " + std::to_string(line_no) + ": duplicate edge id " + std::to_string(e.id));
            edges.push_back(e);
        } else {
            syntax_error(line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (ground.empty()) throw Error(ErrorCode::NoGround, "no ground vertex declared");
    return Position(std::move(ground), std::move(edges));
}

std::string serialize_position(const Position& p) {
    std::ostringstream out;
    out << "ground";
    for (VertexId g : p.ground()) out << ' ' << g;
    out << '\n';
    for (const Edge& e : p.edges()) out << "edge " << e.id << ' ' << e.u << ' ' << e.v << ' ' << color_letter(e.color) << '\n';
    return out.str();
}

GroundedCounts grounded_counts(const Position& p) {
    GroundedCounts c;
    for (const Edge& e : p.edges()) {
        if (!p.is_grounded(e)) continue;
        switch (e.color) {
            case Color::Blue: ++c.blue; break;
            case Color::Red: ++c.red; break;
            case Color::Green: ++c.green; break;
        }
    }
    return c;
}

std::vector<Move> legal_moves(const Position& p, Player mover) {
    std::vector<Move> out;
    for (const Edge& e : p.edges())
        if (can_cut(mover, e.color)) out.push_back(Move{e.id});
    return out;
}

Position apply_move(const Position& p, Move m) {
    if (!p.find_edge(m.edge_id))
        throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(m.edge_id) + " is not in the position");
    std::vector<Edge> rest;
    rest.reserve(p.edge_count());
    for (const Edge& e : p.edges())
        if (e.id != m.edge_id) rest.push_back(e);
    return Position(p.ground(), std::move(rest), p.vertices());
}

StateKey state_key(const Position& p, Player mover, const Position& root) {
    StateKey key{0, mover};
    const auto& re = root.edges();
    for (const Edge& e : p.edges()) {
        auto it = std::lower_bound(re.begin(), re.end(), e.id, [](const Edge& a, EdgeId x) { return a.id < x; });
        if (it == re.end() || it->id != e.id)
            throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e.id) + " is not in the root position");
        key.present |= std::uint64_t{1} << static_cast<unsigned>(it - re.begin());
    }
    return key;
}

Position swap_colors(const Position& p) {
    std::vector<Edge> edges = p.edges();
    for (Edge& e : edges) {
        if (e.color == Color::Blue)
            e.color = Color::Red;
        else if (e.color == Color::Red)
            e.color = Color::Blue;
    }
    return Position(p.ground(), std::move(edges), p.vertices());
}

}  // namespace hackenbush
