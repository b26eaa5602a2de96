#pragma once

// Text formats. All ids on disk are 1-based.
//
//   graph  : "p edge <n> <m>" then m lines "e <u> <v>"
//   3dm    : "3dm <n> <|T|>" then |T| lines "t <r> <b> <y>"
//   cut    : "cut <structure|substructure> <M> <t>" then t lines "s <center> <leaf>..."
//   roles  : one line per vertex "v <id> <TAG> <i> [<j>]"
//
// Lines starting with "c " (or a lone "c") are comments; blank lines are
// ignored. Writers emit the canonical form only.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "starcut/cut.hpp"
#include "starcut/graph.hpp"
#include "starcut/np_oracles.hpp"
#include "starcut/reductions.hpp"
#include "starcut/solver.hpp"

namespace starcut {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > start) line.tokens.push_back(raw.substr(start, i - start));
        }
        if (line.tokens.empty() || line.tokens[0] == "c") continue;
        out.push_back(std::move(line));
    }
    return out;
}

inline std::size_t number(const Line& l, std::size_t idx, const char* what) {
    const std::string_view s = l.tokens.at(idx);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(l.number, std::string("invalid ") + what + " '" + std::string(s) + "'");
    return v;
}

inline void expect(const Line& l, std::string_view keyword, std::size_t min_tokens, std::size_t max_tokens) {
    if (l.tokens[0] != keyword)
        throw ParseError(l.number, "expected '" + std::string(keyword) + "', got '" + std::string(l.tokens[0]) + "'");
    if (l.tokens.size() < min_tokens || l.tokens.size() > max_tokens)
        throw ParseError(l.number, "wrong number of fields for '" + std::string(keyword) + "'");
}

inline std::size_t vertex_id(const Line& l, std::size_t idx, std::size_t n) {
    const std::size_t v = number(l, idx, "vertex id");
    if (v < 1 || v > n) throw ParseError(l.number, "vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return v - 1;
}

inline std::size_t end_line(const std::vector<Line>& lines) { return lines.empty() ? 1 : lines.back().number; }

}  // namespace detail

// ---- graph ----

inline Graph parse_graph(std::string_view text) {
    const auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'p edge' header");
    const auto& h = lines[0];
    detail::expect(h, "p", 4, 4);
    if (h.tokens[1] != "edge") throw ParseError(h.number, "expected 'p edge'");
    const std::size_t n = detail::number(h, 2, "vertex count");
    const std::size_t m = detail::number(h, 3, "edge count");
    if (lines.size() - 1 != m)
        throw ParseError(lines.size() - 1 < m ? detail::end_line(lines) : lines[m + 1].number,
                         "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& l = lines[k];
        detail::expect(l, "e", 3, 3);
        const auto u = static_cast<Vertex>(detail::vertex_id(l, 1, n));
        const auto v = static_cast<Vertex>(detail::vertex_id(l, 2, n));
        if (u == v) throw ParseError(l.number, "self-loop at vertex " + std::to_string(u + 1));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError(l.number, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
        edges.emplace_back(u, v);
    }
    return Graph::build(n, edges);
}

inline std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

// ---- 3dm ----

inline ThreeDMInstance parse_3dm(std::string_view text) {
    const auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing '3dm' header");
    const auto& h = lines[0];
    detail::expect(h, "3dm", 3, 3);
    ThreeDMInstance inst;
    inst.n = detail::number(h, 1, "ground set size");
    const std::size_t count = detail::number(h, 2, "triple count");
    if (lines.size() - 1 != count)
        throw ParseError(lines.size() - 1 < count ? detail::end_line(lines) : lines[count + 1].number,
                         "header declares " + std::to_string(count) + " triples, found " +
                             std::to_string(lines.size() - 1));
    std::set<Triple> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& l = lines[k];
        detail::expect(l, "t", 4, 4);
        Triple t{detail::vertex_id(l, 1, inst.n) + 1, detail::vertex_id(l, 2, inst.n) + 1,
                 detail::vertex_id(l, 3, inst.n) + 1};
        if (!seen.insert(t).second) throw ParseError(l.number, "duplicate triple");
        inst.triples.push_back(t);
    }
    return inst;
}

inline std::string write_3dm(const ThreeDMInstance& inst) {
    std::ostringstream os;
    os << "3dm " << inst.n << ' ' << inst.triples.size() << '\n';
    for (const auto& t : inst.triples) os << "t " << t.r << ' ' << t.b << ' ' << t.y << '\n';
    return os.str();
}

// ---- cut ----

/// Parses a certificate. `n`, when given, bounds vertex ids.
inline CutFamily parse_cut(std::string_view text, std::optional<std::size_t> n = {}) {
    const auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, "missing 'cut' header");
    const auto& h = lines[0];
    detail::expect(h, "cut", 4, 4);
    CutFamily f;
    if (h.tokens[1] == "structure") f.kind = CutKind::structure;
    else if (h.tokens[1] == "substructure") f.kind = CutKind::substructure;
    else throw ParseError(h.number, "unknown cut kind '" + std::string(h.tokens[1]) + "'");
    f.M = detail::number(h, 2, "M");
    const std::size_t t = detail::number(h, 3, "element count");
    if (lines.size() - 1 != t)
        throw ParseError(lines.size() - 1 < t ? detail::end_line(lines) : lines[t + 1].number,
                         "header declares " + std::to_string(t) + " elements, found " +
                             std::to_string(lines.size() - 1));
    const std::size_t bound = n.value_or(static_cast<std::size_t>(-1) / 2);
    std::set<Vertex> used;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& l = lines[k];
        detail::expect(l, "s", 2, static_cast<std::size_t>(-1));
        const auto center = static_cast<Vertex>(detail::vertex_id(l, 1, bound));
        std::vector<Vertex> leaves;
        for (std::size_t i = 2; i < l.tokens.size(); ++i) {
            const auto v = static_cast<Vertex>(detail::vertex_id(l, i, bound));
            if (!leaves.empty() && v <= leaves.back()) throw ParseError(l.number, "leaves must be strictly increasing");
            leaves.push_back(v);
        }
        const std::size_t j = leaves.size();
        if (f.kind == CutKind::structure && j != f.M)
            throw ParseError(l.number, "structure element has " + std::to_string(j) + " leaves, expected " +
                                           std::to_string(f.M));
        if (f.kind == CutKind::substructure && j > f.M)
            throw ParseError(l.number, "substructure element has " + std::to_string(j) + " leaves, at most " +
                                           std::to_string(f.M) + " allowed");
        Star s;
        try {
            s = make_star(center, leaves);
        } catch (const std::invalid_argument& e) {
            throw ParseError(l.number, e.what());
        }
        for (Vertex v : star_vertices(s))
            if (!used.insert(v).second) throw ParseError(l.number, "elements overlap at vertex " + std::to_string(v + 1));
        f.elements.push_back(std::move(s));
    }
    return f;
}

inline std::string write_cut(const CutFamily& f) {
    const CutFamily c = f.canonical();
    std::ostringstream os;
    os << "cut " << to_string(c.kind) << ' ' << c.M << ' ' << c.size() << '\n';
    for (const auto& s : c.elements) {
        os << "s " << s.center + 1;
        for (Vertex l : s.leaves) os << ' ' << l + 1;
        os << '\n';
    }
    return os.str();
}

// ---- roles ----

inline std::vector<VertexRole> parse_roles(std::string_view text) {
    std::vector<VertexRole> roles;
    for (const auto& l : detail::tokenize(text)) {
        detail::expect(l, "v", 4, 5);
        const std::size_t id = detail::number(l, 1, "vertex id");
        if (id != roles.size() + 1)
            throw ParseError(l.number, "expected vertex id " + std::to_string(roles.size() + 1) + ", got " +
                                           std::to_string(id));
        const auto tag = tag_from_name(l.tokens[2]);
        if (!tag) throw ParseError(l.number, "unknown role tag '" + std::string(l.tokens[2]) + "'");
        VertexRole r{*tag, detail::number(l, 3, "role index"), 0};
        if (r.has_second() != (l.tokens.size() == 5))
            throw ParseError(l.number, "wrong number of indices for role " + std::string(l.tokens[2]));
        if (r.has_second()) r.second = detail::number(l, 4, "role index");
        if (r.first == 0 || (r.has_second() && r.second == 0)) throw ParseError(l.number, "role indices are 1-based");
        roles.push_back(r);
    }
    return roles;
}

inline std::string write_roles(const std::vector<VertexRole>& roles) {
    std::ostringstream os;
    for (std::size_t v = 0; v < roles.size(); ++v) {
        const auto& r = roles[v];
        os << "v " << v + 1 << ' ' << tag_name(r.tag) << ' ' << r.first;
        if (r.has_second()) os << ' ' << r.second;
        os << '\n';
    }
    return os.str();
}

// ---- solve result ----

/// "kappa <kind> <M> = <value|none>" followed by the certificate, if any.
inline std::string write_result(const SolveResult& r, CutKind kind, std::size_t M) {
    std::ostringstream os;
    os << "kappa " << to_string(kind) << ' ' << M << " = ";
    if (r.value) os << *r.value;
    else os << "none";
    os << '\n';
    if (r.certificate) os << write_cut(*r.certificate);
    return os.str();
}

// ---- files ----

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace starcut
