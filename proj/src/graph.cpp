#include "ordtile/graph.hpp"
#include "ordtile/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ordtile {

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
{
    if (n_ < 1)
        throw std::invalid_argument{"vertex count must be positive, got " + std::to_string(n_)};

    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_ + 1, Bitset{n_ + 1});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        auto [i, j] = edges_[k];
        if (i < 1 || j > n_)
            throw std::invalid_argument{"edge endpoint out of range: " + std::to_string(i) + " " + std::to_string(j)};
        if (i >= j)
            throw std::invalid_argument{"edge must have i < j, got " + std::to_string(i) + " " + std::to_string(j)};
        if (k > 0 && edges_[k] == edges_[k - 1])
            throw std::invalid_argument{"duplicate edge " + std::to_string(i) + " " + std::to_string(j)};
        adj_[i].set(j);
        adj_[j].set(i);
    }
}

int OrderedGraph::min_degree() const
{
    int d = n_;
    for (int v = 1; v <= n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

bool OrderedGraph::independent_interval(int a, int b) const
{
    for (auto [i, j] : edges_)
        if (a <= i && j <= b)
            return false;
    return true;
}

OrderedGraph mirror(const OrderedGraph & g)
{
    int n = g.n();
    std::vector<Edge> flipped;
    flipped.reserve(g.edge_count());
    for (auto [i, j] : g.edges())
        flipped.emplace_back(n + 1 - j, n + 1 - i);
    return OrderedGraph{n, std::move(flipped)};
}

namespace {

    // One whitespace-separated line of integers; returns false on blank/comment.
    bool significant_line(std::string_view line)
    {
        auto pos = line.find_first_not_of(" \t\r");
        return pos != std::string_view::npos && line[pos] != '#';
    }

    std::vector<long> parse_ints(std::string_view line, int lineno)
    {
        std::vector<long> out;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            if (pos >= line.size())
                break;
            long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
            if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
                throw ParseError{"expected integer, got '" + std::string{line.substr(pos)} + "'", lineno};
            out.push_back(value);
            pos = ptr - line.data();
        }
        return out;
    }

}

OrderedGraph parse_ordered_graph(std::string_view text)
{
    long n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    int lineno = 0;

    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++lineno;
        if (! significant_line(line))
            continue;

        auto nums = parse_ints(line, lineno);
        if (! have_header) {
            if (nums.size() != 2)
                throw ParseError{"header must be 'n m'", lineno};
            n = nums[0];
            m = nums[1];
            if (n < 1)
                throw ParseError{"vertex count must be positive", lineno};
            if (m < 0)
                throw ParseError{"edge count must be nonnegative", lineno};
            have_header = true;
            continue;
        }

        if (long(edges.size()) >= m)
            throw ParseError{"more than " + std::to_string(m) + " edge lines", lineno};
        if (nums.size() != 2)
            throw ParseError{"edge line must be 'i j'", lineno};
        auto [i, j] = std::pair{nums[0], nums[1]};
        if (i < 1 || j > n)
            throw ParseError{"endpoint out of range [1, " + std::to_string(n) + "]", lineno};
        if (i >= j)
            throw ParseError{"edge needs i < j, got " + std::to_string(i) + " " + std::to_string(j), lineno};
        for (auto & e : edges)
            if (e.first == i && e.second == j)
                throw ParseError{"duplicate edge " + std::to_string(i) + " " + std::to_string(j), lineno};
        edges.emplace_back(int(i), int(j));
    }

    if (! have_header)
        throw ParseError{"empty input, expected header 'n m'", lineno};
    if (long(edges.size()) != m)
        throw ParseError{"expected " + std::to_string(m) + " edges, got " + std::to_string(edges.size()), lineno};

    return OrderedGraph{int(n), std::move(edges)};
}

std::string to_text(const OrderedGraph & g)
{
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edges())
        out << i << ' ' << j << '\n';
    return out.str();
}

OrderedGraph graph_from_json(const std::string & text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError{std::string{"invalid JSON: "} + e.what(), 1};
    }
    if (! doc.is_object() || ! doc.contains("n") || ! doc.contains("edges"))
        throw ParseError{"JSON graph needs fields \"n\" and \"edges\"", 1};

    std::vector<Edge> edges;
    for (auto & e : doc["edges"]) {
        if (! e.is_array() || e.size() != 2)
            throw ParseError{"each edge must be a pair [i, j]", 1};
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return OrderedGraph{doc["n"].get<int>(), std::move(edges)};
    }
    catch (const std::invalid_argument & e) {
        throw ParseError{e.what(), 1};
    }
}

std::string graph_to_json(const OrderedGraph & g)
{
    nlohmann::json doc;
    doc["n"] = g.n();
    auto & edges = doc["edges"] = nlohmann::json::array();
    for (auto [i, j] : g.edges())
        edges.push_back({i, j});
    return doc.dump();
}

}
