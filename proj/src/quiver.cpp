#include "cluster_poset/quiver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cpo {

int Quiver::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (vertices[i] == label)
            return i;
    return -1;
}

std::string Quiver::key() const {
    std::ostringstream os;
    for (const auto& v : vertices)
        os << v << ';';
    os << '|';
    for (const auto& [s, t] : arrows)
        os << s << '>' << t << ';';
    return os.str();
}

namespace {

void check_acyclic(const Quiver& q) {
    // Kahn topological sort; leftover vertices mean an oriented cycle.
    std::vector<int> indeg(q.size(), 0);
    for (const auto& [s, t] : q.arrows)
        indeg[t]++;
    std::vector<int> stack;
    for (int i = 0; i < q.size(); ++i)
        if (indeg[i] == 0)
            stack.push_back(i);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& [s, t] : q.arrows)
            if (s == v && --indeg[t] == 0)
                stack.push_back(t);
    }
    if (seen != q.size())
        throw std::invalid_argument("quiver has an oriented cycle");
}

} // namespace

Quiver make_quiver(std::vector<std::string> vertices,
                   const std::vector<std::pair<std::string, std::string>>& arrows) {
    Quiver q;
    q.vertices = std::move(vertices);
    std::set<std::string> seen;
    for (const auto& v : q.vertices)
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate vertex label: " + v);
    for (const auto& [s, t] : arrows) {
        int si = q.index_of(s), ti = q.index_of(t);
        if (si < 0 || ti < 0)
            throw std::invalid_argument("arrow endpoint not a vertex: " + s + " -> " + t);
        q.arrows.emplace_back(si, ti);
    }
    check_acyclic(q);
    return q;
}

Quiver parse_quiver(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.contains("vertices") || !j.contains("arrows"))
        throw std::invalid_argument("quiver JSON needs \"vertices\" and \"arrows\"");
    std::vector<std::string> vertices = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument("arrow must be a [src, tgt] pair");
        arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    return make_quiver(std::move(vertices), arrows);
}

std::vector<int> terminal_vertices(const Quiver& q, TerminalKind kind) {
    std::vector<int> out;
    for (int v = 0; v < q.size(); ++v)
        if (kind == TerminalKind::Sink ? is_sink(q, v) : is_source(q, v))
            out.push_back(v);
    return out;
}

bool is_sink(const Quiver& q, int x) {
    for (const auto& [s, t] : q.arrows)
        if (s == x)
            return false;
    return true;
}

bool is_source(const Quiver& q, int x) {
    for (const auto& [s, t] : q.arrows)
        if (t == x)
            return false;
    return true;
}

Quiver reflect(const Quiver& q, int x) {
    if (x < 0 || x >= q.size())
        throw std::invalid_argument("reflect: no such vertex");
    if (!is_sink(q, x) && !is_source(q, x))
        throw std::invalid_argument("reflect: vertex " + q.vertices[x] +
                                    " is neither a sink nor a source");
    Quiver out = q;
    for (auto& [s, t] : out.arrows)
        if (s == x || t == x)
            std::swap(s, t);
    return out;
}

std::optional<DynkinType> classify_dynkin(const Quiver& q) {
    const int n = q.size();
    if (n == 0)
        return std::nullopt;

    // Underlying graph must be a simple connected tree.
    std::set<std::pair<int, int>> edges;
    for (const auto& [s, t] : q.arrows) {
        auto e = std::minmax(s, t);
        if (!edges.insert({e.first, e.second}).second)
            return std::nullopt; // parallel arrows
    }
    if (static_cast<int>(edges.size()) != n - 1)
        return std::nullopt;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> visited(n, false);
    std::vector<int> stack{0};
    visited[0] = true;
    int seen = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = true;
                ++seen;
                stack.push_back(w);
            }
    }
    if (seen != n)
        return std::nullopt;

    std::vector<int> deg3;
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() >= 4)
            return std::nullopt;
        if (adj[v].size() == 3)
            deg3.push_back(v);
    }
    if (deg3.empty())
        return DynkinType{'A', n};
    if (deg3.size() > 1)
        return std::nullopt;

    // Branch lengths from the unique degree-3 vertex.
    int c = deg3[0];
    std::vector<int> lengths;
    for (int start : adj[c]) {
        int len = 1, prev = c, cur = start;
        while (adj[cur].size() == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths[0] == 1 && lengths[1] == 1)
        return DynkinType{'D', n};
    if (lengths[0] == 1 && lengths[1] == 2 && lengths[2] >= 2 && lengths[2] <= 4)
        return DynkinType{'E', n}; // n is then 6, 7 or 8
    return std::nullopt;
}

DimVec unit_vector(const Quiver& q, int x) {
    DimVec d(q.size(), 0);
    d[x] = 1;
    return d;
}

long long euler_form(const Quiver& q, const DimVec& d, const DimVec& e) {
    if (static_cast<int>(d.size()) != q.size() || static_cast<int>(e.size()) != q.size())
        throw std::invalid_argument("euler_form: dimension vector size mismatch");
    long long v = 0;
    for (int i = 0; i < q.size(); ++i)
        v += static_cast<long long>(d[i]) * e[i];
    for (const auto& [s, t] : q.arrows)
        v -= static_cast<long long>(d[s]) * e[t];
    return v;
}

DimVec simple_reflection(const Quiver& q, int x, const DimVec& d) {
    if (static_cast<int>(d.size()) != q.size())
        throw std::invalid_argument("simple_reflection: dimension vector size mismatch");
    DimVec out = d;
    int neighbour_sum = 0;
    for (const auto& [s, t] : q.arrows) {
        if (s == x)
            neighbour_sum += d[t];
        if (t == x)
            neighbour_sum += d[s];
    }
    out[x] = neighbour_sum - d[x];
    return out;
}

std::vector<DimVec> positive_roots(const Quiver& q) {
    if (!classify_dynkin(q))
        throw std::invalid_argument("positive_roots: quiver is not representation-finite");

    std::set<DimVec> all;
    std::vector<DimVec> frontier;
    for (int x = 0; x < q.size(); ++x) {
        DimVec e = unit_vector(q, x);
        all.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<DimVec> next;
        for (const DimVec& r : frontier)
            for (int x = 0; x < q.size(); ++x) {
                DimVec s = simple_reflection(q, x, r);
                if (all.insert(s).second)
                    next.push_back(s);
            }
        frontier = std::move(next);
    }

    std::vector<DimVec> pos;
    for (const DimVec& r : all) {
        bool nonneg = std::all_of(r.begin(), r.end(), [](int v) { return v >= 0; });
        bool nonzero = std::any_of(r.begin(), r.end(), [](int v) { return v != 0; });
        if (nonneg && nonzero)
            pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const DimVec& a, const DimVec& b) {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db)
            return da < db;
        return a < b;
    });
    return pos;
}

} // namespace cpo
