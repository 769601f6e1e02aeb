#include "cluster_poset/repr.hpp"

#include "cluster_poset/functors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace cpo {

void Representation::validate() const {
    if (static_cast<int>(dims.size()) != q.size() || maps.size() != q.arrows.size())
        throw std::invalid_argument("representation: size mismatch with quiver");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const auto& [s, t] = q.arrows[a];
        if (maps[a].rows() != static_cast<std::size_t>(dims[t]) ||
            maps[a].cols() != static_cast<std::size_t>(dims[s]))
            throw std::invalid_argument("representation: matrix shape mismatch on arrow");
    }
}

Representation zero_rep(const Quiver& q) {
    Representation m;
    m.q = q;
    m.dims.assign(q.size(), 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        m.maps.emplace_back(0, 0);
    return m;
}

Representation standard_rep(const Quiver& q, StandardKind kind, int x) {
    if (x < 0 || x >= q.size())
        throw std::invalid_argument("standard_rep: no such vertex");
    if (kind == StandardKind::Simple) {
        Representation m = zero_rep(q);
        m.dims[x] = 1;
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const auto& [s, t] = q.arrows[a];
            m.maps[a] = Matrix(m.dims[t], m.dims[s]);
        }
        return m;
    }

    // Projective P_x: basis at y = paths x ~> y, arrow action = composition.
    using Path = std::vector<std::size_t>; // arrow index sequence
    std::vector<std::vector<Path>> paths(q.size());
    std::vector<std::pair<int, Path>> queue{{x, {}}};
    paths[x].push_back({});
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [v, p] = queue[head];
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].first != v)
                continue;
            Path ext = p;
            ext.push_back(a);
            paths[q.arrows[a].second].push_back(ext);
            queue.emplace_back(q.arrows[a].second, ext);
        }
    }

    auto path_index = [&](int v, const Path& p) -> std::size_t {
        auto it = std::find(paths[v].begin(), paths[v].end(), p);
        return static_cast<std::size_t>(it - paths[v].begin());
    };

    Representation m;
    m.q = q;
    for (int v = 0; v < q.size(); ++v)
        m.dims.push_back(static_cast<int>(paths[v].size()));
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& [s, t] = q.arrows[a];
        Matrix mat(paths[t].size(), paths[s].size());
        for (std::size_t k = 0; k < paths[s].size(); ++k) {
            Path ext = paths[s][k];
            ext.push_back(a);
            mat.at(path_index(t, ext), k) = 1;
        }
        m.maps.push_back(std::move(mat));
    }
    return m;
}

Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts) {
    Representation m = zero_rep(q);
    for (const Representation& p : parts) {
        if (!(p.q == q))
            throw std::invalid_argument("direct_sum: quiver mismatch");
        for (int v = 0; v < q.size(); ++v)
            m.dims[v] += p.dims[v];
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& [s, t] = q.arrows[a];
        Matrix block(m.dims[t], m.dims[s]);
        std::size_t ro = 0, co = 0;
        for (const Representation& p : parts) {
            for (std::size_t i = 0; i < p.maps[a].rows(); ++i)
                for (std::size_t j = 0; j < p.maps[a].cols(); ++j)
                    block.at(ro + i, co + j) = p.maps[a].at(i, j);
            ro += p.maps[a].rows();
            co += p.maps[a].cols();
        }
        m.maps[a] = std::move(block);
    }
    return m;
}

namespace {

bool is_unit(const DimVec& d, int* where = nullptr) {
    int ones = 0, pos = -1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 1) {
            ++ones;
            pos = static_cast<int>(i);
        } else if (d[i] != 0) {
            return false;
        }
    }
    if (ones == 1 && where)
        *where = pos;
    return ones == 1;
}

int lex_smallest_sink(const Quiver& q) {
    int best = -1;
    for (int v : terminal_vertices(q, TerminalKind::Sink))
        if (best < 0 || q.vertices[v] < q.vertices[best])
            best = v;
    return best;
}

std::mutex g_indec_mutex;
std::map<std::pair<std::string, DimVec>, Representation> g_indec_cache;

} // namespace

Representation indecomposable_of_root(const Quiver& q, const DimVec& d) {
    {
        std::lock_guard<std::mutex> lock(g_indec_mutex);
        auto it = g_indec_cache.find({q.key(), d});
        if (it != g_indec_cache.end())
            return it->second;
    }

    auto roots = positive_roots(q);
    if (std::find(roots.begin(), roots.end(), d) == roots.end())
        throw std::invalid_argument("indecomposable_of_root: not a positive root");

    // Reflect d to a simple root along lex-smallest sinks, then pull the
    // simple back through F^- along the reversed sequence.
    std::vector<std::pair<Quiver, int>> seq;
    Quiver cur = q;
    DimVec dc = d;
    int simple_at = -1;
    int guard = 16 * q.size() * q.size() + 16;
    while (!is_unit(dc, &simple_at)) {
        if (--guard < 0)
            throw std::logic_error("indecomposable_of_root: reflection did not terminate");
        int x = lex_smallest_sink(cur);
        seq.emplace_back(cur, x);
        dc = simple_reflection(cur, x, dc);
        cur = reflect(cur, x);
    }

    Representation m = standard_rep(cur, StandardKind::Simple, simple_at);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        m = reflect_minus(m, it->second);
    if (m.dim_vector() != d)
        throw std::logic_error("indecomposable_of_root: wrong dimension vector");

    std::lock_guard<std::mutex> lock(g_indec_mutex);
    g_indec_cache.insert({{q.key(), d}, m});
    return m;
}

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
    if (!(m.q == n.q))
        throw std::invalid_argument("hom_basis: quiver mismatch");
    const Quiver& q = m.q;

    // Variables: entries of phi_v (n.dims[v] x m.dims[v]) for every vertex.
    std::vector<std::size_t> offset(q.size() + 1, 0);
    for (int v = 0; v < q.size(); ++v)
        offset[v + 1] = offset[v] +
                        static_cast<std::size_t>(n.dims[v]) * static_cast<std::size_t>(m.dims[v]);
    const std::size_t nvars = offset[q.size()];
    auto var = [&](int v, std::size_t r, std::size_t c) {
        return offset[v] + r * static_cast<std::size_t>(m.dims[v]) + c;
    };

    std::size_t neq = 0;
    for (const auto& [s, t] : q.arrows)
        neq += static_cast<std::size_t>(n.dims[t]) * static_cast<std::size_t>(m.dims[s]);

    Matrix sys(neq, nvars);
    std::size_t eq = 0;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& [s, t] = q.arrows[a];
        // N(a) phi_s - phi_t M(a) = 0, entrywise.
        for (int r = 0; r < n.dims[t]; ++r)
            for (int c = 0; c < m.dims[s]; ++c) {
                for (int k = 0; k < n.dims[s]; ++k)
                    sys.at(eq, var(s, k, c)) += n.maps[a].at(r, k);
                for (int l = 0; l < m.dims[t]; ++l)
                    sys.at(eq, var(t, r, l)) -= m.maps[a].at(l, c);
                ++eq;
            }
    }

    std::vector<Morphism> basis;
    for (const auto& vec : kernel_basis(sys)) {
        Morphism phi;
        for (int v = 0; v < q.size(); ++v) {
            Matrix comp(n.dims[v], m.dims[v]);
            for (int r = 0; r < n.dims[v]; ++r)
                for (int c = 0; c < m.dims[v]; ++c)
                    comp.at(r, c) = vec[var(v, r, c)];
            phi.comps.push_back(std::move(comp));
        }
        basis.push_back(std::move(phi));
    }
    return basis;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
    return hom_basis(m, n).size();
}

std::size_t ext1_dim(const Representation& m, const Representation& n) {
    long long e = static_cast<long long>(hom_dim(m, n)) -
                  euler_form(m.q, m.dim_vector(), n.dim_vector());
    if (e < 0)
        throw std::logic_error("ext1_dim: negative value; quiver not hereditary-finite?");
    return static_cast<std::size_t>(e);
}

bool in_fac(const Representation& n, const Representation& x) {
    auto homs = hom_basis(x, n);
    for (int v = 0; v < n.q.size(); ++v) {
        if (n.dims[v] == 0)
            continue;
        // Trace at v = span of all columns of all phi_v.
        std::vector<Matrix> cols;
        for (const Morphism& phi : homs)
            cols.push_back(phi.comps[v]);
        Matrix stacked = hstack(cols.empty() ? std::vector<Matrix>{Matrix(n.dims[v], 0)} : cols,
                                n.dims[v]);
        if (rank(stacked) != static_cast<std::size_t>(n.dims[v]))
            return false;
    }
    return true;
}

std::vector<int> support(const Representation& m) {
    std::vector<int> s;
    for (int v = 0; v < m.q.size(); ++v)
        if (m.dims[v] != 0)
            s.push_back(v);
    return s;
}

Representation restrict_delete(const Representation& m, int x) {
    const Quiver& q = m.q;
    if (x < 0 || x >= q.size())
        throw std::invalid_argument("restrict_delete: no such vertex");
    Representation out;
    for (int v = 0; v < q.size(); ++v)
        if (v != x) {
            out.q.vertices.push_back(q.vertices[v]);
            out.dims.push_back(m.dims[v]);
        }
    auto reindex = [&](int v) { return v < x ? v : v - 1; };
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& [s, t] = q.arrows[a];
        if (s == x || t == x)
            continue;
        out.q.arrows.emplace_back(reindex(s), reindex(t));
        out.maps.push_back(m.maps[a]);
    }
    return out;
}

Representation extend_by_zero(const Representation& m_small, const Quiver& q_big, int x) {
    Representation probe = restrict_delete(zero_rep(q_big), x);
    if (!(probe.q == m_small.q))
        throw std::invalid_argument("extend_by_zero: quivers are not related by deleting x");

    Representation out = zero_rep(q_big);
    auto reindex = [&](int v) { return v < x ? v : v - 1; };
    for (int v = 0; v < q_big.size(); ++v)
        if (v != x)
            out.dims[v] = m_small.dims[reindex(v)];
    std::size_t small_a = 0;
    for (std::size_t a = 0; a < q_big.arrows.size(); ++a) {
        const auto& [s, t] = q_big.arrows[a];
        if (s == x || t == x) {
            out.maps[a] = Matrix(out.dims[t], out.dims[s]);
            continue;
        }
        out.maps[a] = m_small.maps[small_a++];
    }
    out.validate();
    return out;
}

} // namespace cpo
