#include "cluster_poset/cluster.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace cpo {

bool is_shifted(const APRoot& r) {
    return shifted_vertex(r) >= 0;
}

int shifted_vertex(const APRoot& r) {
    int pos = -1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == -1) {
            if (pos >= 0)
                return -1;
            pos = static_cast<int>(i);
        } else if (r[i] != 0) {
            return -1;
        }
    }
    return pos;
}

long long ext1_cluster(const Quiver& q, const APRoot& a, const APRoot& b) {
    int sa = shifted_vertex(a), sb = shifted_vertex(b);
    if (sa >= 0 && sb >= 0)
        return 0;
    if (sa >= 0)
        return b[sa]; // dim M(y) = Hom_Q(P_y, M)
    if (sb >= 0)
        return a[sb];
    Representation m = indecomposable_of_root(q, a);
    Representation n = indecomposable_of_root(q, b);
    return static_cast<long long>(ext1_dim(m, n)) + static_cast<long long>(ext1_dim(n, m));
}

namespace {

std::vector<APRoot> almost_positive_roots(const Quiver& q) {
    std::vector<APRoot> all = positive_roots(q);
    for (int y = 0; y < q.size(); ++y) {
        APRoot r(q.size(), 0);
        r[y] = -1;
        all.push_back(r);
    }
    std::sort(all.begin(), all.end());
    return all;
}

// Bron-Kerbosch with greedy pivoting; index sets kept sorted, so the
// output order is deterministic.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj,
                   std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (int u : p)
        if (static_cast<int>(std::count_if(p.begin(), p.end(),
                                           [&](int v) { return adj[u][v]; })) > best) {
            best = static_cast<int>(std::count_if(p.begin(), p.end(),
                                                  [&](int v) { return adj[u][v]; }));
            pivot = u;
        }
    for (int u : x) {
        int c = static_cast<int>(std::count_if(p.begin(), p.end(),
                                               [&](int v) { return adj[u][v]; }));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }

    std::vector<int> candidates;
    for (int v : p)
        if (pivot < 0 || !adj[pivot][v])
            candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (adj[v][w])
                p2.push_back(w);
        for (int w : x)
            if (adj[v][w])
                x2.push_back(w);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

} // namespace

std::vector<ClusterTilting> enumerate_cluster_tilting(const Quiver& q) {
    if (!classify_dynkin(q))
        throw std::invalid_argument("enumerate_cluster_tilting: quiver is not Dynkin");

    std::vector<APRoot> roots = almost_positive_roots(q);
    const int k = static_cast<int>(roots.size());
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            adj[i][j] = adj[j][i] = ext1_cluster(q, roots[i], roots[j]) == 0;

    std::vector<int> all(k);
    for (int i = 0; i < k; ++i)
        all[i] = i;
    std::vector<std::vector<int>> cliques;
    std::vector<int> r;
    bron_kerbosch(adj, r, all, {}, cliques);

    std::vector<ClusterTilting> out;
    for (const auto& c : cliques) {
        if (static_cast<int>(c.size()) != q.size())
            throw std::logic_error("enumerate_cluster_tilting: maximal clique of wrong size");
        ClusterTilting t;
        for (int i : c)
            t.push_back(roots[i]);
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClusterTilting mutate(const Quiver& q, const ClusterTilting& t, const APRoot& m) {
    auto it = std::find(t.begin(), t.end(), m);
    if (it == t.end())
        throw std::invalid_argument("mutate: summand not in object");
    ClusterTilting u = t;
    u.erase(std::find(u.begin(), u.end(), m));

    std::vector<APRoot> found;
    for (const APRoot& cand : almost_positive_roots(q)) {
        if (cand == m || std::find(u.begin(), u.end(), cand) != u.end())
            continue;
        bool ok = true;
        for (const APRoot& s : u)
            if (ext1_cluster(q, cand, s) != 0) {
                ok = false;
                break;
            }
        if (ok)
            found.push_back(cand);
    }
    if (found.size() != 1)
        throw std::logic_error("mutate: expected exactly one complement, found " +
                               std::to_string(found.size()));
    u.push_back(found[0]);
    std::sort(u.begin(), u.end());
    return u;
}

Fingerprint fac_fingerprint(const Quiver& q, const ClusterTilting& t) {
    std::vector<Representation> modules;
    for (const APRoot& r : t)
        if (!is_shifted(r))
            modules.push_back(indecomposable_of_root(q, r));
    if (modules.empty())
        return {};
    Representation that = direct_sum(q, modules);

    Fingerprint fp;
    for (const DimVec& d : positive_roots(q))
        if (in_fac(indecomposable_of_root(q, d), that))
            fp.push_back(d);
    std::sort(fp.begin(), fp.end()); // plain lexicographic, for set inclusion
    return fp;
}

bool fingerprint_leq(const Fingerprint& a, const Fingerprint& b) {
    // T <= T' iff fac T contains fac T'.
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

bool leq(const Quiver& q, const ClusterTilting& t, const ClusterTilting& t2) {
    return fingerprint_leq(fac_fingerprint(q, t), fac_fingerprint(q, t2));
}

std::size_t TiltingPoset::index_of(const ClusterTilting& t) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), t);
    if (it == objects.end() || *it != t)
        throw std::invalid_argument("TiltingPoset: object not found");
    return static_cast<std::size_t>(it - objects.begin());
}

TiltingPoset tilting_poset(const Quiver& q) {
    TiltingPoset p;
    p.q = q;
    p.objects = enumerate_cluster_tilting(q);
    for (const ClusterTilting& t : p.objects)
        p.fingerprints.push_back(fac_fingerprint(q, t));

    const std::size_t n = p.objects.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p.fingerprints[i] == p.fingerprints[j])
                throw std::logic_error("tilting_poset: fingerprints not injective");

    p.le.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.le[i][j] = fingerprint_leq(p.fingerprints[i], p.fingerprints[j]);
    return p;
}

DimVec projective_root(const Quiver& q, int x) {
    return standard_rep(q, StandardKind::Projective, x).dim_vector();
}

bool contains_summand(const Quiver& q, const ClusterTilting& t, SubsetKind kind, int x) {
    APRoot want;
    if (kind == SubsetKind::Px) {
        want = projective_root(q, x);
    } else {
        want.assign(q.size(), 0);
        want[x] = -1;
    }
    return std::find(t.begin(), t.end(), want) != t.end();
}

std::vector<ClusterTilting> subset_containing(const Quiver& q, SubsetKind kind, int x) {
    std::vector<ClusterTilting> out;
    for (const ClusterTilting& t : enumerate_cluster_tilting(q))
        if (contains_summand(q, t, kind, x))
            out.push_back(t);
    return out;
}

ClusterTilting f_map(const Quiver& q, int x, const ClusterTilting& t) {
    if (!is_sink(q, x))
        throw std::invalid_argument("f_map: vertex " + q.vertices[x] + " is not a sink");
    APRoot sx = unit_vector(q, x); // P_x = S_x at a sink
    if (std::find(t.begin(), t.end(), sx) == t.end())
        throw std::invalid_argument("f_map: object does not contain S_x");
    return mutate(q, t, sx);
}

ClusterTilting g_map(const Quiver& q, int x, const ClusterTilting& t) {
    if (!is_source(q, x))
        throw std::invalid_argument("g_map: vertex " + q.vertices[x] + " is not a source");
    APRoot px(q.size(), 0);
    px[x] = -1;
    if (std::find(t.begin(), t.end(), px) == t.end())
        throw std::invalid_argument("g_map: object does not contain P_x[1]");
    return mutate(q, t, px);
}

std::string render_root(const APRoot& r) {
    return nlohmann::json(r).dump();
}

std::string render_tilting(const ClusterTilting& t) {
    return nlohmann::json(t).dump();
}

} // namespace cpo
