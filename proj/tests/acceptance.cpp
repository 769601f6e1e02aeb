// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include "cluster_poset/cluster.hpp"
#include "cluster_poset/functors.hpp"
#include "cluster_poset/poset.hpp"
#include "cluster_poset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace cpo;

namespace {

Quiver path_quiver(int n, unsigned mask) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> as;
    for (int i = 1; i <= n; ++i)
        vs.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) {
        std::string a = std::to_string(i), b = std::to_string(i + 1);
        if (mask >> (i - 1) & 1)
            std::swap(a, b);
        as.emplace_back(a, b);
    }
    return make_quiver(vs, as);
}

Quiver d4_quiver(unsigned mask) {
    std::vector<std::pair<std::string, std::string>> as;
    const char* arms[] = {"1", "3", "4"};
    for (int e = 0; e < 3; ++e) {
        std::string a = arms[e], b = "2";
        if (mask >> e & 1)
            std::swap(a, b);
        as.emplace_back(a, b);
    }
    return make_quiver({"1", "2", "3", "4"}, as);
}

std::vector<Quiver> all_orientations(int max_rank, int min_rank = 1) {
    std::vector<Quiver> out;
    for (int n = min_rank; n <= max_rank; ++n)
        for (unsigned mask = 0; mask < (n > 1 ? 1u << (n - 1) : 1u); ++mask)
            out.push_back(path_quiver(n, mask));
    if (max_rank >= 4)
        for (unsigned mask = 0; mask < 8; ++mask)
            out.push_back(d4_quiver(mask));
    return out;
}

std::set<std::string> object_keys(const Quiver& q) {
    std::set<std::string> keys;
    for (const ClusterTilting& t : enumerate_cluster_tilting(q))
        keys.insert(render_tilting(t));
    return keys;
}

std::string key(std::vector<APRoot> roots) {
    std::sort(roots.begin(), roots.end());
    return render_tilting(roots);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

// 1. Known A3 posets: both quivers have exactly these 14 objects.
bool criterion_golden_objects() {
    auto start = std::chrono::steady_clock::now();
    std::set<std::string> top_expect{
        key({{0, 1, 0}, {0, 1, 1}, {1, 1, 1}}),
        key({{0, 1, 0}, {1, 1, 0}, {1, 1, 1}}),
        key({{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}),
        key({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}),
        key({{0, 1, 0}, {1, 1, 0}, {0, 0, -1}}),
        key({{0, 0, 1}, {1, 0, 0}, {1, 1, 1}}),
        key({{1, 0, 0}, {1, 1, 0}, {0, 0, -1}}),
        key({{0, 1, 0}, {0, 1, 1}, {-1, 0, 0}}),
        key({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
        key({{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}}),
        key({{0, 0, 1}, {1, 0, 0}, {0, -1, 0}}),
        key({{0, 0, 1}, {0, 1, 1}, {-1, 0, 0}}),
        key({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
        key({{0, 0, 1}, {0, -1, 0}, {-1, 0, 0}}),
    };
    std::set<std::string> bottom_expect{
        key({{0, 1, 1}, {0, 1, 0}, {1, 1, 0}}),
        key({{0, 1, 1}, {1, 1, 1}, {1, 1, 0}}),
        key({{0, 0, -1}, {0, 1, 0}, {1, 1, 0}}),
        key({{1, 0, 0}, {1, 1, 1}, {1, 1, 0}}),
        key({{0, 1, 1}, {1, 1, 1}, {0, 0, 1}}),
        key({{0, 0, -1}, {1, 0, 0}, {1, 1, 0}}),
        key({{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}),
        key({{0, 1, 1}, {0, 1, 0}, {-1, 0, 0}}),
        key({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}),
        key({{0, 1, 1}, {0, 0, 1}, {-1, 0, 0}}),
        key({{0, 0, -1}, {1, 0, 0}, {0, -1, 0}}),
        key({{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}),
        key({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}),
        key({{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}}),
    };
    Quiver q = path_quiver(3, 0);  // 1->2->3
    Quiver qp = reflect(q, 2);     // 1->2<-3
    bool ok = object_keys(q) == top_expect && object_keys(qp) == bottom_expect &&
              top_expect.size() == 14 && bottom_expect.size() == 14;
    double t = seconds_since(start);
    ok = ok && t < 5.0;
    std::printf("[%s] 1. A3 reference posets: 14 + 14 objects match (%.2fs, limit 5s)\n",
                ok ? "PASS" : "FAIL", t);
    return ok;
}

// 2. Sizes of the distinguished subsets at vertex 3.
bool criterion_bold_counts() {
    Quiver q = path_quiver(3, 0);
    Quiver qp = reflect(q, 2);
    std::size_t a = subset_containing(q, SubsetKind::Px, 2).size();
    std::size_t b = subset_containing(qp, SubsetKind::PxShift, 2).size();
    bool ok = a == 5 && b == 5;
    std::printf("[%s] 2. distinguished subsets: |T^3| = %zu, |T^3[1]| = %zu (want 5, 5)\n",
                ok ? "PASS" : "FAIL", a, b);
    return ok;
}

// 3. Flip-flop rebuild for every orientation of A2..A4, D4 and every sink.
bool criterion_flipflop() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    int runs = 0;
    for (const Quiver& q : all_orientations(4, 2))
        for (int x : terminal_vertices(q, TerminalKind::Sink)) {
            ok = ok && verify_flipflop(q, x)["passed"] == true;
            ++runs;
        }
    double t = seconds_since(start);
    ok = ok && t < 120.0;
    std::printf("[%s] 3. flip-flop rebuilds isomorphic: %d sink runs (%.2fs, limit 120s)\n",
                ok ? "PASS" : "FAIL", runs, t);
    return ok;
}

// 4. rho(f(T)) = g(rho(T)) on the whole part, same quiver set.
bool criterion_square() {
    bool ok = true;
    int pairs = 0;
    for (const Quiver& q : all_orientations(4, 2))
        for (int x : terminal_vertices(q, TerminalKind::Sink)) {
            Quiver qp = reflect(q, x);
            for (const ClusterTilting& t : subset_containing(q, SubsetKind::Px, x)) {
                ok = ok && rho(q, x, f_map(q, x, t)) == g_map(qp, x, rho(q, x, t));
                ++pairs;
            }
        }
    std::printf("[%s] 4. commuting square rho.f = g.rho: %d objects checked\n",
                ok ? "PASS" : "FAIL", pairs);
    return ok;
}

// 5. Structural lemma suite over every Dynkin quiver of rank <= 4.
bool criterion_lemmas() {
    bool ok = true;
    int suites = 0;
    std::string first_fail;
    for (const Quiver& q : all_orientations(4)) {
        nlohmann::json rep = lemma_suite(q);
        if (rep["passed"] != true && first_fail.empty())
            first_fail = rep.dump();
        ok = ok && rep["passed"] == true;
        ++suites;
    }
    std::printf("[%s] 5. lemma suite: %d quivers, zero violations%s%s\n",
                ok ? "PASS" : "FAIL", suites, first_fail.empty() ? "" : " first: ",
                first_fail.c_str());
    return ok;
}

// 6. Enumeration totals against the cluster-number formula
// prod_i (e_i + h + 1) / (e_i + 1), computed here from the exponents.
bool criterion_counts() {
    auto formula = [](const std::vector<int>& exponents, int h) {
        long long num = 1, den = 1;
        for (int e : exponents) {
            num *= e + h + 1;
            den *= e + 1;
        }
        return num / den;
    };
    struct Case {
        Quiver q;
        std::vector<int> exponents;
        int h;
    };
    std::vector<Case> cases{
        {path_quiver(2, 0), {1, 2}, 3},
        {path_quiver(3, 0), {1, 2, 3}, 4},
        {path_quiver(4, 0), {1, 2, 3, 4}, 5},
        {d4_quiver(0), {1, 3, 3, 5}, 6},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        long long want = formula(c.exponents, c.h);
        long long got = static_cast<long long>(enumerate_cluster_tilting(c.q).size());
        detail += (detail.empty() ? "" : ", ") + std::to_string(got) + "/" +
                  std::to_string(want);
        ok = ok && got == want;
    }
    std::printf("[%s] 6. counts vs cluster-number formula (got/want): %s\n",
                ok ? "PASS" : "FAIL", detail.c_str());
    return ok;
}

// 7. Linear A_n tilting poset is a Tamari lattice.
bool criterion_tamari() {
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 4; ++n) {
        FinitePoset tp = to_finite_poset(tilting_poset(path_quiver(n, 0)));
        FinitePoset tam = tamari(n + 1);
        bool iso = tp.size() == tam.size() && are_isomorphic(tp, tam);
        detail += (detail.empty() ? "A" : ", A") + std::to_string(n) + ":" +
                  std::to_string(tp.size()) + (iso ? " iso" : " NOT iso");
        ok = ok && iso;
    }
    std::printf("[%s] 7. Tamari oracle: %s\n", ok ? "PASS" : "FAIL", detail.c_str());
    return ok;
}

// 8. Coxeter polynomial of the incidence algebra agrees across all
// orientations of A3 and A4.
bool criterion_coxeter() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n : {3, 4}) {
        IntPoly first;
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            IntPoly p =
                coxeter_polynomial(to_finite_poset(tilting_poset(path_quiver(n, mask))));
            if (mask == 0)
                first = p;
            ok = ok && p == first;
        }
    }
    double t = seconds_since(start);
    ok = ok && t < 300.0;
    std::printf(
        "[%s] 8. Coxeter polynomials equal across A3 and A4 orientations (%.2fs, limit 300s)\n",
        ok ? "PASS" : "FAIL", t);
    return ok;
}

// Independent extension-space dimension: cocycle space modulo coboundaries.
// dim Ext^1(M, N) = sum_{a:x->y} dim M(x) * dim N(y) - rank D, where
// D sends (phi_x)_x to (N(a) phi_x - phi_y M(a))_{a:x->y}.
std::size_t ext1_oracle(const Representation& m, const Representation& n) {
    const Quiver& q = m.q;
    std::size_t dom = 0, cod = 0;
    std::vector<std::size_t> voff(q.size() + 1), aoff(q.arrows.size() + 1);
    for (int v = 0; v < q.size(); ++v) {
        voff[v] = dom;
        dom += static_cast<std::size_t>(m.dims[v]) * n.dims[v];
    }
    voff[q.size()] = dom;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        aoff[a] = cod;
        cod += static_cast<std::size_t>(m.dims[q.arrows[a].first]) *
               n.dims[q.arrows[a].second];
    }
    aoff[q.arrows.size()] = cod;

    Matrix d(cod, dom);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        auto [x, y] = q.arrows[a];
        // Entry (i, j) of phi_x is column voff[x] + j * dims + i, matrices
        // flattened column by column.
        for (int i = 0; i < n.dims[y]; ++i)
            for (int j = 0; j < m.dims[x]; ++j) {
                std::size_t row = aoff[a] + static_cast<std::size_t>(j) * n.dims[y] + i;
                // N(a) phi_x part.
                for (int k = 0; k < n.dims[x]; ++k)
                    d.at(row, voff[x] + static_cast<std::size_t>(j) * n.dims[x] + k) +=
                        n.maps[a].at(i, k);
                // -phi_y M(a) part.
                for (int k = 0; k < m.dims[y]; ++k)
                    d.at(row, voff[y] + static_cast<std::size_t>(k) * n.dims[y] + i) -=
                        m.maps[a].at(k, j);
            }
    }
    return cod - rank(d);
}

// 9. ext1_dim against the oracle, and the projective hom formula.
bool criterion_kernels() {
    bool ok = true;
    int checks = 0;
    for (const Quiver& q : all_orientations(3)) {
        auto roots = positive_roots(q);
        for (const DimVec& a : roots)
            for (const DimVec& b : roots) {
                Representation m = indecomposable_of_root(q, a);
                Representation n = indecomposable_of_root(q, b);
                ok = ok && ext1_dim(m, n) == ext1_oracle(m, n);
                ++checks;
            }
        for (const DimVec& d : roots) {
            Representation n = indecomposable_of_root(q, d);
            for (int x = 0; x < q.size(); ++x) {
                ok = ok && hom_dim(standard_rep(q, StandardKind::Projective, x), n) ==
                               static_cast<std::size_t>(d[x]);
                ++checks;
            }
        }
    }
    std::printf("[%s] 9. ext/hom kernels vs independent oracle: %d comparisons\n",
                ok ? "PASS" : "FAIL", checks);
    return ok;
}

} // namespace

int main() {
    int failures = 0;
    failures += !criterion_golden_objects();
    failures += !criterion_bold_counts();
    failures += !criterion_flipflop();
    failures += !criterion_square();
    failures += !criterion_lemmas();
    failures += !criterion_counts();
    failures += !criterion_tamari();
    failures += !criterion_coxeter();
    failures += !criterion_kernels();
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
