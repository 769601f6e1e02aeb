#include "cluster_poset/verify.hpp"

#include "cluster_poset/functors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cpo {

FinitePoset to_finite_poset(const TiltingPoset& p, const std::string& prefix) {
    FinitePoset out;
    for (const ClusterTilting& t : p.objects)
        out.elements.push_back(prefix + render_tilting(t));
    out.le = p.le;
    out.validate();
    return out;
}

FinitePoset subposet(const FinitePoset& p, const std::vector<std::size_t>& idx) {
    FinitePoset out;
    out.le.assign(idx.size(), std::vector<bool>(idx.size(), false));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.elements.push_back(p.elements[idx[i]]);
        for (std::size_t j = 0; j < idx.size(); ++j)
            out.le[i][j] = p.leq(idx[i], idx[j]);
    }
    return out;
}

namespace {

struct Split {
    std::vector<std::size_t> part, comp;
};

Split split_by(const TiltingPoset& p, SubsetKind kind, int x) {
    Split s;
    for (std::size_t i = 0; i < p.objects.size(); ++i)
        (contains_summand(p.q, p.objects[i], kind, x) ? s.part : s.comp).push_back(i);
    return s;
}

} // namespace

nlohmann::json verify_flipflop(const Quiver& q, int x) {
    if (!classify_dynkin(q))
        throw std::invalid_argument("verify_flipflop: quiver is not Dynkin");
    if (!is_sink(q, x))
        throw std::invalid_argument("verify_flipflop: vertex " + q.vertices[x] +
                                    " is not a sink");

    nlohmann::json checks = nlohmann::json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok) {
        checks.push_back({{"check", name}, {"status", ok ? "pass" : "fail"}});
        all_ok = all_ok && ok;
    };

    // Plus side on Q.
    TiltingPoset pos = tilting_poset(q);
    FinitePoset whole = to_finite_poset(pos);
    Split s = split_by(pos, SubsetKind::Px, x);
    FinitePoset xp = subposet(whole, s.part);
    FinitePoset yp = subposet(whole, s.comp);
    std::vector<std::size_t> f;
    for (std::size_t i : s.part) {
        ClusterTilting image = f_map(q, x, pos.objects[i]);
        std::size_t target = pos.index_of(image);
        f.push_back(std::find(s.comp.begin(), s.comp.end(), target) - s.comp.begin());
    }
    FinitePoset rebuilt = flip_flop(xp, yp, f, FlipFlopSign::Plus);
    record("plus_rebuild_isomorphic", are_isomorphic(rebuilt, whole));

    // Minus side on the reflected quiver.
    const Quiver qp = reflect(q, x);
    TiltingPoset pos2 = tilting_poset(qp);
    FinitePoset whole2 = to_finite_poset(pos2);
    Split s2 = split_by(pos2, SubsetKind::PxShift, x);
    FinitePoset xp2 = subposet(whole2, s2.part);
    FinitePoset yp2 = subposet(whole2, s2.comp);
    std::vector<std::size_t> g;
    for (std::size_t i : s2.part) {
        ClusterTilting image = g_map(qp, x, pos2.objects[i]);
        std::size_t target = pos2.index_of(image);
        g.push_back(std::find(s2.comp.begin(), s2.comp.end(), target) - s2.comp.begin());
    }
    FinitePoset rebuilt2 = flip_flop(xp2, yp2, g, FlipFlopSign::Minus);
    record("minus_rebuild_isomorphic", are_isomorphic(rebuilt2, whole2));

    return nlohmann::json{{"vertex", q.vertices[x]},
                          {"checks", checks},
                          {"passed", all_ok}};
}

namespace {

using ExtCache = std::map<std::pair<DimVec, DimVec>, long long>;

long long mod_ext(const Quiver& q, ExtCache& cache, const DimVec& a, const DimVec& b) {
    auto it = cache.find({a, b});
    if (it != cache.end())
        return it->second;
    long long v = static_cast<long long>(
        ext1_dim(indecomposable_of_root(q, a), indecomposable_of_root(q, b)));
    cache[{a, b}] = v;
    return v;
}

bool rigid_set(const Quiver& q, ExtCache& cache, const std::vector<DimVec>& roots,
               const std::vector<std::size_t>& subset) {
    for (std::size_t i : subset)
        for (std::size_t j : subset)
            if (mod_ext(q, cache, roots[i], roots[j]) != 0)
                return false;
    return true;
}

} // namespace

nlohmann::json lemma_suite(const Quiver& q) {
    if (!classify_dynkin(q))
        throw std::invalid_argument("lemma_suite: quiver is not Dynkin");

    const int n = q.size();
    TiltingPoset p = tilting_poset(q);
    const std::size_t count = p.objects.size();
    std::vector<DimVec> roots = positive_roots(q);

    nlohmann::json checks = nlohmann::json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, nlohmann::json ce = {}) {
        nlohmann::json c{{"check", name}, {"status", ok ? "pass" : "fail"}};
        if (!ok)
            c["counterexample"] = ce;
        checks.push_back(c);
        all_ok = all_ok && ok;
    };
    auto in_fp = [&](std::size_t i, const DimVec& d) {
        const Fingerprint& fp = p.fingerprints[i];
        return std::binary_search(fp.begin(), fp.end(), d);
    };

    // Membership: T contains P_x iff dim P_x lies in the fingerprint.
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x = 0; x < n && ok; ++x) {
            DimVec px = projective_root(q, x);
            for (std::size_t i = 0; i < count; ++i)
                if (contains_summand(q, p.objects[i], SubsetKind::Px, x) != in_fp(i, px)) {
                    ok = false;
                    ce = {{"vertex", q.vertices[x]}, {"T", render_tilting(p.objects[i])}};
                    break;
                }
        }
        record("cTxPx_membership", ok, ce);
    }

    // Down-closure of the subsets containing P_x.
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x = 0; x < n && ok; ++x)
            for (std::size_t i = 0; i < count && ok; ++i) {
                if (!contains_summand(q, p.objects[i], SubsetKind::Px, x))
                    continue;
                for (std::size_t j = 0; j < count; ++j)
                    if (p.leq_idx(j, i) &&
                        !contains_summand(q, p.objects[j], SubsetKind::Px, x)) {
                        ok = false;
                        ce = {{"vertex", q.vertices[x]},
                              {"T", render_tilting(p.objects[i])},
                              {"T2", render_tilting(p.objects[j])}};
                        break;
                    }
            }
        record("cTxclose_down_closure", ok, ce);
    }

    // Mutation at P_x goes strictly up.
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x = 0; x < n && ok; ++x) {
            DimVec px = projective_root(q, x);
            for (std::size_t i = 0; i < count; ++i) {
                if (std::find(p.objects[i].begin(), p.objects[i].end(), px) ==
                    p.objects[i].end())
                    continue;
                std::size_t j = p.index_of(mutate(q, p.objects[i], px));
                if (!p.leq_idx(i, j) || i == j) {
                    ok = false;
                    ce = {{"vertex", q.vertices[x]}, {"T", render_tilting(p.objects[i])}};
                    break;
                }
            }
        }
        record("fTgeT_strictly_up", ok, ce);
    }

    // At a sink, mutation at S_x drops exactly S_x from the fingerprint.
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x : terminal_vertices(q, TerminalKind::Sink)) {
            DimVec ex = unit_vector(q, x);
            for (std::size_t i = 0; i < count; ++i) {
                if (std::find(p.objects[i].begin(), p.objects[i].end(), ex) ==
                    p.objects[i].end())
                    continue;
                std::size_t j = p.index_of(f_map(q, x, p.objects[i]));
                Fingerprint expect;
                for (const DimVec& d : p.fingerprints[i])
                    if (d != ex)
                        expect.push_back(d);
                if (p.fingerprints[j] != expect) {
                    ok = false;
                    ce = {{"vertex", q.vertices[x]}, {"T", render_tilting(p.objects[i])}};
                }
            }
        }
        record("facfT_fingerprint_drop", ok, ce);
    }

    // Sandwich at a sink: T in Tx, T' outside, T' > T implies T' >= f(T).
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x : terminal_vertices(q, TerminalKind::Sink)) {
            DimVec ex = unit_vector(q, x);
            for (std::size_t i = 0; i < count; ++i) {
                if (std::find(p.objects[i].begin(), p.objects[i].end(), ex) ==
                    p.objects[i].end())
                    continue;
                std::size_t fi = p.index_of(f_map(q, x, p.objects[i]));
                for (std::size_t j = 0; j < count; ++j) {
                    if (contains_summand(q, p.objects[j], SubsetKind::Px, x))
                        continue;
                    if (p.leq_idx(i, j) && i != j && !p.leq_idx(fi, j)) {
                        ok = false;
                        ce = {{"vertex", q.vertices[x]},
                              {"T", render_tilting(p.objects[i])},
                              {"T2", render_tilting(p.objects[j])}};
                    }
                }
            }
        }
        record("fTgeuniq_sandwich", ok, ce);
    }

    // Up-closure of the subsets containing P_x[1].
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x = 0; x < n && ok; ++x)
            for (std::size_t i = 0; i < count && ok; ++i) {
                if (!contains_summand(q, p.objects[i], SubsetKind::PxShift, x))
                    continue;
                for (std::size_t j = 0; j < count; ++j)
                    if (p.leq_idx(i, j) &&
                        !contains_summand(q, p.objects[j], SubsetKind::PxShift, x)) {
                        ok = false;
                        ce = {{"vertex", q.vertices[x]},
                              {"T", render_tilting(p.objects[i])},
                              {"T2", render_tilting(p.objects[j])}};
                        break;
                    }
            }
        record("cTxopen_up_closure", ok, ce);
    }

    // Mutation at P_x[1] goes strictly down.
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x = 0; x < n && ok; ++x) {
            APRoot px(n, 0);
            px[x] = -1;
            for (std::size_t i = 0; i < count; ++i) {
                if (std::find(p.objects[i].begin(), p.objects[i].end(), px) ==
                    p.objects[i].end())
                    continue;
                std::size_t j = p.index_of(mutate(q, p.objects[i], px));
                if (!p.leq_idx(j, i) || i == j) {
                    ok = false;
                    ce = {{"vertex", q.vertices[x]}, {"T", render_tilting(p.objects[i])}};
                    break;
                }
            }
        }
        record("gTltT_strictly_down", ok, ce);
    }

    // Sandwich at a source: T' < T outside the shifted subset implies
    // T' <= g(T).
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x : terminal_vertices(q, TerminalKind::Source)) {
            for (std::size_t i = 0; i < count; ++i) {
                if (!contains_summand(q, p.objects[i], SubsetKind::PxShift, x))
                    continue;
                std::size_t gi = p.index_of(g_map(q, x, p.objects[i]));
                for (std::size_t j = 0; j < count; ++j) {
                    if (contains_summand(q, p.objects[j], SubsetKind::PxShift, x))
                        continue;
                    if (p.leq_idx(j, i) && i != j && !p.leq_idx(j, gi)) {
                        ok = false;
                        ce = {{"vertex", q.vertices[x]},
                              {"T", render_tilting(p.objects[i])},
                              {"T2", render_tilting(p.objects[j])}};
                    }
                }
            }
        }
        record("gTleuniq_sandwich", ok, ce);
    }

    // Source simple: for a source x, S_x in fac T iff the module part of T
    // is supported at x.
    {
        bool ok = true;
        nlohmann::json ce;
        for (int x : terminal_vertices(q, TerminalKind::Source)) {
            DimVec ex = unit_vector(q, x);
            for (std::size_t i = 0; i < count; ++i) {
                bool supported = false;
                for (const APRoot& r : p.objects[i])
                    if (!is_shifted(r) && r[x] > 0)
                        supported = true;
                if (in_fp(i, ex) != supported) {
                    ok = false;
                    ce = {{"vertex", q.vertices[x]}, {"T", render_tilting(p.objects[i])}};
                }
            }
        }
        record("source_simple_support", ok, ce);
    }

    // Reflection bijection lemmas at every sink: order reflection within
    // each part plus order isomorphism on both parts. Cross-part exchange
    // pairs reverse (T < f(T) but rho(f(T)) = g(rho(T)) < rho(T)), so the
    // reflection statement is only meaningful part-wise.
    {
        bool refl_ok = true, part_ok = true, comp_ok = true;
        nlohmann::json refl_ce, part_ce, comp_ce;
        for (int x : terminal_vertices(q, TerminalKind::Sink)) {
            const Quiver qp = reflect(q, x);
            TiltingPoset p2 = tilting_poset(qp);
            std::vector<std::size_t> image(count);
            for (std::size_t i = 0; i < count; ++i)
                image[i] = p2.index_of(rho(q, x, p.objects[i]));
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t j = 0; j < count; ++j) {
                    bool same_part =
                        contains_summand(q, p.objects[i], SubsetKind::Px, x) ==
                        contains_summand(q, p.objects[j], SubsetKind::Px, x);
                    if (same_part && p2.leq_idx(image[i], image[j]) &&
                        !p.leq_idx(i, j)) {
                        refl_ok = false;
                        refl_ce = {{"vertex", q.vertices[x]},
                                   {"T", render_tilting(p.objects[i])},
                                   {"T2", render_tilting(p.objects[j])}};
                    }
                    bool in_part_i = contains_summand(q, p.objects[i], SubsetKind::Px, x);
                    bool in_part_j = contains_summand(q, p.objects[j], SubsetKind::Px, x);
                    if (in_part_i && in_part_j &&
                        p.leq_idx(i, j) != p2.leq_idx(image[i], image[j])) {
                        part_ok = false;
                        part_ce = {{"vertex", q.vertices[x]},
                                   {"T", render_tilting(p.objects[i])},
                                   {"T2", render_tilting(p.objects[j])}};
                    }
                    if (!in_part_i && !in_part_j &&
                        p.leq_idx(i, j) != p2.leq_idx(image[i], image[j])) {
                        comp_ok = false;
                        comp_ce = {{"vertex", q.vertices[x]},
                                   {"T", render_tilting(p.objects[i])},
                                   {"T2", render_tilting(p.objects[j])}};
                    }
                }
        }
        record("rhorder_order_reflection", refl_ok, refl_ce);
        record("rhocTx_order_iso", part_ok, part_ce);
        record("rhocTxcomp_order_iso", comp_ok, comp_ce);
    }

    // Sincere-complement count and the torsion-class complement lemma over
    // all almost complete tilting modules.
    {
        bool sincere_ok = true, torsion_ok = true;
        nlohmann::json sincere_ce, torsion_ce;
        ExtCache cache;
        const std::size_t nroots = roots.size();
        std::vector<std::size_t> subset;
        std::function<void(std::size_t)> scan = [&](std::size_t start) {
            if (static_cast<int>(subset.size()) == n - 1) {
                if (!rigid_set(q, cache, roots, subset))
                    return;
                std::vector<DimVec> complements;
                for (std::size_t c = 0; c < nroots; ++c) {
                    if (std::find(subset.begin(), subset.end(), c) != subset.end())
                        continue;
                    bool ok = mod_ext(q, cache, roots[c], roots[c]) == 0;
                    for (std::size_t i : subset)
                        ok = ok && mod_ext(q, cache, roots[c], roots[i]) == 0 &&
                             mod_ext(q, cache, roots[i], roots[c]) == 0;
                    if (ok)
                        complements.push_back(roots[c]);
                }
                DimVec total(n, 0);
                for (std::size_t i : subset)
                    for (int v = 0; v < n; ++v)
                        total[v] += roots[i][v];
                bool sincere = std::all_of(total.begin(), total.end(),
                                           [](int v) { return v > 0; });
                if (complements.size() != (sincere ? 2u : 1u)) {
                    sincere_ok = false;
                    sincere_ce = {{"U_size", subset.size()},
                                  {"complements", complements.size()}};
                }
                if (!sincere && complements.size() == 1) {
                    // Fingerprint of fac U.
                    std::vector<Representation> parts;
                    for (std::size_t i : subset)
                        parts.push_back(indecomposable_of_root(q, roots[i]));
                    Representation u = direct_sum(q, parts);
                    Fingerprint fac_u;
                    for (const DimVec& d : roots)
                        if (in_fac(indecomposable_of_root(q, d), u))
                            fac_u.push_back(d);
                    for (int x = 0; x < n; ++x) {
                        if (total[x] != 0)
                            continue;
                        DimVec ex = unit_vector(q, x);
                        for (std::size_t t = 0; t < count; ++t) {
                            if (!fingerprint_leq(p.fingerprints[t], fac_u) ||
                                !in_fp(t, ex))
                                continue;
                            if (!in_fp(t, complements[0])) {
                                torsion_ok = false;
                                torsion_ce = {{"vertex", q.vertices[x]},
                                              {"T", render_tilting(p.objects[t])}};
                            }
                        }
                    }
                }
                return;
            }
            for (std::size_t c = start; c < nroots; ++c) {
                subset.push_back(c);
                if (rigid_set(q, cache, roots, subset))
                    scan(c + 1);
                subset.pop_back();
            }
        };
        if (n >= 2)
            scan(0);
        record("sincere_complement_count", sincere_ok, sincere_ce);
        record("UMtorsion_complement_in_class", torsion_ok, torsion_ce);
    }

    return nlohmann::json{{"quiver", q.key()}, {"checks", checks}, {"passed", all_ok}};
}

} // namespace cpo
