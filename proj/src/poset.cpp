#include "cluster_poset/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cpo {

void FinitePoset::validate() const {
    const std::size_t n = size();
    if (le.size() != n)
        throw std::invalid_argument("poset: relation size mismatch");
    if (std::set<std::string>(elements.begin(), elements.end()).size() != n)
        throw std::invalid_argument("poset: duplicate element keys");
    for (std::size_t i = 0; i < n; ++i) {
        if (le[i].size() != n)
            throw std::invalid_argument("poset: relation size mismatch");
        if (!le[i][i])
            throw std::invalid_argument("poset: not reflexive");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && le[i][j] && le[j][i])
                throw std::invalid_argument("poset: not antisymmetric");
            if (le[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (le[j][k] && !le[i][k])
                        throw std::invalid_argument("poset: not transitive");
        }
}

FinitePoset chain(std::size_t n) {
    FinitePoset p;
    for (std::size_t i = 0; i < n; ++i)
        p.elements.push_back("c" + std::to_string(i));
    p.le.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            p.le[i][j] = true;
    return p;
}

FinitePoset antichain(std::size_t n) {
    FinitePoset p;
    for (std::size_t i = 0; i < n; ++i)
        p.elements.push_back("a" + std::to_string(i));
    p.le.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        p.le[i][i] = true;
    return p;
}

bool is_order_preserving(const FinitePoset& x, const FinitePoset& y,
                         const std::vector<std::size_t>& f) {
    if (f.size() != x.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x.leq(i, j) && !y.leq(f[i], f[j]))
                return false;
    return true;
}

namespace {

void transitive_close(std::vector<std::vector<bool>>& rel) {
    const std::size_t n = rel.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel[k][j])
                        rel[i][j] = true;
}

} // namespace

FinitePoset flip_flop(const FinitePoset& x, const FinitePoset& y,
                      const std::vector<std::size_t>& f, FlipFlopSign sign) {
    if (!is_order_preserving(x, y, f))
        throw std::invalid_argument("flip_flop: map is not order preserving");

    const std::size_t nx = x.size(), ny = y.size(), n = nx + ny;
    FinitePoset p;
    p.elements = x.elements;
    p.elements.insert(p.elements.end(), y.elements.begin(), y.elements.end());
    p.le.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nx; ++j)
            p.le[i][j] = x.leq(i, j);
    for (std::size_t i = 0; i < ny; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            p.le[nx + i][nx + j] = y.leq(i, j);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            if (sign == FlipFlopSign::Plus)
                p.le[i][nx + j] = y.leq(f[i], j);
            else
                p.le[nx + j][i] = y.leq(j, f[i]);
        }

    // The rule is already transitive when f is order preserving; closing
    // must therefore add nothing.
    auto closed = p.le;
    transitive_close(closed);
    if (closed != p.le)
        throw std::logic_error("flip_flop: closure added relations beyond the rule");
    p.validate();
    return p;
}

namespace {

// Joint invariant refinement: elements of both posets get class ids that
// are stable under the relation pattern against all classes.
std::pair<std::vector<int>, std::vector<int>> refine_classes(const FinitePoset& p,
                                                             const FinitePoset& p2) {
    const std::size_t n = p.size(), m = p2.size();
    std::vector<int> ca(n, 0), cb(m, 0);
    std::size_t nclasses = 1;
    for (int round = 0; round < static_cast<int>(n + m) + 1; ++round) {
        using Sig = std::vector<int>;
        auto signature = [&](const FinitePoset& q, const std::vector<int>& cls,
                             std::size_t i) {
            Sig s{cls[i]};
            std::vector<int> down, up;
            for (std::size_t k = 0; k < q.size(); ++k) {
                if (k == i)
                    continue;
                if (q.leq(k, i))
                    down.push_back(cls[k]);
                if (q.leq(i, k))
                    up.push_back(cls[k]);
            }
            std::sort(down.begin(), down.end());
            std::sort(up.begin(), up.end());
            s.push_back(-1);
            s.insert(s.end(), down.begin(), down.end());
            s.push_back(-2);
            s.insert(s.end(), up.begin(), up.end());
            return s;
        };
        std::map<Sig, int> ids;
        std::vector<int> ca2(n), cb2(m);
        for (std::size_t i = 0; i < n; ++i) {
            auto s = signature(p, ca, i);
            auto [it, ok] = ids.emplace(s, static_cast<int>(ids.size()));
            ca2[i] = it->second;
        }
        for (std::size_t i = 0; i < m; ++i) {
            auto s = signature(p2, cb, i);
            auto [it, ok] = ids.emplace(s, static_cast<int>(ids.size()));
            cb2[i] = it->second;
        }
        if (ids.size() == nclasses && ca2 == ca && cb2 == cb)
            break;
        nclasses = ids.size();
        ca = std::move(ca2);
        cb = std::move(cb2);
    }
    return {ca, cb};
}

bool extend_match(const FinitePoset& p, const FinitePoset& p2,
                  const std::vector<std::size_t>& order, std::size_t depth,
                  const std::vector<std::vector<std::size_t>>& candidates,
                  std::vector<std::size_t>& assign, std::vector<bool>& used) {
    if (depth == order.size())
        return true;
    std::size_t i = order[depth];
    for (std::size_t c : candidates[i]) {
        if (used[c])
            continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            std::size_t j = order[d];
            ok = p.leq(i, j) == p2.leq(c, assign[j]) && p.leq(j, i) == p2.leq(assign[j], c);
        }
        if (!ok)
            continue;
        assign[i] = c;
        used[c] = true;
        if (extend_match(p, p2, order, depth + 1, candidates, assign, used))
            return true;
        used[c] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p,
                                                         const FinitePoset& p2) {
    if (p.size() != p2.size())
        return std::nullopt;
    auto [ca, cb] = refine_classes(p, p2);

    std::map<int, std::size_t> count_a, count_b;
    for (int c : ca)
        count_a[c]++;
    for (int c : cb)
        count_b[c]++;
    if (count_a != count_b)
        return std::nullopt;

    std::vector<std::vector<std::size_t>> candidates(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p2.size(); ++j)
            if (ca[i] == cb[j])
                candidates[i].push_back(j);

    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return candidates[a].size() < candidates[b].size();
    });

    std::vector<std::size_t> assign(p.size());
    std::vector<bool> used(p2.size(), false);
    if (extend_match(p, p2, order, 0, candidates, assign, used))
        return assign;
    return std::nullopt;
}

bool are_isomorphic(const FinitePoset& p, const FinitePoset& p2) {
    return find_isomorphism(p, p2).has_value();
}

bool check_isomorphism(const FinitePoset& p, const FinitePoset& p2,
                       const std::vector<std::size_t>& witness) {
    if (p.size() != p2.size() || witness.size() != p.size())
        return false;
    std::vector<bool> used(p2.size(), false);
    for (std::size_t w : witness) {
        if (w >= p2.size() || used[w])
            return false;
        used[w] = true;
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.leq(i, j) != p2.leq(witness[i], witness[j]))
                return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const FinitePoset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j || !p.leq(i, j))
                continue;
            bool cover = true;
            for (std::size_t k = 0; k < p.size() && cover; ++k)
                if (k != i && k != j && p.leq(i, k) && p.leq(k, j))
                    cover = false;
            if (cover)
                edges.emplace_back(i, j);
        }
    return edges;
}

IntPoly coxeter_polynomial(const FinitePoset& p) {
    const std::size_t n = p.size();
    // Linear extension so that C is unitriangular.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        std::size_t da = 0, db = 0;
        for (std::size_t k = 0; k < n; ++k) {
            da += p.leq(k, a);
            db += p.leq(k, b);
        }
        return da < db;
    });

    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c.at(i, j) = p.leq(order[i], order[j]) ? 1 : 0;
    Matrix phi = -(inverse(c).transpose() * c);
    return char_poly(phi);
}

namespace {

struct Tree {
    std::shared_ptr<const Tree> left, right; // both null for a leaf
    bool leaf() const { return !left; }
};

using TreePtr = std::shared_ptr<const Tree>;

TreePtr make_leaf() {
    return std::make_shared<Tree>();
}

TreePtr make_node(TreePtr l, TreePtr r) {
    auto t = std::make_shared<Tree>();
    t->left = std::move(l);
    t->right = std::move(r);
    return TreePtr(t);
}

std::string tree_key(const TreePtr& t) {
    if (t->leaf())
        return ".";
    return "(" + tree_key(t->left) + tree_key(t->right) + ")";
}

std::vector<TreePtr> all_trees(int n) {
    if (n == 0)
        return {make_leaf()};
    std::vector<TreePtr> out;
    for (int k = 0; k < n; ++k)
        for (const TreePtr& l : all_trees(k))
            for (const TreePtr& r : all_trees(n - 1 - k))
                out.push_back(make_node(l, r));
    return out;
}

// All trees obtained from t by one right rotation ((A B) C) -> (A (B C))
// somewhere.
void rotations(const TreePtr& t, std::vector<TreePtr>& out,
               const std::function<TreePtr(TreePtr)>& rebuild) {
    if (t->leaf())
        return;
    if (!t->left->leaf())
        out.push_back(rebuild(
            make_node(t->left->left, make_node(t->left->right, t->right))));
    rotations(t->left, out, [&](TreePtr sub) {
        return rebuild(make_node(std::move(sub), t->right));
    });
    rotations(t->right, out, [&](TreePtr sub) {
        return rebuild(make_node(t->left, std::move(sub)));
    });
}

} // namespace

FinitePoset tamari(int n) {
    if (n < 1)
        throw std::invalid_argument("tamari: need at least one internal node");
    std::vector<TreePtr> trees = all_trees(n);
    std::vector<std::string> keys;
    for (const TreePtr& t : trees)
        keys.push_back(tree_key(t));
    std::vector<std::size_t> order(trees.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    FinitePoset p;
    std::map<std::string, std::size_t> index;
    for (std::size_t i : order) {
        index[keys[i]] = p.elements.size();
        p.elements.push_back(keys[i]);
    }
    const std::size_t m = p.elements.size();
    p.le.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        p.le[i][i] = true;
    for (std::size_t i : order) {
        std::vector<TreePtr> next;
        rotations(trees[i], next, [](TreePtr t) { return t; });
        for (const TreePtr& t : next)
            p.le[index[keys[i]]][index[tree_key(t)]] = true;
    }
    transitive_close(p.le);
    p.validate();
    return p;
}

std::string to_dot(const FinitePoset& p) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << "  n" << i << " [label=\"" << p.elements[i] << "\"];\n";
    for (const auto& [i, j] : hasse(p))
        os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<std::size_t> minimal_elements(const FinitePoset& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool minimal = true;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (k != i && p.leq(k, i))
                minimal = false;
        if (minimal)
            out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> maximal_elements(const FinitePoset& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool maximal = true;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (k != i && p.leq(i, k))
                maximal = false;
        if (maximal)
            out.push_back(i);
    }
    return out;
}

} // namespace cpo
