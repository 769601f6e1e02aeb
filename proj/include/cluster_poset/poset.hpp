#pragma once

#include "cluster_poset/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cpo {

/// Finite poset: ordered element keys plus the full order relation matrix.
struct FinitePoset {
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> le; // le[i][j] iff elements[i] <= elements[j]

    std::size_t size() const { return elements.size(); }
    bool leq(std::size_t i, std::size_t j) const { return le[i][j]; }

    /// Throws std::invalid_argument unless reflexive, antisymmetric and
    /// transitive with distinct keys.
    void validate() const;
};

FinitePoset chain(std::size_t n);
FinitePoset antichain(std::size_t n);

/// Checks a <= b implies f(a) <= f(b); f maps domain indices to codomain
/// indices.
bool is_order_preserving(const FinitePoset& x, const FinitePoset& y,
                         const std::vector<std::size_t>& f);

enum class FlipFlopSign { Plus, Minus };

/// The flip-flop order on X ⊔ Y: internal orders kept, plus
/// x <= y iff f(x) <=_Y y (Plus) or y <= x iff y <=_Y f(x) (Minus), and
/// nothing else. Element keys must be disjoint. Throws
/// std::invalid_argument when f is not order preserving, and
/// std::logic_error if transitive closure would add cross relations
/// beyond the rule.
FinitePoset flip_flop(const FinitePoset& x, const FinitePoset& y,
                      const std::vector<std::size_t>& f, FlipFlopSign sign);

/// Order-isomorphism witness p -> p2, by backtracking over invariant-
/// refined candidate classes. Feasible for a few hundred elements.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p,
                                                         const FinitePoset& p2);
bool are_isomorphic(const FinitePoset& p, const FinitePoset& p2);
bool check_isomorphism(const FinitePoset& p, const FinitePoset& p2,
                       const std::vector<std::size_t>& witness);

/// Transitive reduction; edges (i, j) with i covered by j, in
/// lexicographic index order.
std::vector<std::pair<std::size_t, std::size_t>> hasse(const FinitePoset& p);

/// Characteristic polynomial of the Coxeter transformation
/// Phi = -C^{-T} C of the incidence algebra, where C is the 0/1 order
/// matrix. A derived invariant of the incidence algebra.
IntPoly coxeter_polynomial(const FinitePoset& p);

/// Tamari lattice on binary trees with n internal nodes (Catalan(n)
/// elements); order is the reflexive-transitive closure of right rotation.
/// Built directly from tree rotations, independent of the cluster modules.
FinitePoset tamari(int n);

/// DOT rendering of the Hasse diagram, edges from smaller to larger.
std::string to_dot(const FinitePoset& p);

std::vector<std::size_t> minimal_elements(const FinitePoset& p);
std::vector<std::size_t> maximal_elements(const FinitePoset& p);

} // namespace cpo
