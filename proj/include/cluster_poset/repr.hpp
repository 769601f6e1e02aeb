#pragma once

#include "cluster_poset/linalg.hpp"
#include "cluster_poset/quiver.hpp"

#include <vector>

namespace cpo {

/// Explicit representation: a vector space dimension per vertex and a
/// matrix per arrow (rows = target dimension, cols = source dimension).
struct Representation {
    Quiver q;
    std::vector<int> dims;
    std::vector<Matrix> maps;

    DimVec dim_vector() const { return dims; }
    void validate() const; // throws on shape mismatch
};

/// Element of Hom_Q(M, N): one component matrix per vertex satisfying the
/// intertwiner equations N(a) phi_i = phi_j M(a) for every arrow a: i->j.
struct Morphism {
    std::vector<Matrix> comps;
};

enum class StandardKind { Simple, Projective };

/// Simple S_x, or projective P_x with basis the paths starting at x and
/// arrow maps given by path composition.
Representation standard_rep(const Quiver& q, StandardKind kind, int x);

Representation zero_rep(const Quiver& q);
Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts);

/// The unique indecomposable with dimension vector d (Gabriel), built by
/// reflecting d down to a simple root along lex-smallest sinks and pulling
/// the simple back through the reflection functors. Memoized per (Q, d).
/// Throws std::invalid_argument when d is not a positive root.
Representation indecomposable_of_root(const Quiver& q, const DimVec& d);

/// Basis of Hom_Q(M, N), solved from the full intertwiner system in the
/// deterministic kernel normal form.
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// dim Ext^1_Q(M, N) via the hereditary identity
/// dim Ext^1 = dim Hom - <dim M, dim N>.
std::size_t ext1_dim(const Representation& m, const Representation& n);

/// True iff N lies in fac X, i.e. the trace of X in N (sum of images of
/// all morphisms X -> N) is all of N.
bool in_fac(const Representation& n, const Representation& x);

std::vector<int> support(const Representation& m);

/// Restriction to Q minus vertex x (drops incident arrows) and its left
/// adjoint, extension by zero at x.
Representation restrict_delete(const Representation& m, int x);
Representation extend_by_zero(const Representation& m_small, const Quiver& q_big, int x);

} // namespace cpo
