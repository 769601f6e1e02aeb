#pragma once

#include "cluster_poset/quiver.hpp"
#include "cluster_poset/repr.hpp"

#include <string>
#include <vector>

namespace cpo {

/// Cluster-category indecomposable rendered as an almost-positive root:
/// a positive root for a module, -e_y for the shifted projective P_y[1].
using APRoot = DimVec;

bool is_shifted(const APRoot& r);           // exactly -e_y for some y
int shifted_vertex(const APRoot& r);        // -1 when not shifted

/// Cluster tilting object: n pairwise compatible almost-positive roots,
/// kept sorted lexicographically.
using ClusterTilting = std::vector<APRoot>;

/// Sorted set of positive roots, the indecomposables of ind fac T. This is
/// the canonical identity of the torsion class fac T.
using Fingerprint = std::vector<DimVec>;

/// Ext^1 in the cluster category between two indecomposables:
/// module/module is the 2-Calabi-Yau symmetrization
/// ext1(M,N) + ext1(N,M); module/shifted(y) is dim M(y);
/// shifted/shifted is 0.
long long ext1_cluster(const Quiver& q, const APRoot& a, const APRoot& b);

/// All cluster tilting objects, by maximal-clique enumeration over the
/// compatibility graph on almost-positive roots. Every maximal clique is
/// checked to have exactly n elements. Output sorted by summand multiset.
/// Throws std::invalid_argument when the quiver is not Dynkin.
std::vector<ClusterTilting> enumerate_cluster_tilting(const Quiver& q);

/// The unique other completion of T minus summand m; exhaustive search,
/// asserts exactly one candidate. Throws std::invalid_argument when
/// m is not a summand.
ClusterTilting mutate(const Quiver& q, const ClusterTilting& t, const APRoot& m);

/// { d positive root : indec(d) is a quotient of a sum of copies of the
/// module part of T }. Empty when T is all shifted projectives.
Fingerprint fac_fingerprint(const Quiver& q, const ClusterTilting& t);

/// T <= T' iff fac T contains fac T' (reverse inclusion of fingerprints).
bool leq(const Quiver& q, const ClusterTilting& t, const ClusterTilting& t2);
bool fingerprint_leq(const Fingerprint& a, const Fingerprint& b);

/// Enumerated objects with precomputed fingerprints and order matrix.
/// Fingerprint distinctness (antisymmetry) is asserted on construction.
struct TiltingPoset {
    Quiver q;
    std::vector<ClusterTilting> objects;
    std::vector<Fingerprint> fingerprints;
    std::vector<std::vector<bool>> le;

    std::size_t index_of(const ClusterTilting& t) const; // throws if absent
    bool leq_idx(std::size_t i, std::size_t j) const { return le[i][j]; }
};

TiltingPoset tilting_poset(const Quiver& q);

enum class SubsetKind { Px, PxShift };

/// Px: objects containing the projective P_x (as a module summand);
/// PxShift: objects containing the shifted projective P_x[1].
bool contains_summand(const Quiver& q, const ClusterTilting& t, SubsetKind kind, int x);
std::vector<ClusterTilting> subset_containing(const Quiver& q, SubsetKind kind, int x);

/// f: mutation at S_x = P_x for a sink x; g: mutation at P_x[1] for a
/// source x. Preconditions checked.
ClusterTilting f_map(const Quiver& q, int x, const ClusterTilting& t);
ClusterTilting g_map(const Quiver& q, int x, const ClusterTilting& t);

/// Dimension vector of the projective P_x.
DimVec projective_root(const Quiver& q, int x);

std::string render_tilting(const ClusterTilting& t); // JSON array text
std::string render_root(const APRoot& r);

} // namespace cpo
