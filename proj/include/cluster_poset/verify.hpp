#pragma once

#include "cluster_poset/cluster.hpp"
#include "cluster_poset/poset.hpp"

#include <nlohmann/json.hpp>

namespace cpo {

/// The tilting order as a FinitePoset; element keys are the JSON-rendered
/// objects, optionally prefixed.
FinitePoset to_finite_poset(const TiltingPoset& p, const std::string& prefix = "");

FinitePoset subposet(const FinitePoset& p, const std::vector<std::size_t>& idx);

/// Rebuilds the tilting poset of Q from the flip-flop construction at a
/// sink x (plus side), and the tilting poset of the reflected quiver from
/// the minus side, checking both against the directly computed posets.
nlohmann::json verify_flipflop(const Quiver& q, int x);

/// Property suite for the structural lemmas of the tilting order: subset
/// closure, mutation monotonicity, fingerprint drop at a sink, sandwich
/// bounds, the reflection bijection order properties, the torsion-class
/// complement lemma and the sincere-complement count. Runs over every
/// admissible vertex of q.
nlohmann::json lemma_suite(const Quiver& q);

} // namespace cpo
