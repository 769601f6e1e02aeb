#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cpo {

/// Finite quiver without oriented cycles. Vertices keep the order in which
/// they were listed; that order is the canonical indexing for dimension
/// vectors and matrices everywhere else.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows; // (source index, target index)

    int size() const { return static_cast<int>(vertices.size()); }
    int index_of(const std::string& label) const; // -1 if absent
    bool operator==(const Quiver& rhs) const = default;

    /// Canonical string encoding, usable as a cache key.
    std::string key() const;
};

/// Validates labels and arrows and checks acyclicity.
/// Throws std::invalid_argument on duplicate label, dangling endpoint or
/// oriented cycle.
Quiver make_quiver(std::vector<std::string> vertices,
                   const std::vector<std::pair<std::string, std::string>>& arrows);

/// Parses the JSON quiver format {"vertices":[...],"arrows":[[src,tgt],...]}.
Quiver parse_quiver(const std::string& json_text);

enum class TerminalKind { Sink, Source };

std::vector<int> terminal_vertices(const Quiver& q, TerminalKind kind);
bool is_sink(const Quiver& q, int x);
bool is_source(const Quiver& q, int x);

/// BGP reflection: reverses every arrow incident to x. Throws
/// std::invalid_argument unless x is a sink or a source.
Quiver reflect(const Quiver& q, int x);

struct DynkinType {
    char family = 0; // 'A', 'D' or 'E'
    int rank = 0;
    bool operator==(const DynkinType&) const = default;
};

/// ADE recognition of the underlying undirected graph; nullopt when the
/// quiver is not representation-finite (not connected simply-laced ADE).
std::optional<DynkinType> classify_dynkin(const Quiver& q);

/// Dimension vector indexed by the quiver's vertex order. Negative entries
/// only appear in the almost-positive-root encoding of shifted projectives.
using DimVec = std::vector<int>;

DimVec unit_vector(const Quiver& q, int x);

/// Hereditary Euler form <d,e> = sum_i d_i e_i - sum_{a:i->j} d_i e_j.
long long euler_form(const Quiver& q, const DimVec& d, const DimVec& e);

/// Simple reflection s_x: entry at x becomes (sum of d over neighbours of
/// x, with arrow multiplicity) - d_x; other entries unchanged.
DimVec simple_reflection(const Quiver& q, int x, const DimVec& d);

/// All positive roots of the underlying root system, sorted by (total
/// degree, lexicographic). Computed as the reflection closure of the simple
/// roots. Throws std::invalid_argument when the quiver is not Dynkin.
std::vector<DimVec> positive_roots(const Quiver& q);

} // namespace cpo
