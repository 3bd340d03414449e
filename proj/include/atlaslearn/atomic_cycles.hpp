#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "atlaslearn/graph.hpp"

namespace atlaslearn {

// A simple cycle C is atomic for chord length n when no two of its vertices
// a, b are joined by a path of at most n edges that is shorter than their
// distance along C:
//
//     hops(a, b) >= min(cycle_distance(a, b), n + 1)   for all a, b in C.
//
// n = 1 gives exactly the chordless (induced) cycles. Larger n also rejects
// cycles that can be split into two shorter ones by a short detour, which is
// what separates a loop around a hole from a ring drawn on a flat patch.

struct AtomicCycleOptions {
    /// Longest shortcut path considered, in edges.
    std::size_t chord_length = 2;
    /// Subgraphs with at most this many vertices are searched exhaustively;
    /// larger ones use the breadth-first candidate scan.
    std::size_t exhaustive_limit = 20;
};

enum class AtomicSearch {
    automatic,
    exhaustive,
    breadth_first,
};

/// True iff `cycle` (vertices in cyclic order, local indices) is a simple
/// cycle of `graph` satisfying the atomic condition for `chord_length`.
bool is_atomic_cycle(const CompactGraph& graph, std::span<const std::uint32_t> cycle,
                     std::size_t chord_length);

/// Returns an atomic cycle with more than `lambda` vertices (global ids, in
/// cyclic order) or nullopt.
///
/// The exhaustive search is exact. The breadth-first scan runs a BFS from
/// every vertex; each non-tree edge joining two different root branches closes
/// a candidate cycle (both tree paths plus the edge), which is accepted when
/// it passes the atomic test. It never reports a non-atomic cycle but can miss
/// atomic cycles that are not fundamental cycles of some BFS tree, such as the
/// rim of a wheel.
std::optional<std::vector<VertexId>> find_atomic_cycle_longer_than(
    const NeighborhoodGraph& graph, const Subgraph& sub, std::size_t lambda,
    const AtomicCycleOptions& options = {}, AtomicSearch search = AtomicSearch::automatic);

/// Requires lambda >= 3 (ParameterError otherwise).
bool has_atomic_cycle_longer_than(const NeighborhoodGraph& graph, const Subgraph& sub,
                                  std::size_t lambda, const AtomicCycleOptions& options = {},
                                  AtomicSearch search = AtomicSearch::automatic);

}  // namespace atlaslearn
