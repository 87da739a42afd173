#pragma once

#include <deque>
#include <functional>
#include <vector>

#include "hypercat/combinatorics.hpp"

namespace hypercat {

// Rooted plane tree in canonical encoding: preorder sequence of outdegrees,
// root first.
struct PlaneTree {
    std::vector<unsigned> outdegrees;

    std::size_t vertex_count() const { return outdegrees.size(); }
    bool valid() const;
    // Children of each vertex, in plane (left-to-right) order.
    std::vector<std::vector<unsigned>> children() const;
    std::vector<int> parents() const;  // -1 for the root
    // Root degree = outdegree; every other vertex adds 1 for its parent edge.
    unsigned degree(unsigned vertex) const;
    DegreeProfile profile() const;
};

// Closed walk: vertex labels v_1..v_{2kn} with the return to v_1 implicit.
// Labels are assigned in discovery order starting from 0.
using Walk = std::vector<unsigned>;

// Per-vertex departure order: seqs[v] lists the neighbor visited by each of
// the k*deg(v) steps leaving v.
using DepartureSequences = std::vector<std::deque<unsigned>>;

// Yields every rooted plane tree with the given vertex count exactly once;
// the stream has catalan(vertex_count - 1) elements.
void for_each_plane_tree(std::size_t vertex_count,
                         const std::function<void(const PlaneTree&)>& visit);

Natural count_plane_trees(std::size_t vertex_count);

// Product over vertices of departure_count(deg(v), k).
Natural tours_on_tree(const PlaneTree& tree, unsigned long k);

// c_n^(k) as a sum of tours_on_tree over all plane trees with n+1 vertices.
Natural oracle_by_trees(unsigned long n, unsigned long k);

// Exhaustive search over closed walks of length 2kn; the guard rejects
// requests with k*n above the bound (default 8, CLI-overridable).
Natural brute_force_walks(unsigned long n, unsigned long k,
                          unsigned long max_kn = 8,
                          const std::function<void(const Walk&)>& on_walk = nullptr);

// Splits a k-tour into its induced plane tree and per-vertex departure
// sequences; throws std::invalid_argument naming the violated condition
// if the walk is not a k-tour.
std::pair<PlaneTree, DepartureSequences> decompose_walk(const Walk& walk, unsigned long k);

// Replays the departure sequences from the root; inverse of decompose_walk.
Walk reconstruct_walk(const PlaneTree& tree, DepartureSequences seqs);

}  // namespace hypercat
