#pragma once

#include "hypercat/combinatorics.hpp"

namespace hypercat {

// (k*d)! / ((k!)^d * d!): the number of ways a k-tour can distribute its
// departures at a vertex of degree d, unordered over the d edges.
Natural departure_count(unsigned long degree, unsigned long k);

// Number of k-tours on any single rooted plane tree with this degree profile.
Natural tours_on_profile(const DegreeProfile& profile, unsigned long k);

// The hypergraph Catalan number c_n^(k), summed over root degrees and
// degree profiles. c_0^(k) = 1 by convention (empty tour on one vertex).
Natural hypergraph_catalan_closed(unsigned long n, unsigned long k);

// The root-degree-j slice of the same sum: k-tours on trees with n+1
// vertices whose root has degree exactly j.
Natural root_degree_count(unsigned long n, unsigned long j, unsigned long k);

// Worker cap for the parallel reduction over root degrees; reads
// HYPERCAT_THREADS, defaults to 1.
unsigned configured_thread_count();

}  // namespace hypercat
