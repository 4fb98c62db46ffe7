#pragma once

#include <vector>

#include "quasigap/surd.hpp"

namespace quasigap {

// The circle partition J_N: components of R/Z minus {n*alpha mod 1 : 1<=n<=N}.
// Interval i runs from points[i] to points[i+1] (wrapping at the end).
struct CirclePartition {
    std::vector<Surd> points;  // sorted, in [0,1)
    std::vector<Surd> gaps;    // gaps[i] = length of the arc starting at points[i]
};

CirclePartition circle_partition(const Surd& alpha, long n);

// Directed graph on J_N: an edge J -> J' whenever T_alpha(J) meets J'.
struct GammaComplex {
    long n = 0;
    size_t vertex_count = 0;
    std::vector<std::vector<size_t>> out_edges;  // per vertex, sorted targets
    std::vector<size_t> out_degree, in_degree;
    long branch_vertex = -1;  // out-degree 2 vertex, if any
    long merge_vertex = -1;   // in-degree 2 vertex, if any
    size_t edge_count = 0;
};

// allow_rational enables the rational test rigs (points deduplicate and the
// rotation permutes the intervals); irrational alpha is the default contract.
GammaComplex gamma(const Surd& alpha, long n, bool allow_rational = false);

enum class GammaShape { circle, wedge, theta };
GammaShape classify(const GammaComplex& g);
const char* shape_name(GammaShape s);

// Orbit frequencies (1/R) sum_{i<=R} chi_J(beta + i*alpha) per interval of
// J_N; exact rational counts.  Rejects beta in alpha*Z + Z (checked exactly
// up to the orbit length, which is what the orbit can ever probe).
std::vector<mpq_class> ergodic_freq(const Surd& beta, const Surd& alpha, long n, long r);
std::vector<mpq_class> ergodic_freq_serial(const Surd& beta, const Surd& alpha, long n, long r);

// CSV: N, distinct_gap_count, gaps (exact + decimal), shape, branch, merge.
std::string steinhaus_csv_header();
std::string steinhaus_csv_row(const Surd& alpha, long n, int digits);

}  // namespace quasigap
