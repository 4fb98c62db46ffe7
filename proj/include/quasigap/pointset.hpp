#pragma once

#include <vector>

#include "quasigap/scheme.hpp"

namespace quasigap {

// One point of Y with its lattice lift: y = pi_1(n + s), y* = window
// coordinates of pi*(n + s).  physical/internal are recomputable from n.
struct LiftedPoint {
    IVec n;
    SVec physical;  // d coordinates on E
    SVec internal;  // (k-d) window (B-)coordinates, in [0,1)
};

// All n_2 with accept((n_1, n_2)); exactly I of them, lexicographic.
std::vector<IVec> lifts(const Scheme& scheme, const IVec& n1);

// Every accepted point with sup-norm |physical| <= R, sorted by
// (|physical|, n lex); the order makes generate(R) a prefix of generate(R')
// for R <= R'.  Parallel over n_1 slabs.
std::vector<LiftedPoint> generate(const Scheme& scheme, const mpq_class& radius);
// Straight-line single-threaded reference; must agree with generate().
std::vector<LiftedPoint> generate_serial(const Scheme& scheme, const mpq_class& radius);

// CSV export: n_1..n_k, physical (decimal), internal (decimal).
std::string points_csv(const Scheme& scheme, const std::vector<LiftedPoint>& points,
                       int digits);

}  // namespace quasigap
