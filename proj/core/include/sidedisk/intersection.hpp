#pragma once

#include <utility>
#include <vector>

#include "sidedisk/configuration.hpp"

namespace sidedisk {

enum class RelationKind { Disjoint, Intersecting };

/// Pairwise side-disk relation. margin = sin(delta/2) - (sin(di/4)+sin(dj/4))
/// with delta the circular distance between the center angles; positive
/// margin means the closed disks are disjoint.
struct Relation {
  RelationKind kind = RelationKind::Intersecting;
  double margin = 0.0;
};

Relation disks_intersect(const SideDisk& a, const SideDisk& b,
                         const Tolerance& tol);

using IndexPair = std::pair<int, int>;  // normalized i < j

/// Neighbour edges plus the red/blue colouring of all diagonals of the
/// cyclic disk order: red = intersecting, blue = disjoint.
struct IntersectionGraph {
  int n = 0;
  std::vector<IndexPair> neighbour_edges;
  std::vector<IndexPair> red_diagonals;
  std::vector<IndexPair> blue_diagonals;
};

IntersectionGraph intersection_graph(const GreatPolygon& poly,
                                     const Tolerance& tol);

int disjoint_pair_count(const IntersectionGraph& graph);

// ((n-2)(n-3)/2, n(n-3)/2), exact integers; requires n >= 3.
std::pair<long, long> theorem_bounds(int n);

// True iff diagonals {i,j} and {k,l} of the cyclic order 0..n-1 interleave.
// Throws std::invalid_argument on out-of-range indices or shared endpoints.
bool chords_cross(int i, int j, int k, int l, int n);

bool red_noncrossing(const IntersectionGraph& graph);

struct AnalysisReport {
  int n = 0;
  int d = 0;  // |blue_diagonals|
  long lower_bound = 0;
  long upper_bound = 0;
  bool bounds_ok = false;
  bool noncrossing_ok = false;
  double min_abs_margin = 0.0;  // distance to the nearest classification flip
  IntersectionGraph graph;
};

AnalysisReport analyze(const GreatPolygon& poly, const Tolerance& tol);

}  // namespace sidedisk
