#pragma once

#include <vector>

#include "linkforge/linkage.hpp"

namespace linkforge {

// Joint (i,j) meets a segment of link k at time t (possibly t = infinity)
// at segment parameter s in [0,1].
struct CollisionEvent {
  int joint_index;  // index into Linkage::joints
  int link;         // link id of the obstructing link
  int segment;      // segment index within that link
  bool at_inf;
  double t;             // meaningless when at_inf
  bool t_exact = false; // exact backend found a rational root
  mpq_class t_value;    // valid when t_exact
  double s;
};

// Links listed bottom layer first: layer(ordering[p]) = p + 1.
using Ordering = std::vector<int>;

// Ladders interleave the two chains (1, n+2, 2, n+3, ..., n+1, 2n+2);
// anything else keeps the link numbering.
Ordering default_ordering(const Linkage& l);

std::vector<CollisionEvent> detect_collisions(const Linkage& l,
                                              const Ordering& ordering);

enum class LinkShape { F, U, Z };
enum class JointType { T, Z };

struct LinkLayer {
  LinkShape shape;
  int a, b;  // F: a == b; U: a < b; Z: b == a + 2
};

struct LayerAssignment {
  int n_layers = 0;
  std::vector<LinkLayer> links;    // by link id - 1
  std::vector<JointType> joints;   // by joint index
};

LayerAssignment assign_layers(const Linkage& l);  // throws NotLadder
bool validate_layers(const Linkage& l, const LayerAssignment& a);

struct OrderingSearchResult {
  Ordering ordering;
  int finite_events = 0;
  int inf_events = 0;
};

// Seeded hill climbing (pairwise swaps) with random restarts; budget
// bounds the number of detect_collisions evaluations.
OrderingSearchResult search_ordering(const Linkage& l, int budget);

}  // namespace linkforge
