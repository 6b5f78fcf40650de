#pragma once

#include <optional>
#include <vector>

#include "linkforge/factor.hpp"
#include "linkforge/flip.hpp"

namespace linkforge {

enum class LinkKind { OpenChain, Ladder, FourBar, Custom };

struct Joint {
  int i, j;       // link ids, 1-based
  Scalar center;  // rho(e) as a complex number
};

struct SynthMeta {
  std::vector<KElement> factors;  // k_1 ... k_n
  CPoly S, R;
  std::optional<LadderMeta> ladder;
  int base_link = 0;
  int pen_link = 0;
};

// Link numbering: top chain 1..n+1 (1 = pen, n+1 = base), bottom chain
// n+2..2n+2 for ladders. Link m's absolute motion is the suffix product
// (t-k_m)...(t-k_n); bottom link n+1+j moves by (t-l_j)(t-k_j)...(t-k_n).
struct Linkage {
  Backend backend = Backend::Exact;
  LinkKind kind = LinkKind::Custom;
  int n_links = 0;
  std::vector<Joint> joints;
  std::optional<SynthMeta> meta;

  int n_squares() const {
    return meta ? static_cast<int>(meta->factors.size()) : 0;
  }
};

Linkage construct_weak(const MPoly& p);
Linkage construct_strong(const MPoly& p);
// Ladder from an explicit factor sequence and auxiliary l_1 (used by the
// CLI --l override); throws Error when iterated flip mobility fails.
Linkage construct_strong_from(const std::vector<KElement>& ks, const KElement& l1,
                              CPoly s = CPoly(), CPoly r = CPoly());
Linkage flip_linkage(const KElement& k1, const KElement& k2);

// Absolute motion polynomial of one link.
MPoly link_motion(const Linkage& l, int link);

struct Pose {
  std::vector<KElement> link_iso;   // by link id - 1
  std::vector<Scalar> joint_pos;    // by joint index
};
Pose pose_at(const Linkage& l, const Scalar& t);
Pose pose_at_inf(const Linkage& l);

// Joint/point path as rational functions: (x_num/den, y_num/den).
struct Trajectory {
  CPoly x_num, y_num, den;  // all real
};
Trajectory point_trajectory(const Linkage& l, int link, const Scalar& center);
Trajectory joint_trajectory(const Linkage& l, int joint_index);
Scalar traj_eval(const Trajectory& tr, const Scalar& t);  // x + i y
// Limit position for t -> infinity (all synthesized motions are monic).
Scalar traj_eval_inf(const Trajectory& tr);

// Numeric configuration-space dimension estimate: rank of the joint
// constraint Jacobian over per-link rigid motions, base link grounded.
struct MobilityReport {
  int dimension;
  int samples;
};
MobilityReport mobility_sample_check(const Linkage& l, int trials);

}  // namespace linkforge
