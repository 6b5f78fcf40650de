#pragma once

#include <optional>
#include <vector>

#include "linkforge/algebra.hpp"

namespace linkforge {

// (k3, k4) with pp(k3) = pp(k2), pp(k4) = pp(k1) and
// (t-k1)(t-k2) = (t-k3)(t-k4).
struct FlipPair {
  KElement k3, k4;
};

FlipPair flip(const KElement& k1, const KElement& k2);  // throws DegenerateFlip

// Flip mobility: z1, z2 not real, z1 != z2, z1 != conj(z2),
// midpt(k1) != midpt(k2).
bool fm(const KElement& k1, const KElement& k2);

// Flip cascade data: (t - l_i)(t - k_i) = (t - ktilde_i)(t - l_{i+1}).
struct LadderMeta {
  std::vector<KElement> l;       // l_1 ... l_{n+1}
  std::vector<KElement> ktilde;  // ktilde_1 ... ktilde_n
};

// Runs the cascade; empty when fm fails at some step.
std::optional<LadderMeta> run_cascade(const KElement& l1,
                                      const std::vector<KElement>& ks);
bool ifm(const KElement& l1, const std::vector<KElement>& ks);

// First l (in canonical enumeration order) with iterated flip mobility.
KElement choose_l(const std::vector<KElement>& ks);

// Lemma "revert_flip": (inv(k3), k1) = Flip(k4, inv(k2)).
bool revert_flip_check(const KElement& k1, const KElement& k2,
                       const KElement& k3, const KElement& k4);

}  // namespace linkforge
