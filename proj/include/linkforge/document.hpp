#pragma once

#include <json.hpp>

#include "linkforge/collision.hpp"
#include "linkforge/factor.hpp"
#include "linkforge/linkage.hpp"

namespace linkforge {

inline constexpr const char* kLinkageSchema = "linkforge.linkage/1";
inline constexpr const char* kFactorSchema = "linkforge.factorization/1";
inline constexpr const char* kCollisionSchema = "linkforge.collisions/1";
inline constexpr const char* kCurveSchema = "linkforge.curve/1";

nlohmann::json linkage_to_json(const Linkage& l);
Linkage linkage_from_json(const nlohmann::json& j);  // throws ParseError

nlohmann::json factorization_to_json(const Factorization& f, Backend b);

nlohmann::json collisions_to_json(const std::vector<CollisionEvent>& evs,
                                  const Ordering& ordering);

nlohmann::json layers_to_json(const LayerAssignment& a);

// Curve document {f, g, h} describing (f/h, g/h) -> motion h + eta(f + i g).
MPoly curve_to_motion(const nlohmann::json& j, Backend b);

}  // namespace linkforge
