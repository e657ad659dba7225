#pragma once

#include <json.hpp>

#include "holo/bundle.hpp"
#include "holo/complex.hpp"
#include "holo/group.hpp"

namespace holo {

using nlohmann::json;

json to_json(const GroupDescriptor& d);
GroupDescriptor descriptor_from_json(const json& j);

json to_json(const BasePatch& p);
BasePatch patch_from_json(const json& j);

json to_json(const BundlePoint& q);
BundlePoint bundle_point_from_json(const json& j, const GroupDescriptor& g);

json to_json(const Chain& c);
Chain chain_from_json(const json& j, int dim);

json to_json(const GroupElement& g);
json to_json(const AlgebraElement& a);

}  // namespace holo
