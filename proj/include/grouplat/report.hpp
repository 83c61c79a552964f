#pragma once

#include <string>

#include "json.hpp"

#include "grouplat/decreasing.hpp"
#include "grouplat/group_bounds.hpp"
#include "grouplat/homology.hpp"
#include "grouplat/reduce.hpp"
#include "grouplat/spectral.hpp"

namespace grouplat {

using Json = nlohmann::ordered_json;

Json to_json(const AbelianGroup& g);
Json to_json(const HomologyProfile& h);
Json to_json(const E1Page& page);
Json to_json(const BoundTable& t);
Json to_json(const GroupBoundsReport& r);
Json to_json(const PipelineReport& r);
Json to_json(const DecreasingVerdict& v);
Json to_json(const SufficiencyReport& r);
Json to_json(const LcsReport& r);

std::string human(const E1Page& page);
std::string human(const BoundTable& t);
std::string human(const GroupBoundsReport& r);
std::string human(const PipelineReport& r);
std::string human(const DecreasingVerdict& v);
std::string human(const SufficiencyReport& r, const Poset& p);
std::string human(const LcsReport& r);

}  // namespace grouplat
