#pragma once

#include <string>
#include <string_view>

#include "oddcox/automorphism.hpp"
#include "oddcox/system.hpp"

namespace oddcox {

/// {"rank": 4, "edges": [{"u":1,"v":2,"m":3}, ...]}; missing pairs are
/// infinite. Errors carry the line and field, e.g. "line 3: edges[1].m: ...".
CoxeterSystem parse_system_json(std::string_view text);
CoxeterSystem load_system(const std::string& path);
std::string system_to_json(const CoxeterSystem& sys);

/// {"images": [[1],[1,2,1],[3]]}: images[i] is the image of w_{i+1}.
Endomorphism parse_endomorphism_json(std::string_view text);
Endomorphism load_endomorphism(const std::string& path);
std::string endomorphism_to_json(const Endomorphism& e);

}  // namespace oddcox
