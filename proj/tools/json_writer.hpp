#pragma once

#include <string>

#include <json.hpp>

namespace sitepc::cli {

/// Like json::dump(2) but floats always carry 17 significant digits.
std::string dump_json(const nlohmann::json& j);

/// %.17g; "nan"/"inf" spelled out.
std::string format_double(double v);

}  // namespace sitepc::cli
