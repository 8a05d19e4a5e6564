#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "blowuplab/arrangement.hpp"
#include "blowuplab/series.hpp"

namespace blowuplab {

/// Malformed or invalid input. The message carries a location when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named arrangement, simple or stretched.
struct Instance {
  std::string id;
  std::optional<Arrangement> simple;
  std::optional<StretchedArrangement> stretched;

  bool is_stretched() const { return stretched.has_value(); }
  std::size_t k() const { return simple ? simple->k() : stretched->support.k(); }
};

/// Parses {"k":..,"forms":[[..],..],"labels":[..]} with optional
/// "multiplicities" and "coefficients" (stretched input) and "id".
Instance instance_from_json(const nlohmann::json& j, const std::string& fallback_id);
Instance parse_instance(const std::string& text, const std::string& source);
Instance load_instance(const std::string& path);

nlohmann::json to_json(const Arrangement& a);
nlohmann::json to_json(const StretchedArrangement& b);
nlohmann::json to_json(const HilbertSeries& s);
nlohmann::json to_json(const BigradedSeries& s);

}  // namespace blowuplab
