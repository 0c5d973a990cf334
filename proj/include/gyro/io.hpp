#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gyro/chain.hpp"
#include "gyro/complex.hpp"

namespace gyro {

/// Malformed or unreadable input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::filesystem::path& path);

/// {"kind":"cayley","order":n,"labels":[...],"op":[[...],...]} with an
/// optional "gyr": either "identity" or a nested [x][y][z] array.
CayleyTable table_from_json(const nlohmann::json& doc);
nlohmann::json table_to_json(const CayleyTable& table);

/// Parses and validates; structural defects surface as ModelError.
CayleyGyro table_load(const nlohmann::json& doc);
nlohmann::json table_emit(const CayleyGyro& model);

/// A model document of any supported kind.
struct LoadedModel {
  ModelPtr finite;      // set for "cayley"
  RadialModel analytic; // meaningful when finite is null

  bool is_finite() const { return finite != nullptr; }
  std::string kind() const { return is_finite() ? "cayley" : analytic.name(); }
};

LoadedModel model_from_json(const nlohmann::json& doc);
LoadedModel load_model(const std::filesystem::path& path);

using LoadedChain = std::variant<FiniteChain, RadialChain>;

/// Finite: {"model":"<path>","kind":"finite","sets":[[...],...]}, the model
/// path taken relative to the chain file. Radial: {"kind":"radial",
/// "model":<path or inline document, default Möbius>, "balls":[{"r":"1/4",
/// "closed":true},...], "tail":{"ratio":"1/4"}}.
LoadedChain chain_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
LoadedChain load_chain(const std::filesystem::path& path);
nlohmann::json chain_to_json(const FiniteChain& chain, const std::string& model_ref);
nlohmann::json chain_to_json(const RadialChain& chain);

/// {"sets":[[...],...]}
BaseFamily base_from_json(const nlohmann::json& doc, const ModelPtr& model);
BaseFamily load_base(const std::filesystem::path& path, const ModelPtr& model);

/// One element reference: a label of the model, or else a decimal index.
Index parse_element(const CayleyGyro& model, const std::string& token);

/// "i,j,k" (labels or indices, blanks ignored); "" is the empty set.
FinSubset parse_set(const ModelPtr& model, const std::string& text);
FinSubset set_from_json(const ModelPtr& model, const nlohmann::json& members);

/// "re,im" with exact decimal or fraction parts.
Complex<Rational> parse_complex(const std::string& text);

}  // namespace gyro
