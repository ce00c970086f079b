#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ewe/enumeration.hpp"

namespace ewe::verify {

enum class Status { verified, refuted, exhausted_no_counterexample };

std::string_view to_string(Status status);

struct CheckReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::verified;
  std::optional<std::string> witness;
  nlohmann::json horizons = nlohmann::json::object();
  std::vector<std::string> details;
  std::int64_t elapsed_ms = 0;
  std::string tool_version = EWE_VERSION;

  bool ok() const { return status != Status::refuted; }
  nlohmann::json to_json() const;
};

/// Parameters shared by the registry; a check reads only the fields it needs
/// and falls back to its own defaults for unset ones.
struct CheckParams {
  std::optional<int> t;
  std::optional<int> box;
  std::optional<int> max_n;
  std::optional<int> k;
  std::optional<int> alpha_max;
  EnumerationOptions enumeration;
};

/// Shape-by-shape J_t / F_t comparison over all shapes with at most `box`
/// rows, plus exhaustive checks of phi_t* and psi_t*. For odd t this is the
/// sign-preserving theorem; for even t the totals and bijections are checked
/// and a sign-flipping phi_t step is exhibited.
CheckReport check_theorem_JtFt(int t, int box, const EnumerationOptions& opts = {});

/// Sign behaviour of reverse, complement and inverse for every permutation of
/// length 1..max_n.
CheckReport check_sign_symmetry_lemmas(int max_n);

/// Dispatches on registry name (dashes or underscores). Throws usage_error
/// for unknown names, listing the registry.
CheckReport run_check(std::string_view name, const CheckParams& params);

std::vector<std::string> registry_names();

}  // namespace ewe::verify
