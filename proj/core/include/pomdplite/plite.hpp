#pragma once

#include <string>
#include <string_view>

#include "pomdplite/tabular.hpp"

namespace pomdplite {

/// Parses the line-oriented .plite text format (versioned header "plite 1")
/// into a validated tabular model. Syntax and semantic errors throw
/// ParseError with a 1-based line:column position.
std::shared_ptr<TabularModel> parse_model(std::string_view text);
std::shared_ptr<TabularModel> parse_model_file(const std::string& path);

/// Writes a model back to .plite text. Requires a tabular/enumerable model;
/// parse_model(serialize_model(m)) defines identical distributions.
std::string serialize_model(const Model& model, std::size_t state_cap = 10'000);

}  // namespace pomdplite
