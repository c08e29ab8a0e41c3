#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "comparo/models.hpp"

namespace comparo {

/// Reads a model from its JSON text. Throws ModelError for malformed JSON,
/// unknown keys, unknown state names or a bad "type". Invariants are not
/// checked here; call validate().
AnyModel parse_model(std::string_view json_text);

/// JSON text with keys in a fixed order and rationals as "num/den", so equal
/// models serialize to identical bytes.
std::string dump_model(const AnyModel& m);

AnyModel load_model(const std::filesystem::path& path);
void save_model(const std::filesystem::path& path, const AnyModel& m);

/// Short name of the model type as used in the "type" field.
std::string_view model_type(const AnyModel& m);

}  // namespace comparo
