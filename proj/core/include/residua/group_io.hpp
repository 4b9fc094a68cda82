#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "residua/group.hpp"

namespace residua {

using Json = nlohmann::ordered_json;

// Group file: {"degree": n, "generators": ["(1 2 3)(4 5)", ...]} with 1-indexed
// cycles; optional "name", "order", "note".
struct GroupFile {
  std::string name;
  std::string note;
  std::optional<std::uint64_t> declared_order;
  Group group;
};

GroupFile parse_group_json(const Json& doc, const Caps& caps = {});
GroupFile read_group_file(const std::filesystem::path& path, const Caps& caps = {});
Json group_to_json(const Group& g, const std::string& name = {});
std::vector<std::string> generator_strings(const Group& g);

}  // namespace residua
