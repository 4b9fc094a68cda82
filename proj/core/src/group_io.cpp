#include "residua/group_io.hpp"

#include <fstream>

#include "residua/errors.hpp"

namespace residua {

GroupFile parse_group_json(const Json& doc, const Caps& caps) {
  if (!doc.is_object()) throw InputError("group document must be an object");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    throw InputError("group document needs an integer 'degree'");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw InputError("group document needs a 'generators' list");
  const auto degree = doc["degree"].get<long long>();
  if (degree <= 0) throw InputError("degree must be positive");
  std::vector<Permutation> gens;
  for (const auto& s : doc["generators"]) {
    if (!s.is_string()) throw InputError("generators must be cycle strings");
    gens.push_back(Permutation::from_cycles(s.get<std::string>(), static_cast<std::size_t>(degree), true));
  }
  GroupFile out{doc.value("name", std::string{}), doc.value("note", std::string{}), std::nullopt,
                Group::generate(std::move(gens), static_cast<std::size_t>(degree), caps)};
  if (doc.contains("order")) {
    const Json& o = doc["order"];
    if (o.is_number_unsigned()) {
      out.declared_order = o.get<std::uint64_t>();
    } else if (o.is_string() && !o.get<std::string>().empty() &&
               o.get<std::string>().find_first_not_of("0123456789") == std::string::npos) {
      out.declared_order = std::stoull(o.get<std::string>());
    } else {
      throw InputError("'order' must be a nonnegative integer or decimal string");
    }
    if (out.group.order() != static_cast<unsigned long>(*out.declared_order))
      throw InputError("group '" + out.name + "': generators give order " + out.group.order().get_str() +
                       ", file declares " + std::to_string(*out.declared_order));
  }
  return out;
}

GroupFile read_group_file(const std::filesystem::path& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("group file " + path.string() + ": " + e.what());
  }
  try {
    GroupFile f = parse_group_json(doc, caps);
    if (f.name.empty()) f.name = path.stem().string();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("group file " + path.string() + ": " + e.what());
  }
}

std::vector<std::string> generator_strings(const Group& g) {
  std::vector<std::string> out;
  for (const auto& p : g.generators()) out.push_back(p.to_cycles(true));
  return out;
}

Json group_to_json(const Group& g, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["degree"] = g.degree();
  j["order"] = g.order().get_str();
  j["generators"] = generator_strings(g);
  return j;
}

}  // namespace residua
