#include "symfam/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symfam {

namespace {

using nlohmann::json;

json family_to_json(const SetFamily& family, const std::optional<GroupWitness>& witness) {
  json doc;
  const auto k = family.uniformity();
  doc["k"] = k.has_value() ? json(*k) : json(nullptr);
  doc["n"] = family.ground_size();
  std::vector<std::vector<int>> sets;
  sets.reserve(family.size());
  for (const SubsetMask& member : family.members()) sets.push_back(member.elements());
  std::sort(sets.begin(), sets.end());
  doc["sets"] = sets;
  if (witness.has_value()) {
    std::vector<std::vector<int>> rows;
    rows.reserve(witness->generators.size());
    for (const Permutation& generator : witness->generators) rows.push_back(generator.images1());
    doc["witness"] = rows;
  }
  return doc;
}

}  // namespace

std::string family_to_text(const SetFamily& family, const std::optional<GroupWitness>& witness) {
  return family_to_json(family, witness).dump(2) + "\n";
}

FamilyDocument family_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("family document is not valid JSON: ") + err.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("sets")) {
      throw std::invalid_argument("family document needs integer n and array sets");
    }
    const int n = doc.at("n").get<int>();
    std::vector<SubsetMask> members;
    for (const json& row : doc.at("sets")) {
      members.push_back(SubsetMask::from_elements(n, row.get<std::vector<int>>()));
    }
    FamilyDocument result;
    if (doc.contains("k") && !doc.at("k").is_null()) {
      result.family = SetFamily(n, doc.at("k").get<int>(), std::move(members));
    } else {
      result.family = SetFamily(n, std::move(members));
    }
    if (doc.contains("witness") && !doc.at("witness").is_null()) {
      GroupWitness witness;
      witness.n = n;
      for (const json& row : doc.at("witness")) {
        Permutation generator = Permutation::from_images1(row.get<std::vector<int>>());
        if (generator.degree() != n) {
          throw std::invalid_argument("witness permutation degree differs from n");
        }
        witness.generators.push_back(std::move(generator));
      }
      result.witness = std::move(witness);
    }
    return result;
  } catch (const json::exception& err) {
    throw std::invalid_argument(std::string("family document has malformed fields: ") +
                                err.what());
  }
}

void save_family_file(const std::filesystem::path& path, const SetFamily& family,
                      const std::optional<GroupWitness>& witness) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << family_to_text(family, witness);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

FamilyDocument load_family_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return family_from_text(buffer.str());
}

}  // namespace symfam
