#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "symfam/permutation.hpp"
#include "symfam/set_family.hpp"

namespace symfam {

// A family file holds one family plus an optional symmetry witness. The text
// form is canonical: writing any family twice yields identical bytes.
struct FamilyDocument {
  SetFamily family = SetFamily(1, std::vector<SubsetMask>{});
  std::optional<GroupWitness> witness;
};

// Serializes to the canonical text form: fields k (null when the family is
// not uniform), n, sets as sorted 1-based element arrays in ascending order,
// and witness as 1-based permutation image rows when present.
std::string family_to_text(const SetFamily& family,
                           const std::optional<GroupWitness>& witness = std::nullopt);

// Parses the text form, re-canonicalizing members and validating the witness
// degree against n. Malformed documents raise std::invalid_argument.
FamilyDocument family_from_text(const std::string& text);

void save_family_file(const std::filesystem::path& path, const SetFamily& family,
                      const std::optional<GroupWitness>& witness = std::nullopt);

FamilyDocument load_family_file(const std::filesystem::path& path);

}  // namespace symfam
