#pragma once

#include <string>
#include <vector>

#include "mhopf/pipeline.hpp"

namespace mhopf {

struct GalleryEntry {
  std::string name;
  std::string summary;   // what the instance is
  std::string expected;  // expected verdict, in one line
};

// Built-in instances: positive examples plus deliberately broken negatives.
// "cyclic-n" is a family; any concrete "cyclic-<k>" with k >= 1 is accepted.
const std::vector<GalleryEntry>& gallery_entries();
bool gallery_has(const std::string& name);
Instance gallery_instance(const std::string& name);

}  // namespace mhopf
