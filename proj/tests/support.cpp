#include "support.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace prism::testing {

const Snapshot& snapshot(const GroupId& g, unsigned bound) {
  static std::map<std::pair<std::string, unsigned>, std::unique_ptr<Snapshot>> cache;
  auto& slot = cache[{g.str(), bound}];
  if (!slot) slot = std::make_unique<Snapshot>(flagged_snapshot(g, bound));
  return *slot;
}

std::string source_path(const std::string& rel) { return std::string(PRISM_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Height point_height(const FlaggedPriestley& p, const HeightAssignment& h, const std::string& name) {
  return h.points[p.index_of(name)];
}

Height family_height(const FlaggedPriestley& p, const HeightAssignment& h, const std::string& id) {
  return h.families[*p.family_index(id)];
}

}  // namespace prism::testing
