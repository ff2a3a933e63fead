#include <fstream>
#include <istream>
#include <sstream>

#include "closet/commands.hpp"
#include "closet/error.hpp"

namespace closet::cli {

std::vector<training::TrainingItem> parse_manifest(std::istream& in,
                                                   const std::filesystem::path& base_dir) {
  std::vector<training::TrainingItem> items;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> fields;
    for (std::string f; ss >> f;) fields.push_back(f);
    if (fields.empty()) continue;
    const auto at = " at line " + std::to_string(lineno);
    if (fields.size() < 3) throw ConfigError("expected '<path> <label> <kind>'" + at);

    // Label and kind are the last two fields; the path is everything before them.
    const auto label = parse_label(fields[fields.size() - 2]);
    if (!label) throw ConfigError("unknown label '" + fields[fields.size() - 2] + "'" + at);
    ImageKind kind;
    try {
      kind = parse_image_kind(fields.back());
    } catch (const ConfigError&) {
      throw ConfigError("unknown image kind '" + fields.back() + "'" + at);
    }
    std::string path = fields[0];
    for (std::size_t i = 1; i + 2 < fields.size(); ++i) path += " " + fields[i];
    std::filesystem::path p(path);
    if (p.is_relative()) p = base_dir / p;
    items.push_back({p, *label, kind});
  }
  return items;
}

std::vector<training::TrainingItem> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open manifest '" + path.string() + "'");
  return parse_manifest(in, path.parent_path());
}

}  // namespace closet::cli
