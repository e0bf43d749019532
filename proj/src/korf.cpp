#include "ebs/domains/korf.hpp"

#include <fstream>
#include <sstream>

namespace ebs {

std::vector<TilePuzzleState> load_korf_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceParseError("cannot open instance file: " + path);
  std::vector<TilePuzzleState> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ss(line);
    std::array<std::uint8_t, 16> tiles{};
    for (int i = 0; i < 16; ++i) {
      int v = -1;
      if (!(ss >> v) || v < 0 || v > 15) {
        throw InstanceParseError("line " + std::to_string(lineno) + ": expected 16 tiles in 0..15");
      }
      tiles[i] = static_cast<std::uint8_t>(v);
    }
    int extra;
    if (ss >> extra) {
      throw InstanceParseError("line " + std::to_string(lineno) + ": trailing tokens");
    }
    TilePuzzleState s;
    try {
      s = StpSpace::make_state(tiles);
    } catch (const std::invalid_argument& e) {
      throw InstanceParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!StpSpace::solvable(s)) {
      throw InstanceParseError("line " + std::to_string(lineno) + ": unsolvable instance");
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace ebs
