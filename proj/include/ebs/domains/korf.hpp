#ifndef EBS_DOMAINS_KORF_HPP
#define EBS_DOMAINS_KORF_HPP

#include <string>
#include <vector>

#include "ebs/domains/stp.hpp"

namespace ebs {

class InstanceParseError : public std::runtime_error {
 public:
  explicit InstanceParseError(const std::string& what) : std::runtime_error(what) {}
};

// Loads sliding-tile instances: one per line, 16 whitespace-separated
// integers, position-indexed (value = tile, 0 = blank). Malformed or
// unsolvable lines fail with the line number. The canonical 100-instance
// benchmark set ships in data/korf100.txt.
std::vector<TilePuzzleState> load_korf_instances(const std::string& path);

}  // namespace ebs

#endif  // EBS_DOMAINS_KORF_HPP
