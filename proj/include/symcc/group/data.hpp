#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symcc/group/rep.hpp"

namespace symcc {

class GroupDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupData {
  GroupPtr group;
  std::vector<std::vector<FieldElement>> points;  // points permuted by the generators
  std::vector<GroupRep> irreps;
};

Permutation parse_cycles(const std::string& text, std::size_t degree);
GroupData parse_group_data(const std::string& json_text);
GroupData load_group_data(const std::string& path);
// Looks up "<name>.json" in the shipped data directory (SYMCC_DATA_DIR env var overrides).
GroupData load_builtin_group(const std::string& name);
std::string data_directory();

}  // namespace symcc
