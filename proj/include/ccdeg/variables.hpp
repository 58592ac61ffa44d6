#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ccdeg {

// Ordered table of variable names. Rank is the position in the listing;
// monomial orders refer to ranks, never to names.
class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names) {
    for (auto& n : names) add(n);
  }

  int add(const std::string& name) {
    if (index_.count(name)) throw std::invalid_argument("duplicate variable: " + name);
    int r = static_cast<int>(names_.size());
    index_.emplace(name, r);
    names_.push_back(name);
    return r;
  }

  int rank(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown variable: " + name);
    return it->second;
  }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  const std::string& name(int rank) const { return names_.at(rank); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const VariableTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VariableTable>;

}  // namespace ccdeg
