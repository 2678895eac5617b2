#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cvxgeo/mask.hpp"

namespace cvx {

/// Named finite universe with a fixed element order; element i maps to bit i.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > kMaxGroundSize)
      throw std::invalid_argument("ground set size must be between 1 and 64");
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if (labels_[i].empty())
        throw std::invalid_argument("ground set labels must be non-empty");
      if (!index_.emplace(labels_[i], i).second)
        throw std::invalid_argument("duplicate ground set label: " + labels_[i]);
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full() const { return full_mask(size()); }
  bool valid(Mask m) const { return subset(m, full()); }

  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw std::invalid_argument("unknown element: " + label);
    return it->second;
  }

  bool contains_label(const std::string& label) const { return index_.count(label) != 0; }

  /// Parses a list of labels into a mask.
  Mask mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(index_of(l));
    return m;
  }

  std::vector<std::string> labels_of(Mask m) const {
    std::vector<std::string> out;
    for (int i : elements_of(m)) out.push_back(labels_[i]);
    return out;
  }

  /// Renders a mask as "{a,b}" (or "{}" for the empty set).
  std::string to_string(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (int i : elements_of(m)) {
      if (!first) out += ",";
      out += labels_[i];
      first = false;
    }
    return out + "}";
  }

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// Ground set of a fiber bundle: fiber elements concatenated in base-element
/// order. Fiber labels are kept as-is when globally distinct; otherwise every
/// element is requalified as "<base label>.<fiber label>" so the result is
/// reproducible. Resolutions and lexicographic sums share this rule.
inline GroundSet fiber_union_ground(const GroundSet& base,
                                    const std::vector<const GroundSet*>& fibers) {
  if (static_cast<int>(fibers.size()) != base.size())
    throw std::invalid_argument("one fiber required per base element");
  std::unordered_map<std::string, int> seen;
  bool distinct = true;
  std::size_t total = 0;
  for (const GroundSet* f : fibers) {
    total += static_cast<std::size_t>(f->size());
    for (const auto& l : f->labels())
      if (++seen[l] > 1) distinct = false;
  }
  if (total > kMaxGroundSize)
    throw std::invalid_argument("fiber union exceeds 64 elements");
  std::vector<std::string> labels;
  labels.reserve(total);
  for (int x = 0; x < base.size(); ++x)
    for (const auto& l : fibers[x]->labels())
      labels.push_back(distinct ? l : base.label(x) + "." + l);
  return GroundSet(std::move(labels));
}

}  // namespace cvx
