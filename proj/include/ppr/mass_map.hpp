#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ppr {

// Mass vector indexed by a dense key space of size `domain`. Starts as a hash
// map sized to the touched keys and falls back to a dense array once more
// than a quarter of the domain has been touched. Push solvers keep their
// residue/reserve state in these so a local query never allocates O(n).
template <typename Key>
class MassMap {
 public:
  explicit MassMap(std::size_t domain) : domain_(domain) {}

  double get(Key k) const {
    if (dense_) return vec_[k];
    auto it = map_.find(k);
    return it == map_.end() ? 0.0 : it->second;
  }

  void add(Key k, double x) {
    if (dense_) {
      vec_[k] += x;
      return;
    }
    map_[k] += x;
    maybe_densify();
  }

  void set(Key k, double x) {
    if (dense_) {
      vec_[k] = x;
      return;
    }
    map_[k] = x;
    maybe_densify();
  }

  std::size_t touched() const { return dense_ ? vec_.size() : map_.size(); }
  std::size_t domain() const { return domain_; }
  bool is_dense() const { return dense_; }

  // Visits nonzero entries (dense mode skips exact zeros). Order is
  // unspecified; callers needing determinism must sort.
  template <typename F>
  void for_each(F f) const {
    if (dense_) {
      for (std::size_t k = 0; k < vec_.size(); ++k)
        if (vec_[k] != 0.0) f(static_cast<Key>(k), vec_[k]);
    } else {
      for (const auto& [k, x] : map_) f(k, x);
    }
  }

  std::vector<double> to_dense() const {
    std::vector<double> out(domain_, 0.0);
    for_each([&](Key k, double x) { out[k] = x; });
    return out;
  }

  double sum() const {
    double s = 0.0;
    for_each([&](Key, double x) { s += x; });
    return s;
  }

 private:
  void maybe_densify() {
    if (map_.size() * 4 > domain_) {
      vec_.assign(domain_, 0.0);
      for (const auto& [k, x] : map_) vec_[k] = x;
      map_.clear();
      dense_ = true;
    }
  }

  std::size_t domain_;
  bool dense_ = false;
  std::unordered_map<Key, double> map_;
  std::vector<double> vec_;
};

using NodeMassMap = MassMap<std::uint32_t>;
using EdgeMassMap = MassMap<std::uint64_t>;

}  // namespace ppr
