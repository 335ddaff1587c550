#pragma once

#include <map>
#include <set>
#include <vector>

namespace susy {

// Disjoint sets over an ordered key type. The representative of a class is
// its smallest element, which keeps every derived identifier deterministic.
template <class Key>
class UnionFind {
 public:
  UnionFind() = default;
  template <class It>
  UnionFind(It first, It last) {
    for (; first != last; ++first) add(*first);
  }

  void add(const Key& k) { parent_.emplace(k, k); }

  Key find(const Key& k) {
    Key root = k;
    while (parent_.at(root) != root) root = parent_.at(root);
    Key cur = k;
    while (parent_.at(cur) != root) {
      Key next = parent_.at(cur);
      parent_[cur] = root;
      cur = next;
    }
    return root;
  }

  void unite(const Key& a, const Key& b) {
    Key ra = find(a);
    Key rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
  }

  std::vector<std::set<Key>> classes() {
    std::map<Key, std::set<Key>> by_root;
    for (const auto& [k, p] : parent_) by_root[find(k)].insert(k);
    std::vector<std::set<Key>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
  }

 private:
  std::map<Key, Key> parent_;
};

}  // namespace susy
