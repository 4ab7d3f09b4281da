#include "oracles/orbit_bfs.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

void unite(std::vector<int>& parent, int a, int b) {
  parent[find_root(parent, a)] = find_root(parent, b);
}

}  // namespace

std::map<aw::Vec, aw::Vec> orbit_components(aw::Int len, aw::Int bound, aw::Int level) {
  std::vector<aw::Vec> all;
  aw::Vec cur(static_cast<std::size_t>(len), -bound);
  for (;;) {
    all.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == bound) {
      cur[i] = -bound;
      ++i;
    }
    if (i == cur.size()) break;
    ++cur[i];
  }

  std::map<aw::Vec, int> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = static_cast<int>(i);

  std::vector<int> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const aw::Vec& s = all[i];
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
      if (s[p] == s[p + 1]) continue;
      aw::Vec t = s;
      std::swap(t[p], t[p + 1]);
      unite(parent, static_cast<int>(i), index.at(t));
    }
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        if (s[a] + level > bound || s[b] - level < -bound) continue;
        aw::Vec t = s;
        t[a] += level;
        t[b] -= level;
        unite(parent, static_cast<int>(i), index.at(t));
      }
  }

  std::vector<const aw::Vec*> smallest(all.size(), nullptr);
  for (std::size_t i = 0; i < all.size(); ++i) {
    int r = find_root(parent, static_cast<int>(i));
    if (!smallest[r] || all[i] < *smallest[r]) smallest[r] = &all[i];
  }
  std::map<aw::Vec, aw::Vec> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    out[all[i]] = *smallest[find_root(parent, static_cast<int>(i))];
  return out;
}

}  // namespace oracle
