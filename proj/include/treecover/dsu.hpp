#pragma once

#include <vector>

namespace tc {

// union-by-size without path compression so unions can be rolled back
struct DsuUndo {
  std::vector<int> p, sz;
  struct Rec {
    int child, root;
  };
  std::vector<Rec> hist;

  explicit DsuUndo(int n = 0) { reset(n); }
  void reset(int n) {
    p.resize(n);
    sz.assign(n, 1);
    for (int i = 0; i < n; ++i) p[i] = i;
    hist.clear();
  }
  int find(int v) const {
    while (p[v] != v) v = p[v];
    return v;
  }
  bool connected(int a, int b) const { return find(a) == find(b); }
  // returns false (and records nothing) when already connected
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (sz[a] < sz[b]) std::swap(a, b);
    p[b] = a;
    sz[a] += sz[b];
    hist.push_back({b, a});
    return true;
  }
  size_t mark() const { return hist.size(); }
  void rollback(size_t m) {
    while (hist.size() > m) {
      auto r = hist.back();
      hist.pop_back();
      sz[r.root] -= sz[r.child];
      p[r.child] = r.child;
    }
  }
};

}  // namespace tc
