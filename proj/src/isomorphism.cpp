#include "fgv/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgv {

namespace {

std::vector<int> assignment_order(const ConfigView& a, int first) {
  const int n = a.c->n;
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::vector<int> mapped_nbrs(n, 0);
  auto place = [&](int u) {
    order.push_back(u);
    placed[u] = 1;
    a.adj[u].for_each([&](int w) { ++mapped_nbrs[w]; });
  };
  if (first >= 0) place(first);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    for (int u = 0; u < n; ++u) {
      if (placed[u]) continue;
      if (best < 0 || mapped_nbrs[u] > mapped_nbrs[best] ||
          (mapped_nbrs[u] == mapped_nbrs[best] && a.degree[u] > a.degree[best]))
        best = u;
    }
    place(best);
  }
  return order;
}

struct IsoSearch {
  const ConfigView& a;
  const ConfigView& b;
  std::vector<int> order;
  std::vector<int> map;    // src -> dst
  std::vector<char> used;  // dst
  bool count_all = false;
  std::uint64_t count = 0;
  std::optional<std::vector<int>> witness;

  IsoSearch(const ConfigView& a_, const ConfigView& b_)
      : a(a_), b(b_), map(a_.c->n, -1), used(b_.c->n, 0) {}

  bool consistent(int u, int x) const {
    if (a.degree[u] != b.degree[x]) return false;
    for (int d = 0; d < static_cast<int>(order.size()); ++d) {
      int v = order[d];
      int y = map[v];
      if (y < 0) break;
      if (v == u) continue;
      if (a.adj[u].test(v) != b.adj[x].test(y)) return false;
    }
    // every source line through u whose other points are mapped must land
    // on a line of the target
    for (int li : a.lines_through[u]) {
      const Triple& l = a.c->lines[li];
      int p = -1, q = -1;
      for (int z : l)
        if (z != u) (p < 0 ? p : q) = z;
      if (map[p] >= 0 && map[q] >= 0 && b.third(map[p], map[q]) != x) return false;
    }
    return true;
  }

  // returns true when a witness was found and the search should stop
  bool run(std::size_t depth) {
    if (depth == order.size()) {
      ++count;
      if (!count_all) {
        witness = map;
        return true;
      }
      return false;
    }
    int u = order[depth];
    for (int x = 0; x < b.c->n; ++x) {
      if (used[x] || !consistent(u, x)) continue;
      map[u] = x;
      used[x] = 1;
      if (run(depth + 1)) return true;
      map[u] = -1;
      used[x] = 0;
    }
    return false;
  }
};

bool shape_matches(const LineConfiguration& a, const LineConfiguration& b) {
  if (a.n != b.n || a.lines.size() != b.lines.size()) return false;
  ConfigView va(a), vb(b);
  auto da = va.degree, db = vb.degree;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const LineConfiguration& a,
                                               const LineConfiguration& b) {
  if (!shape_matches(a, b)) return std::nullopt;
  ConfigView va(a), vb(b);
  IsoSearch s(va, vb);
  s.order = assignment_order(va, -1);
  s.run(0);
  return s.witness;
}

std::optional<std::vector<int>> find_isomorphism_fixing(const LineConfiguration& a,
                                                        const LineConfiguration& b,
                                                        int src, int dst) {
  if (!shape_matches(a, b)) return std::nullopt;
  ConfigView va(a), vb(b);
  IsoSearch s(va, vb);
  s.order = assignment_order(va, src);
  if (!s.consistent(src, dst)) return std::nullopt;
  s.map[src] = dst;
  s.used[dst] = 1;
  s.run(1);
  return s.witness;
}

std::uint64_t automorphism_group_order(const LineConfiguration& c) {
  ConfigView v(c);
  IsoSearch s(v, v);
  s.order = assignment_order(v, -1);
  s.count_all = true;
  s.run(0);
  return s.count;
}

bool is_point_transitive(const LineConfiguration& c) {
  if (c.n <= 1) return true;
  std::vector<std::vector<int>> gens;
  std::vector<char> in_orbit(c.n, 0);
  in_orbit[0] = 1;
  auto close_orbit = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& g : gens)
        for (int p = 0; p < c.n; ++p)
          if (in_orbit[p] && !in_orbit[g[p]]) {
            in_orbit[g[p]] = 1;
            grew = true;
          }
    }
  };
  for (int q = 1; q < c.n; ++q) {
    if (in_orbit[q]) continue;
    auto w = find_isomorphism_fixing(c, c, 0, q);
    if (!w) return false;
    gens.push_back(*w);
    close_orbit();
  }
  return true;
}

std::optional<std::vector<int>> graph_isomorphism(const std::vector<Bitset>& a,
                                                  const std::vector<Bitset>& b) {
  const int n = static_cast<int>(a.size());
  if (n != static_cast<int>(b.size())) return std::nullopt;
  std::vector<int> da(n), db(n);
  for (int i = 0; i < n; ++i) {
    da[i] = a[i].count();
    db[i] = b[i].count();
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // assignment order: most already-placed neighbours first
  std::vector<int> order;
  {
    std::vector<char> placed(n, 0);
    std::vector<int> mn(n, 0);
    while (static_cast<int>(order.size()) < n) {
      int best = -1;
      for (int u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (best < 0 || mn[u] > mn[best] || (mn[u] == mn[best] && da[u] > da[best]))
          best = u;
      }
      order.push_back(best);
      placed[best] = 1;
      a[best].for_each([&](int w) { ++mn[w]; });
    }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](int u, int x) {
    if (da[u] != db[x]) return false;
    for (int v : order) {
      if (map[v] < 0) break;
      if (v == u) continue;
      if (a[u].test(v) != b[x].test(map[v])) return false;
    }
    return true;
  };
  std::optional<std::vector<int>> witness;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) {
      witness = map;
      return true;
    }
    int u = order[depth];
    for (int x = 0; x < n; ++x) {
      if (used[x] || !consistent(u, x)) continue;
      map[u] = x;
      used[x] = 1;
      if (self(self, depth + 1)) return true;
      map[u] = -1;
      used[x] = 0;
    }
    return false;
  };
  rec(rec, 0);
  return witness;
}

}  // namespace fgv
