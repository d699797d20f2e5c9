#include "fgv/configuration.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fgv {

void LineConfiguration::normalize() {
  for (auto& l : lines) std::sort(l.begin(), l.end());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
}

std::string LineConfiguration::label(int p) const {
  if (p < static_cast<int>(labels.size()) && !labels[p].empty()) return labels[p];
  return std::to_string(p);
}

LineConfiguration configuration_from_point_set(const gf2::PointSet& s,
                                               const std::vector<gf2::Line>& lines) {
  LineConfiguration c;
  c.n = static_cast<int>(s.points.size());
  c.ambient_dim = s.dim;
  c.coords.reserve(c.n);
  for (const auto& p : s.points) c.coords.push_back(p.rep.bits);
  c.lines.assign(lines.begin(), lines.end());
  c.normalize();
  return c;
}

ValidityReport validate(const LineConfiguration& c) {
  ValidityReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    r.violations.push_back(std::move(msg));
  };
  std::map<std::pair<int, int>, int> pair_owner;
  for (int li = 0; li < static_cast<int>(c.lines.size()); ++li) {
    const Triple& l = c.lines[li];
    if (l[0] == l[1] || l[1] == l[2] || l[0] == l[2]) {
      fail("line " + std::to_string(li) + " has repeated points");
      continue;
    }
    for (int x : l)
      if (x < 0 || x >= c.n) {
        fail("line " + std::to_string(li) + " references point " + std::to_string(x));
      }
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        std::pair<int, int> key{std::min(l[a], l[b]), std::max(l[a], l[b])};
        auto [it, inserted] = pair_owner.try_emplace(key, li);
        if (!inserted)
          fail("lines " + std::to_string(it->second) + " and " + std::to_string(li) +
               " share points " + std::to_string(key.first) + "," +
               std::to_string(key.second));
      }
  }
  return r;
}

ConfigView::ConfigView(const LineConfiguration& conf)
    : c(&conf),
      adj(conf.n, Bitset(conf.n)),
      degree(conf.n, 0),
      lines_through(conf.n),
      pair_line(static_cast<std::size_t>(conf.n) * conf.n, -1) {
  for (int li = 0; li < static_cast<int>(conf.lines.size()); ++li) {
    const Triple& l = conf.lines[li];
    for (int a = 0; a < 3; ++a) {
      lines_through[l[a]].push_back(li);
      for (int b = 0; b < 3; ++b)
        if (a != b) {
          adj[l[a]].set(l[b]);
          pair_line[static_cast<std::size_t>(l[a]) * conf.n + l[b]] = li;
        }
    }
  }
  for (int p = 0; p < conf.n; ++p) degree[p] = adj[p].count();
}

int ConfigView::third(int p, int q) const {
  int li = line_through(p, q);
  if (li < 0) return -1;
  for (int x : c->lines[li])
    if (x != p && x != q) return x;
  return -1;
}

bool collinear(const LineConfiguration& c, int p, int q) {
  if (p == q) throw std::invalid_argument("collinear: points must be distinct");
  for (const Triple& l : c.lines) {
    bool hp = l[0] == p || l[1] == p || l[2] == p;
    bool hq = l[0] == q || l[1] == q || l[2] == q;
    if (hp && hq) return true;
  }
  return false;
}

// Coplanarity: is there a morphism from the Fano plane whose line image
// contains both l1 and l2?  Aut(Fano) is simply transitive on ordered,
// point-labelled pairs of distinct lines, so it is enough to seed one
// labelled pair on the common point and close under the third-point rule;
// every candidate embedding is a Fano translate of this one.
bool coplanar(const ConfigView& v, int l1, int l2) {
  if (l1 < 0 || l2 < 0 || l1 >= static_cast<int>(v.c->lines.size()) ||
      l2 >= static_cast<int>(v.c->lines.size()))
    throw std::out_of_range("coplanar: bad line index");
  if (l1 == l2) return true;  // self-coplanarity by convention
  const Triple& a = v.c->lines[l1];
  const Triple& b = v.c->lines[l2];
  int s = -1;
  for (int x : a)
    for (int y : b)
      if (x == y) s = x;
  if (s < 0) return false;  // distinct Fano lines always meet
  int a1 = -1, a2 = -1, b1 = -1, b2 = -1;
  for (int x : a) (x == s ? s : (a1 < 0 ? a1 : a2)) = x;
  for (int y : b) (y == s ? s : (b1 < 0 ? b1 : b2)) = y;
  // Fano model {1..7}: lines {1,2,3},{1,4,5},{1,6,7},{2,4,6},{2,5,7},
  // {3,4,7},{3,5,6}.  Seed f1=s, f2=a1, f3=a2, f4=b1, f5=b2.
  int f6 = v.third(a1, b1);
  int f7 = v.third(a1, b2);
  if (f6 < 0 || f7 < 0 || f6 == f7) return false;
  int seed[5] = {s, a1, a2, b1, b2};
  for (int x : seed)
    if (f6 == x || f7 == x) return false;
  return v.third(f6, f7) == s && v.third(a2, b1) == f7 && v.third(a2, b2) == f6;
}

bool coplanar(const LineConfiguration& c, int l1, int l2) {
  return coplanar(ConfigView(c), l1, l2);
}

IncidenceGraph incidence_graph(const LineConfiguration& c) {
  IncidenceGraph g;
  g.n = c.n;
  std::set<std::pair<int, int>> edges;
  for (const Triple& l : c.lines)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        edges.insert({std::min(l[a], l[b]), std::max(l[a], l[b])});
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::vector<std::vector<int>> distance_matrix(const ConfigView& view) {
  const int n = view.c->n;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      view.adj[u].for_each([&](int w) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          q.push(w);
        }
      });
    }
  }
  return dist;
}

namespace {

struct PairStats {
  std::map<std::pair<int, int>, std::pair<long long, long long>> minmax;

  void add(int i, int j, long long val) {
    auto [it, inserted] = minmax.try_emplace({i, j}, std::pair{val, val});
    if (!inserted) {
      it->second.first = std::min(it->second.first, val);
      it->second.second = std::max(it->second.second, val);
    }
  }
  void merge(const PairStats& o) {
    for (const auto& [k, mm] : o.minmax) {
      add(k.first, k.second, mm.first);
      add(k.first, k.second, mm.second);
    }
  }
};

void pair_stats_for_point(const ConfigView& view,
                          const std::vector<std::vector<int>>& dist, int p,
                          PairStats& st) {
  const int n = view.c->n;
  for (int q = 0; q < n; ++q) {
    int i = dist[p][q];
    if (i < 0) continue;
    for (int j = std::max(0, i - 1); j <= i + 1; ++j) {
      long long cnt = 0;
      view.adj[q].for_each([&](int r) {
        if (dist[p][r] == j) ++cnt;
      });
      st.add(i, j, cnt);
    }
  }
}

IncidenceProfile profile_impl(const LineConfiguration& c, bool parallel) {
  ConfigView view(c);
  IncidenceProfile pr;
  pr.points = c.n;
  if (c.n == 0) return pr;

  auto dist = distance_matrix(view);

  // components
  std::vector<int> comp(c.n, -1);
  int ncomp = 0;
  for (int s = 0; s < c.n; ++s) {
    if (comp[s] >= 0) continue;
    for (int t = 0; t < c.n; ++t)
      if (dist[s][t] >= 0) comp[t] = ncomp;
    ++ncomp;
  }
  pr.components = ncomp;
  pr.connected = (ncomp == 1);

  int maxd = 0;
  for (int s = 0; s < c.n; ++s)
    for (int t = 0; t < c.n; ++t) maxd = std::max(maxd, dist[s][t]);
  pr.diameter = pr.connected ? maxd : -1;

  pr.v_per_point.assign(c.n, std::vector<long long>(maxd + 1, 0));
  for (int s = 0; s < c.n; ++s)
    for (int t = 0; t < c.n; ++t)
      if (dist[s][t] >= 0) ++pr.v_per_point[s][dist[s][t]];

  PairStats stats;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      PairStats local;
#pragma omp for schedule(static) nowait
      for (int p = 0; p < c.n; ++p) pair_stats_for_point(view, dist, p, local);
#pragma omp critical
      stats.merge(local);
    }
  } else
#endif
  {
    (void)parallel;
    for (int p = 0; p < c.n; ++p) pair_stats_for_point(view, dist, p, stats);
  }

  pr.symmetric = true;
  for (int p = 1; p < c.n && pr.symmetric; ++p)
    if (pr.v_per_point[p] != pr.v_per_point[0]) {
      pr.symmetric = false;
      pr.asymmetry_witness = "v_i(p) differs between points 0 and " + std::to_string(p);
    }
  for (const auto& [k, mm] : stats.minmax) {
    if (mm.first != mm.second) {
      pr.symmetric = false;
      std::ostringstream os;
      os << "v_{" << k.first << "," << k.second << "} ranges over [" << mm.first
         << "," << mm.second << "]";
      pr.asymmetry_witness = os.str();
    }
  }

  pr.v = pr.v_per_point[0];
  for (const auto& [k, mm] : stats.minmax) pr.vij[k] = mm.first;
  return pr;
}

}  // namespace

IncidenceProfile profile_serial(const LineConfiguration& c) {
  return profile_impl(c, false);
}
IncidenceProfile profile_parallel(const LineConfiguration& c) {
  return profile_impl(c, true);
}
IncidenceProfile profile(const LineConfiguration& c) {
  return profile_impl(c, true);
}

bool is_morphism(const ConfigurationMorphism& f) {
  if (!f.source || !f.target) throw std::invalid_argument("is_morphism: null configuration");
  if (static_cast<int>(f.point_map.size()) != f.source->n)
    throw std::invalid_argument("is_morphism: map size mismatch");
  std::vector<char> seen(f.target->n, 0);
  for (int x : f.point_map) {
    if (x < 0 || x >= f.target->n || seen[x])
      throw std::invalid_argument("is_morphism: map is not an injection into target");
    seen[x] = 1;
  }
  std::set<Triple> target_lines(f.target->lines.begin(), f.target->lines.end());
  for (const Triple& l : f.source->lines) {
    Triple img{f.point_map[l[0]], f.point_map[l[1]], f.point_map[l[2]]};
    std::sort(img.begin(), img.end());
    if (!target_lines.count(img)) return false;
  }
  return true;
}

ConfigurationMorphism identity_morphism(const LineConfiguration& c) {
  ConfigurationMorphism m;
  m.source = &c;
  m.target = &c;
  m.point_map.resize(c.n);
  for (int i = 0; i < c.n; ++i) m.point_map[i] = i;
  return m;
}

ConfigurationMorphism compose(const ConfigurationMorphism& g,
                              const ConfigurationMorphism& f) {
  if (f.target != g.source)
    throw std::invalid_argument("compose: middle configurations differ");
  ConfigurationMorphism h;
  h.source = f.source;
  h.target = g.target;
  h.point_map.reserve(f.point_map.size());
  for (int x : f.point_map) h.point_map.push_back(g.point_map[x]);
  return h;
}

LineConfiguration product_configuration(const std::vector<LineConfiguration>& factors) {
  if (factors.empty())
    throw std::invalid_argument("product_configuration: empty factor list");
  int total = 1;
  std::vector<int> stride(factors.size());
  for (int f = static_cast<int>(factors.size()) - 1; f >= 0; --f) {
    stride[f] = total;
    total *= factors[f].n;
  }
  LineConfiguration c;
  c.n = total;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    // enumerate assignments of the other coordinates
    int others = total / std::max(1, factors[f].n);
    for (int combo = 0; combo < others; ++combo) {
      // decode combo into a base index with coordinate f set to 0
      int base = 0, rem = combo;
      for (std::size_t g = 0; g < factors.size(); ++g) {
        if (g == f) continue;
        int ng = factors[g].n;
        base += (rem % ng) * stride[g];
        rem /= ng;
      }
      for (const Triple& l : factors[f].lines) {
        Triple img{base + l[0] * stride[f], base + l[1] * stride[f],
                   base + l[2] * stride[f]};
        c.lines.push_back(img);
      }
    }
  }
  c.normalize();
  return c;
}

}  // namespace fgv
