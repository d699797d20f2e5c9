#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgv/bits.hpp"
#include "fgv/gf2.hpp"

namespace fgv {

using Triple = std::array<int, 3>;

/// A finite point set with 3-element lines such that two distinct lines
/// share at most one point.  Points are indices 0..n-1; labels and F2
/// coordinates are optional decoration.
struct LineConfiguration {
  int n = 0;
  std::vector<Triple> lines;        // each triple sorted, list sorted
  std::vector<std::string> labels;  // empty or size n
  int ambient_dim = -1;             // >= 0 when coords are meaningful
  std::vector<gf2::Mask> coords;    // empty or size n

  /// Sort each triple, sort and dedupe the line list.
  void normalize();

  std::string label(int p) const;
};

LineConfiguration configuration_from_point_set(const gf2::PointSet& s,
                                               const std::vector<gf2::Line>& lines);

struct ValidityReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ValidityReport validate(const LineConfiguration& c);

/// Precomputed incidence structure shared by the search routines.
struct ConfigView {
  const LineConfiguration* c = nullptr;
  std::vector<Bitset> adj;              // collinearity graph
  std::vector<int> degree;              // graph degree
  std::vector<std::vector<int>> lines_through;
  std::vector<int> pair_line;           // n*n -> line index or -1

  explicit ConfigView(const LineConfiguration& conf);
  int line_through(int p, int q) const { return pair_line[p * c->n + q]; }
  /// Third point of the line through p and q, or -1.
  int third(int p, int q) const;
};

bool collinear(const LineConfiguration& c, int p, int q);

/// Two lines are coplanar when they lie in an embedded Fano-plane image.
/// A line is coplanar with itself by convention.
bool coplanar(const LineConfiguration& c, int l1, int l2);
bool coplanar(const ConfigView& v, int l1, int l2);

struct IncidenceGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted pairs, sorted list
};

IncidenceGraph incidence_graph(const LineConfiguration& c);

struct IncidenceProfile {
  int points = 0;
  bool connected = false;
  int components = 0;
  int diameter = -1;  // -1 means infinite (disconnected); within-component
                      // distances still populate the counts below
  bool symmetric = false;
  std::vector<long long> v;                        // shared v_i, valid rows
  std::map<std::pair<int, int>, long long> vij;    // shared v_{i,j}
  std::vector<std::vector<long long>> v_per_point;
  std::string asymmetry_witness;  // empty when symmetric

  long long vi(int i) const { return i < static_cast<int>(v.size()) ? v[i] : 0; }
  long long vij_at(int i, int j) const {
    auto it = vij.find({i, j});
    return it == vij.end() ? 0 : it->second;
  }
};

IncidenceProfile profile(const LineConfiguration& c);
IncidenceProfile profile_serial(const LineConfiguration& c);
IncidenceProfile profile_parallel(const LineConfiguration& c);

struct ConfigurationMorphism {
  const LineConfiguration* source = nullptr;
  const LineConfiguration* target = nullptr;
  std::vector<int> point_map;  // size = source->n, injective
};

bool is_morphism(const ConfigurationMorphism& f);
ConfigurationMorphism identity_morphism(const LineConfiguration& c);
ConfigurationMorphism compose(const ConfigurationMorphism& g,
                              const ConfigurationMorphism& f);

/// Product configuration: points are tuples, lines vary in exactly one
/// coordinate along a line of that factor.
LineConfiguration product_configuration(const std::vector<LineConfiguration>& factors);

/// All-pairs graph distances in the collinearity graph (-1 = unreachable).
std::vector<std::vector<int>> distance_matrix(const ConfigView& view);

}  // namespace fgv
