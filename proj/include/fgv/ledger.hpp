#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fgv::ledger {

/// Integer formal sum of monomials Theta^a E^b on a blown-up abelian
/// 4-fold.  a+b never exceeds the ambient dimension after reduction.
class DivisorPolynomial {
public:
  static constexpr int kAmbientDim = 4;

  DivisorPolynomial() = default;
  static DivisorPolynomial monomial(int a, int b, long long coeff);
  static DivisorPolynomial theta(long long coeff = 1) { return monomial(1, 0, coeff); }
  static DivisorPolynomial exceptional(long long coeff = 1) {
    return monomial(0, 1, coeff);
  }

  const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }
  bool is_linear() const;

  DivisorPolynomial operator+(const DivisorPolynomial& o) const;
  DivisorPolynomial operator*(const DivisorPolynomial& o) const;

  std::string to_string() const;
  bool operator==(const DivisorPolynomial& o) const = default;

private:
  std::map<std::pair<int, int>, long long> terms_;  // (a,b) -> coefficient
};

/// Multinomial expansion of a linear polynomial to the k-th power.
DivisorPolynomial expand_power(const DivisorPolynomial& base, int k);

/// Top intersection values.  The defaults encode the standard facts:
/// Theta^4 = 4! on a principally polarized abelian 4-fold, mixed
/// monomials vanish (Theta is pulled back, E is exceptional), and
/// E^4 = -1 on the blowup of a point.  They are inputs, not derivations.
struct IntersectionRules {
  int ambient_dim = DivisorPolynomial::kAmbientDim;
  std::map<std::pair<int, int>, long long> top_values;

  static IntersectionRules defaults();
};

/// Sum of coefficient * top value over all (top-degree) terms.
long long evaluate_intersection(const DivisorPolynomial& p, const IntersectionRules& r);

/// (1/2) (2 Theta - 4 E)^4 under the given rules; the halving must be exact.
long long gamma00_degree(const IntersectionRules& r = IntersectionRules::defaults());

struct LedgerEntry {
  std::string name;
  long long degree = 0;
  std::string anchor;  // the identity this entry encodes
};

struct DegreeLedger {
  std::vector<LedgerEntry> entries;
  long long total = 0;
  long long q8_point_count = 0;     // enumerated |Q_8^-|
  long long formula_count = 0;      // 2^3(2^4 - 1) - 1
  bool cross_checks_ok = false;
};

/// cubic 1 + jacobian 54 + boundary 64 = 119, cross-checked against the
/// enumerated point count of the Q_8^- configuration.
DegreeLedger schottky_degree_ledger(
    const IntersectionRules& r = IntersectionRules::defaults());

}  // namespace fgv::ledger
