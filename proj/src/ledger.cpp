#include "fgv/ledger.hpp"

#include <sstream>
#include <stdexcept>

#include "fgv/gf2.hpp"

namespace fgv::ledger {

DivisorPolynomial DivisorPolynomial::monomial(int a, int b, long long coeff) {
  if (a < 0 || b < 0 || a + b > kAmbientDim)
    throw std::invalid_argument("DivisorPolynomial: exponents out of range");
  DivisorPolynomial p;
  if (coeff != 0) p.terms_[{a, b}] = coeff;
  return p;
}

bool DivisorPolynomial::is_linear() const {
  for (const auto& [ab, c] : terms_)
    if (ab.first + ab.second != 1) return false;
  return true;
}

DivisorPolynomial DivisorPolynomial::operator+(const DivisorPolynomial& o) const {
  DivisorPolynomial r = *this;
  for (const auto& [ab, c] : o.terms_) {
    r.terms_[ab] += c;
    if (r.terms_[ab] == 0) r.terms_.erase(ab);
  }
  return r;
}

DivisorPolynomial DivisorPolynomial::operator*(const DivisorPolynomial& o) const {
  DivisorPolynomial r;
  for (const auto& [ab1, c1] : terms_)
    for (const auto& [ab2, c2] : o.terms_) {
      int a = ab1.first + ab2.first;
      int b = ab1.second + ab2.second;
      if (a + b > kAmbientDim)
        throw std::invalid_argument("DivisorPolynomial: product exceeds ambient dim");
      r.terms_[{a, b}] += c1 * c2;
      if (r.terms_[{a, b}] == 0) r.terms_.erase({a, b});
    }
  return r;
}

std::string DivisorPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [ab, c] = *it;
    if (!first && c >= 0) os << "+";
    first = false;
    os << c;
    if (ab.first > 0) os << "*T^" << ab.first;
    if (ab.second > 0) os << "*E^" << ab.second;
  }
  return os.str();
}

DivisorPolynomial expand_power(const DivisorPolynomial& base, int k) {
  if (k < 0) throw std::invalid_argument("expand_power: negative exponent");
  if (!base.is_linear())
    throw std::invalid_argument("expand_power: base must be linear");
  DivisorPolynomial r = DivisorPolynomial::monomial(0, 0, 1);
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

IntersectionRules IntersectionRules::defaults() {
  IntersectionRules r;
  r.top_values[{4, 0}] = 24;  // Theta^4 = 4!
  r.top_values[{0, 4}] = -1;  // E^4 = (-1)^3 for the blowup of a point
  // mixed Theta^a E^b (a, b >= 1) are zero: disjoint supports
  return r;
}

long long evaluate_intersection(const DivisorPolynomial& p,
                                const IntersectionRules& r) {
  long long total = 0;
  for (const auto& [ab, c] : p.terms()) {
    if (ab.first + ab.second != r.ambient_dim)
      throw std::invalid_argument(
          "evaluate_intersection: term is not of top degree");
    auto it = r.top_values.find(ab);
    if (it != r.top_values.end()) total += c * it->second;
  }
  return total;
}

long long gamma00_degree(const IntersectionRules& r) {
  DivisorPolynomial cls =
      DivisorPolynomial::theta(2) + DivisorPolynomial::exceptional(-4);
  long long doubled = evaluate_intersection(expand_power(cls, 4), r);
  if (doubled % 2 != 0)
    throw std::logic_error(
        "gamma00_degree: (2T-4E)^4 is odd under these rules; inconsistent rules");
  return doubled / 2;
}

DegreeLedger schottky_degree_ledger(const IntersectionRules& r) {
  DegreeLedger l;
  l.entries.push_back({"cubic-threefold locus", 1, "local degree one"});
  l.entries.push_back(
      {"jacobian locus", 2 * 27, "double cover of the 27 lines: 54"});
  l.entries.push_back({"boundary locus", gamma00_degree(r), "(1/2)(2T-4E)^4 = 64"});
  for (const auto& e : l.entries) l.total += e.degree;
  l.formula_count = gf2::point_count_formula(4);
  l.q8_point_count = static_cast<long long>(
      gf2::variety_points(gf2::minus_quadric(4)).points.size());
  l.cross_checks_ok = (l.total == l.formula_count && l.total == l.q8_point_count);
  if (!l.cross_checks_ok)
    throw std::logic_error("schottky_degree_ledger: total fails the |Q_8^-| cross-check");
  return l;
}

}  // namespace fgv::ledger
