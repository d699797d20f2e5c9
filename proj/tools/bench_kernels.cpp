// Compares the serial and OpenMP kernels on the quadric and full
// projective point sets and checks that both sides agree.

#include <chrono>
#include <cstdio>

#include "fgv/catalog.hpp"
#include "fgv/configuration.hpp"
#include "fgv/gf2.hpp"

using namespace fgv;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    f();
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

int bench_lines(const char* name, const gf2::PointSet& s, int reps) {
  std::vector<Triple> a, b;
  double ts = time_best_of(reps, [&] { a = gf2::lines_in_point_set_serial(s); });
  double tp = time_best_of(reps, [&] { b = gf2::lines_in_point_set_parallel(s); });
  bool ok = (a == b);
  std::printf("lines    %-12s %6zu pts  serial %.4fs  parallel %.4fs  x%.2f  %s\n",
              name, s.points.size(), ts, tp, ts / tp, ok ? "agree" : "MISMATCH");
  return ok ? 0 : 1;
}

int bench_profile(const char* name, const LineConfiguration& c, int reps) {
  IncidenceProfile a, b;
  double ts = time_best_of(reps, [&] { a = profile_serial(c); });
  double tp = time_best_of(reps, [&] { b = profile_parallel(c); });
  bool ok = (a.v == b.v && a.vij == b.vij && a.diameter == b.diameter &&
             a.symmetric == b.symmetric);
  std::printf("profile  %-12s %6d pts  serial %.4fs  parallel %.4fs  x%.2f  %s\n",
              name, c.n, ts, tp, ts / tp, ok ? "agree" : "MISMATCH");
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;

  for (int n = 3; n <= 4; ++n) {
    auto s = gf2::variety_points(gf2::minus_quadric(n));
    char name[32];
    std::snprintf(name, sizeof name, "Q%d-", 2 * n);
    failures += bench_lines(name, s, 5);
  }
  for (int k = 7; k <= 10; ++k) {
    gf2::PointSet s;
    s.dim = k;
    s.points = gf2::enumerate_projective_points(k);
    char name[32];
    std::snprintf(name, sizeof name, "P^%d", k);
    failures += bench_lines(name, s, k >= 10 ? 1 : 3);
  }

  failures += bench_profile("Q6-", catalog::quadric_configuration(3), 5);
  failures += bench_profile("Q8-", catalog::quadric_configuration(4), 5);
  failures += bench_profile("P^5", catalog::projective_configuration(5), 3);

  return failures == 0 ? 0 : 1;
}
