#include <chrono>
#include <iomanip>
#include <iostream>

#include "qf2/isometry.hpp"
#include "qf2/span.hpp"

using namespace qf2;

namespace {

// Serial reference vs the OpenMP variant of each enumeration kernel: same
// results required, wall time reported for both.
template <typename Fn>
double time_of(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void report(const std::string& name, double serial, double parallel, bool agree,
            std::size_t count) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(10) << serial << " s"
            << std::setw(10) << parallel << " s  x" << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << "  ("
            << count << " results, " << (agree ? "identical" : "MISMATCH")
            << ")\n";
}

}  // namespace

int main() {
  QuadSpace h0 = standard_h0(), h1 = standard_h1();
  QuadSpace a0 = orthogonal_sum(h0, h0);
  QuadSpace a1 = orthogonal_sum(h1, h0);
  QuadSpace big = orthogonal_sum(a0, h1);

  std::cout << "kernel                                serial   parallel  "
               "speedup\n";
  {
    std::vector<BitMatrix> s, p;
    double ts = time_of([&] { s = all_isometries(a0, a0, Exec::serial); });
    double tp = time_of([&] { p = all_isometries(a0, a0, Exec::parallel); });
    report("isometry-scan dim 4", ts, tp, s == p, s.size());
  }
  {
    std::vector<QuadMap> s, p;
    double ts = time_of([&] { s = enumerate_homs(a0, big, Exec::serial); });
    double tp = time_of([&] { p = enumerate_homs(a0, big, Exec::parallel); });
    report("hom-search dim 4 into dim 6", ts, tp, s == p, s.size());
  }
  {
    std::vector<SpanMorphism> s, p;
    double ts = time_of([&] { s = enumerate_span_homs(a0, h0, Exec::serial); });
    double tp = time_of([&] { p = enumerate_span_homs(a0, h0, Exec::parallel); });
    report("span-enumeration ambient 6", ts, tp, s == p, s.size());
  }
  {
    std::vector<SpanMorphism> s, p;
    double ts = time_of([&] { s = enumerate_span_homs(a0, a1, Exec::serial); });
    double tp = time_of([&] { p = enumerate_span_homs(a0, a1, Exec::parallel); });
    report("span-enumeration ambient 8", ts, tp, s == p, s.size());
  }
  return 0;
}
