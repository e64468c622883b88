#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "ialg/constructors.hpp"
#include "ialg/corpus.hpp"
#include "ialg/kernels.hpp"

#ifdef IALG_HAVE_OPENMP
#include <omp.h>
#endif

using namespace ialg;

namespace {

using Clock = std::chrono::steady_clock;

double best_of_ms(int reps, const std::function<void()>& fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

struct BenchCase {
  std::string name;
  ImplicativeStructure s;
  bool scan_subsets;  // 2^n kernels only while n stays reasonable
};

int run(bool quick) {
  const int reps = quick ? 1 : 3;
#ifdef IALG_HAVE_OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("kernel benchmark quick=%s threads=%d\n", quick ? "yes" : "no", threads);

  FiniteLattice c3 = chain_lattice(3), c4 = chain_lattice(4), c5 = chain_lattice(5);
  FiniteLattice d4 = diamond_lattice();
  auto h = [](const FiniteLattice& lat) { return make_heyting(lat); };

  std::vector<BenchCase> cases;
  cases.push_back({"d4xd4 n=16", make_product({h(d4), h(d4)}), true});
  if (!quick) {
    cases.push_back({"c3xc3xb2 n=18", make_product({h(c3), h(c3), h(chain_lattice(2))}), true});
    cases.push_back({"c5xc4 n=20", make_product({h(c5), h(c4)}), true});
    cases.push_back({"d4xd4xd4 n=64", make_product({h(d4), h(d4), h(d4)}), false});
  }

  bool all_agree = true;
  for (const auto& bc : cases) {
    std::printf("case %s\n", bc.name.c_str());
    {
      std::vector<Violation> serial, parallel;
      double ts = best_of_ms(reps, [&] { serial = variance_violations_serial(bc.s); });
      double tp = best_of_ms(reps, [&] { parallel = variance_violations_parallel(bc.s); });
      bool agree = serial == parallel;
      all_agree &= agree;
      std::printf("  variance  serial %8.2fms  parallel %8.2fms  speedup %.2fx  agree %s\n",
                  ts, tp, tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");
    }
    if (bc.scan_subsets) {
      std::vector<Violation> serial, parallel;
      double ts = best_of_ms(reps, [&] { serial = meet_commutation_violations_serial(bc.s); });
      double tp =
          best_of_ms(reps, [&] { parallel = meet_commutation_violations_parallel(bc.s); });
      bool agree = serial == parallel;
      all_agree &= agree;
      std::printf("  meets     serial %8.2fms  parallel %8.2fms  speedup %.2fx  agree %s\n",
                  ts, tp, tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");
    }
    if (bc.scan_subsets) {
      JoinCompatReport serial, parallel;
      double ts = best_of_ms(reps, [&] { serial = join_compat_scan_serial(bc.s); });
      double tp = best_of_ms(reps, [&] { parallel = join_compat_scan_parallel(bc.s); });
      bool agree = serial.compatible == parallel.compatible &&
                   serial.subset == parallel.subset && serial.b == parallel.b;
      all_agree &= agree;
      std::printf("  joins     serial %8.2fms  parallel %8.2fms  speedup %.2fx  agree %s\n",
                  ts, tp, tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");
    }
  }
  std::printf("agreement %s\n", all_agree ? "PASS" : "FAIL");
  return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
    } else {
      std::fprintf(stderr, "usage: bench_kernels [--quick]\n");
      return 2;
    }
  }
  return run(quick);
}
