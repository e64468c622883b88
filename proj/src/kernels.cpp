#include "ialg/kernels.hpp"

#include <algorithm>
#include <random>

#ifdef IALG_HAVE_OPENMP
#include <omp.h>
#endif

namespace ialg {

namespace {

void variance_row(const ImplicativeStructure& s, int a, std::vector<Violation>& out) {
  const int n = s.n();
  for (int a2 = 0; a2 < n; ++a2) {
    if (!s.leq(a2, a)) continue;
    for (int b = 0; b < n; ++b)
      for (int b2 = 0; b2 < n; ++b2) {
        if (!s.leq(b, b2)) continue;
        if (!s.leq(s.arrow(a, b), s.arrow(a2, b2)))
          out.push_back(Violation{Violation::Law::Variance, a, a2, b, b2, 0});
      }
  }
}

bool meet_commutes(const ImplicativeStructure& s, int a, Mask B) {
  int lhs = s.arrow(a, s.lat.meet(B));
  int rhs = s.top();
  for (int b : MaskBits(B)) rhs = s.lat.meet2(rhs, s.arrow(a, b));
  return lhs == rhs;
}

void meet_commutation_row(const ImplicativeStructure& s, int a, std::vector<Violation>& out) {
  const Mask all = full_mask(s.n());
  const Mask first = s.kind == Kind::Full ? 0 : 1;
  for (Mask B = first; B <= all; ++B)
    if (!meet_commutes(s, a, B))
      out.push_back(Violation{Violation::Law::MeetCommutation, a, -1, -1, -1, B});
}

bool join_compat_cell(const ImplicativeStructure& s, Mask A, int b) {
  int lhs = s.top();
  for (int a : MaskBits(A)) lhs = s.lat.meet2(lhs, s.arrow(a, b));
  return lhs == s.arrow(s.lat.join(A), b);
}

}  // namespace

std::vector<Violation> variance_violations_serial(const ImplicativeStructure& s) {
  std::vector<Violation> out;
  for (int a = 0; a < s.n(); ++a) variance_row(s, a, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> variance_violations_parallel(const ImplicativeStructure& s) {
#ifdef IALG_HAVE_OPENMP
  const int n = s.n();
  std::vector<std::vector<Violation>> per_row(n);
#pragma omp parallel for schedule(dynamic)
  for (int a = 0; a < n; ++a) variance_row(s, a, per_row[a]);
  std::vector<Violation> out;
  for (auto& v : per_row) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
#else
  return variance_violations_serial(s);
#endif
}

std::vector<Violation> meet_commutation_violations_serial(const ImplicativeStructure& s) {
  std::vector<Violation> out;
  for (int a = 0; a < s.n(); ++a) meet_commutation_row(s, a, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Violation> meet_commutation_violations_parallel(const ImplicativeStructure& s) {
#ifdef IALG_HAVE_OPENMP
  const int n = s.n();
  std::vector<std::vector<Violation>> per_row(n);
#pragma omp parallel for schedule(dynamic)
  for (int a = 0; a < n; ++a) meet_commutation_row(s, a, per_row[a]);
  std::vector<Violation> out;
  for (auto& v : per_row) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
#else
  return meet_commutation_violations_serial(s);
#endif
}

std::vector<Violation> meet_commutation_violations_sampled(const ImplicativeStructure& s,
                                                           std::uint64_t seed, int samples) {
  const int n = s.n();
  std::vector<Mask> subsets;
  if (s.kind == Kind::Full) subsets.push_back(0);
  for (int i = 0; i < n; ++i) {
    subsets.push_back(mask_bit(i));
    for (int j = i + 1; j < n; ++j) subsets.push_back(mask_bit(i) | mask_bit(j));
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    Mask B = rng() & full_mask(n);
    if (B == 0 && s.kind == Kind::Quasi) B = mask_bit(static_cast<int>(rng() % n));
    subsets.push_back(B);
  }
  std::vector<Violation> out;
  for (int a = 0; a < n; ++a)
    for (Mask B : subsets)
      if (!meet_commutes(s, a, B))
        out.push_back(Violation{Violation::Law::MeetCommutation, a, -1, -1, -1, B});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

JoinCompatReport join_compat_scan_serial(const ImplicativeStructure& s) {
  const Mask all = full_mask(s.n());
  for (Mask A = 0; A <= all; ++A)
    for (int b = 0; b < s.n(); ++b)
      if (!join_compat_cell(s, A, b)) return JoinCompatReport{false, true, 0, A, b};
  return JoinCompatReport{};
}

JoinCompatReport join_compat_scan_parallel(const ImplicativeStructure& s) {
#ifdef IALG_HAVE_OPENMP
  const std::int64_t total = std::int64_t{1} << s.n();
  Mask best_subset = 0;
  int best_b = -1;
  std::int64_t best_key = total * s.n();  // beyond any real witness
#pragma omp parallel
  {
    Mask my_subset = 0;
    int my_b = -1;
    std::int64_t my_key = best_key;
#pragma omp for schedule(static)
    for (std::int64_t A = 0; A < total; ++A) {
      if (my_b >= 0) continue;  // this thread already has a witness
      for (int b = 0; b < s.n(); ++b)
        if (!join_compat_cell(s, static_cast<Mask>(A), b)) {
          my_subset = static_cast<Mask>(A);
          my_b = b;
          my_key = A * s.n() + b;
          break;
        }
    }
#pragma omp critical
    if (my_b >= 0 && my_key < best_key) {
      best_key = my_key;
      best_subset = my_subset;
      best_b = my_b;
    }
  }
  if (best_b >= 0) return JoinCompatReport{false, true, 0, best_subset, best_b};
  return JoinCompatReport{};
#else
  return join_compat_scan_serial(s);
#endif
}

}  // namespace ialg
