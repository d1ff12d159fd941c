// Wall-clock comparison of the serial reference loops against the OpenMP
// kernels, on the sample-parallel verification work.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "torcone/verify.hpp"

using namespace torcone;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename Fn>
double timed(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds(t0, std::chrono::steady_clock::now());
}

} // namespace

int main(int argc, char** argv) {
  int samples = 400;
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--samples") samples = std::atoi(argv[i + 1]);

  std::printf("threads: %d, samples: %d\n", omp_get_max_threads(), samples);
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

  int mismatches = 0;
  auto row = [&](const char* name, auto&& run) {
    VerificationReport rs, rp;
    double ts = timed([&] { rs = run(ExecMode::Serial); });
    double tp = timed([&] { rp = run(ExecMode::Parallel); });
    bool same = rs.checked == rp.checked && rs.failures == rp.failures &&
                rs.min_margin == rp.min_margin;
    if (!same) ++mismatches;
    std::printf("%-28s %10.3f %10.3f %7.2fx%s\n", name, ts, tp, ts / (tp > 0 ? tp : 1e-9),
                same ? "" : "  REPORT MISMATCH");
  };

  row("contact beta (3,2)", [&](ExecMode m) {
    ManifoldChart c = ManifoldChart::tk_sphere(3, 2);
    return verify_contact_condition(c, beta_form(c), samples, 7, m);
  });
  row("contact beta (4,2)", [&](ExecMode m) {
    ManifoldChart c = ManifoldChart::tk_sphere(4, 2);
    return verify_contact_condition(c, beta_form(c), samples, 7, m);
  });
  row("contact alpha (T2S3)", [&](ExecMode m) {
    ManifoldChart c = ManifoldChart::t2s3();
    return verify_contact_condition(c, alpha_eq_form(c), samples, 7, m);
  });
  row("moment containment (4,2)", [&](ExecMode m) {
    return verify_moment_containment(4, 2, samples, 7, m);
  });
  row("weakfill table+search", [&](ExecMode m) {
    std::vector<Rational> grid = {Rational(0), Rational(1), Rational(10), Rational(100)};
    return verify_weak_fill(samples, grid, 7, m).report;
  });

  return mismatches == 0 ? 0 : 1;
}
