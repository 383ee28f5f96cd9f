// Benchmarks the parallel kernels against their serial reference
// implementations and checks that both produce identical tables.

#include "CLI11.hpp"

#include "trs/code.hpp"
#include "trs/deephole.hpp"
#include "trs/report.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(const std::function<void()>& fn) {
  Clock::time_point t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset and deep-set kernel benchmark"};
  std::uint64_t q = 9;
  std::int64_t k = -1;
  std::int64_t eta = 1;
  std::string eval_set = "units";
  std::uint32_t repeat = 3;
  app.add_option("--q", q, "field size");
  app.add_option("--k", k, "dimension; default covers several");
  app.add_option("--eta", eta, "twist coefficient element index");
  app.add_option("--eval-set", eval_set, "units or full");
  app.add_option("--repeat", repeat, "timing repetitions");
  CLI11_PARSE(app, argc, argv);

  try {
    auto [p, m] = trs::split_prime_power(q);
    const trs::Field& F = trs::get_field(p, m);
    std::vector<trs::Fe> A =
        eval_set == "full" ? trs::full_eval_set(F) : trs::unit_eval_set(F);
    std::uint32_t n = std::uint32_t(A.size());

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "q=" << F.q() << " A=" << eval_set << " n=" << n << "\n\n";
    std::cout << "k  kernel           serial_ms  parallel_ms  speedup  match\n";

    std::vector<std::uint32_t> ks;
    if (k >= 1)
      ks.push_back(std::uint32_t(k));
    else
      for (std::uint32_t kk = n / 3; kk + 2 <= n && ks.size() < 3; ++kk)
        ks.push_back(kk);

    bool all_match = true;
    for (std::uint32_t kk : ks) {
      trs::TrsParams P = trs::make_trs_params(F, A, kk, kk - 1, trs::Fe(eta));
      trs::LinearCode C = trs::trs_code(P);

      trs::CosetTable ref, par;
      double ts = 0, tp = 0;
      for (std::uint32_t rep = 0; rep < repeat; ++rep) {
        ts += run_ms([&] { ref = trs::coset_weights_serial(C); });
        tp += run_ms([&] { par = trs::coset_weights(C); });
      }
      bool match = ref.weight == par.weight && ref.rho == par.rho;
      all_match = all_match && match;
      std::printf("%-2u coset_weights    %9.2f  %11.2f  %7.2f  %s\n", kk,
                  ts / repeat, tp / repeat, ts / std::max(tp, 1e-9),
                  match ? "yes" : "NO");

      std::vector<std::uint8_t> dser, dpar;
      ts = tp = 0;
      for (std::uint32_t rep = 0; rep < repeat; ++rep) {
        ts += run_ms([&] { dser = trs::deep_syndrome_set_serial(P); });
        tp += run_ms([&] { dpar = trs::deep_syndrome_set(P); });
      }
      match = dser == dpar;
      all_match = all_match && match;
      std::printf("%-2u deep_syndromes   %9.2f  %11.2f  %7.2f  %s\n", kk,
                  ts / repeat, tp / repeat, ts / std::max(tp, 1e-9),
                  match ? "yes" : "NO");
    }
    return all_match ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
