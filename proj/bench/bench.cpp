// Compares the serial reference enumeration against the OpenMP kernels.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"

#include "weylmult/mult.hpp"
#include "weylmult/parallel.hpp"

using namespace weylmult;

namespace {

template <typename Fn>
double best_seconds(int repeat, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const std::string& kernel, double serial_s, double parallel_s) {
  std::cout << std::left << std::setw(18) << kernel << std::right << std::fixed
            << std::setprecision(4) << std::setw(12) << serial_s << std::setw(12) << parallel_s
            << std::setw(10) << std::setprecision(2) << (serial_s / parallel_s) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  int rank = 4;
  std::vector<std::int64_t> lambda_coords = {3, 3, 3, 3};
  int repeat = 3;
  int threads = 0;

  CLI::App app{"serial vs parallel kernel benchmark"};
  app.add_option("--rank", rank);
  app.add_option("--lambda", lambda_coords)->delimiter(',');
  app.add_option("--repeat", repeat);
  app.add_option("--threads", threads);
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);
  if (lambda_coords.size() != static_cast<std::size_t>(rank)) {
    std::cerr << "lambda must have rank coordinates\n";
    return 2;
  }
  const Weight lambda(lambda_coords);
  if (!is_dominant(lambda)) {
    std::cerr << "lambda must be dominant\n";
    return 2;
  }

  std::cout << "lambda = " << render_weight(lambda) << ", dim = " << weyl_dim(lambda).get_str()
            << ", threads = " << omp_get_max_threads() << ", best of " << repeat << "\n\n";
  std::cout << std::left << std::setw(18) << "kernel" << std::right << std::setw(12) << "serial_s"
            << std::setw(12) << "parallel_s" << std::setw(11) << "speedup\n";

  BigInt serial_count, parallel_count;
  const double count_serial = best_seconds(repeat, [&] { serial_count = count_basis(lambda); });
  const double count_parallel =
      best_seconds(repeat, [&] { parallel_count = count_basis_parallel(lambda); });
  if (serial_count != parallel_count) {
    std::cerr << "count mismatch: serial " << serial_count.get_str() << " parallel "
              << parallel_count.get_str() << "\n";
    return 1;
  }
  report("basis count", count_serial, count_parallel);

  Character serial_char, parallel_char;
  const double char_serial =
      best_seconds(repeat, [&] { serial_char = character(lambda, CharMethod::count); });
  const double char_parallel =
      best_seconds(repeat, [&] { parallel_char = character_count_parallel(lambda); });
  if (!(serial_char.table == parallel_char.table)) {
    std::cerr << "character mismatch\n";
    return 1;
  }
  report("character", char_serial, char_parallel);

  std::vector<std::int64_t> half = support_box(lambda);
  for (auto& v : half) v /= 2;
  const Weight mu = weight_minus_alpha(lambda, half);
  BigInt serial_mult, parallel_mult;
  const double mult_serial = best_seconds(repeat, [&] { serial_mult = mult_count(lambda, mu); });
  const double mult_parallel =
      best_seconds(repeat, [&] { parallel_mult = mult_count_parallel(lambda, mu); });
  if (serial_mult != parallel_mult) {
    std::cerr << "mult mismatch\n";
    return 1;
  }
  report("filtered count", mult_serial, mult_parallel);

  return 0;
}
