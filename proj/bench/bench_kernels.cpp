// SPDX-License-Identifier: Apache-2.0
// Serial vs OpenMP timings of the dense kernels at trainer-sized shapes.

#include <chrono>
#include <cstdio>
#include <functional>

#include "snnbound/kernels.hpp"

using namespace snnbound;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, SeededRng& rng) {
  Matrix m(r, c);
  for (double& v : m.values()) v = rng.normal();
  return m;
}

double best_ms(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", kernels::max_threads());
  SeededRng rng(42);
  const std::size_t d = 1024, batch = 256;
  for (std::size_t m : {256, 1024, 4096}) {
    const Matrix w = random_matrix(m, d, rng);
    const Matrix xb = random_matrix(d, batch, rng);
    const Matrix delta = random_matrix(m, batch, rng);
    const Matrix xt = random_matrix(batch, d, rng);
    Vector x(d), y(m), u(m), z(d);
    for (double& v : x) v = rng.normal();
    for (double& v : u) v = rng.normal();
    Matrix c;
    char name[64];

    std::snprintf(name, sizeof(name), "gemm W*X   m=%zu", m);
    report(name, best_ms([&] { kernels::serial::gemm(w, xb, c); }, 3),
           best_ms([&] { kernels::parallel::gemm(w, xb, c); }, 3));
    std::snprintf(name, sizeof(name), "gemm dW    m=%zu", m);
    report(name, best_ms([&] { kernels::serial::gemm(delta, xt, c); }, 3),
           best_ms([&] { kernels::parallel::gemm(delta, xt, c); }, 3));
    std::snprintf(name, sizeof(name), "gemv       m=%zu", m);
    report(name, best_ms([&] { kernels::serial::gemv(w, x, y); }, 20),
           best_ms([&] { kernels::parallel::gemv(w, x, y); }, 20));
    std::snprintf(name, sizeof(name), "gemv_t     m=%zu", m);
    report(name, best_ms([&] { kernels::serial::gemv_t(w, u, z); }, 20),
           best_ms([&] { kernels::parallel::gemv_t(w, u, z); }, 20));
  }
  return 0;
}
