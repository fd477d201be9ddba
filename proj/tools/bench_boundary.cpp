// Compares the serial reference and the OpenMP kernel for boundary-matrix
// assembly and checks that both produce identical matrices.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dpcoh/cohomology.hpp"

using namespace dpcoh;
using Clock = std::chrono::steady_clock;

static int omp_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

static double run(const Quiver& q, const TensorP& P, Exec exec, int k, int w) {
  Caps caps;
  caps.max_chain = 2000000;
  caps.max_weight = 12;
  caps.max_stars = 6;
  ComplexDriver driver(q, P, caps, exec);
  driver.chain_dim(k, w);  // enumerate bases outside the timed section
  driver.chain_dim(k + 1, w + P.weight - 1);
  auto t0 = Clock::now();
  driver.boundary_matrix(k, w);
  auto t1 = Clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

int main(int argc, char** argv) {
  int k = argc > 1 ? std::atoi(argv[1]) : 2;
  int w = argc > 2 ? std::atoi(argv[2]) : 7;

  Quiver q = Quiver::loops({"x", "y"});
  PolyField p = pf_word(q, {bead_plain(q, 0), bead_star(q, 0), bead_plain(q, 0),
                            bead_star(q, 1)});
  TensorP P = make_tensor(q, p);

  Caps caps;
  caps.max_chain = 2000000;
  caps.max_weight = 12;
  caps.max_stars = 6;
  ComplexDriver serial(q, P, caps, Exec::Serial);
  ComplexDriver parallel(q, P, caps, Exec::Parallel);
  const RatMatrix& a = serial.boundary_matrix(k, w);
  const RatMatrix& b = parallel.boundary_matrix(k, w);
  if (!(a.entries == b.entries && a.rows == b.rows && a.cols == b.cols)) {
    std::cerr << "MISMATCH between serial and parallel kernels\n";
    return 1;
  }
  std::cout << "bidegree (" << k << "," << w << "): " << a.cols << " columns, " << a.rows
            << " rows, " << a.entries.size() << " entries\n";

  run(q, P, Exec::Serial, k, w);  // warm the allocator before timing
  double ts = run(q, P, Exec::Serial, k, w);
  double tp = run(q, P, Exec::Parallel, k, w);
  std::cout << "assembly: serial " << ts << " s, parallel " << tp << " s ("
            << omp_threads() << " threads)";
  if (tp > 0) std::cout << ", speedup " << ts / tp << "x";
  std::cout << "\n";

  auto time_enum = [&](bool par) {
    auto t0 = Clock::now();
    auto basis = enumerate_basis(q, k + 2, w + 2 * (P.weight - 1), 24, par);
    auto t1 = Clock::now();
    return std::make_pair(std::chrono::duration<double>(t1 - t0).count(), basis.size());
  };
  auto [es, ns] = time_enum(false);
  auto [ep, np] = time_enum(true);
  std::cout << "enumeration of " << ns << " necklaces: serial " << es << " s, parallel "
            << ep << " s";
  if (ep > 0) std::cout << ", speedup " << es / ep << "x";
  std::cout << "\n";
  if (ns != np) {
    std::cerr << "MISMATCH between serial and parallel enumeration\n";
    return 1;
  }
  return 0;
}
