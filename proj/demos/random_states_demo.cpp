// Draws a few Haar random qudit-bath states and prints the polarization
// fluctuation next to the entanglement measures it reproduces.

#include <cstdio>

#include "entfluc/bipartite.hpp"
#include "entfluc/fluctuation.hpp"
#include "entfluc/random_states.hpp"

int main() {
  entfluc::SeededSource src(7);
  std::printf("%6s %6s %14s %14s %14s %12s\n", "dim_q", "dim_b",
              "variance path", "2(1-gamma)", "C^2", "residual");
  for (const auto& [dq, db] : {std::pair{2, 2}, {2, 5}, {3, 3}, {4, 7}, {6, 6}}) {
    const auto state = entfluc::haar_random_pure(dq, db, src);
    const auto dec = entfluc::schmidt(state);
    const auto report = entfluc::schmidt_polarization_fluctuation(dec.spectrum);
    std::printf("%6d %6d %14.10f %14.10f %14.10f %12.3e\n", dq, db,
                report.total, 2.0 * report.linear_entropy,
                report.concurrence * report.concurrence, report.residual_main);
  }
  return 0;
}
