// Block entanglement growth in the two solvable chains: linear entropy of a
// free fermion block at several fillings, and the AKLT block spectrum
// saturating toward the maximally mixed rank-4 point.

#include <cstdio>

#include "entfluc/aklt.hpp"
#include "entfluc/free_fermion.hpp"

int main() {
  std::printf("free fermions, S_L(M) per filling\n");
  std::printf("%5s %10s %10s %10s\n", "M", "nu=0.10", "nu=0.25", "nu=0.50");
  for (int m : {1, 2, 4, 8, 16, 32, 64, 128}) {
    std::printf("%5d %10.6f %10.6f %10.6f\n", m,
                entfluc::free_fermion::block_linear_entropy({0.10, m}),
                entfluc::free_fermion::block_linear_entropy({0.25, m}),
                entfluc::free_fermion::block_linear_entropy({0.50, m}));
  }

  std::printf("\nAKLT block of l spins\n");
  std::printf("%3s %12s %12s %14s %12s\n", "l", "p_triplet", "p_singlet",
              "fluctuation", "purity");
  for (int l = 1; l <= 8; ++l) {
    const auto w = entfluc::aklt::closed_form_weights(l);
    std::printf("%3d %12.9f %12.9f %14.9f %12.9f\n", l, w.triplet, w.singlet,
                entfluc::aklt::fluctuation(l), entfluc::aklt::purity(l));
  }
  return 0;
}
