// Lists the first Juddian points of the resonant Rabi model and checks each
// one against direct diagonalization of the two parity blocks.

#include <cstdio>

#include "juddian/juddian.hpp"

int main() {
  const juddian::model_params resonant{1.0, 1.0, 0.0};
  const juddian::fock_cutoff cutoff{100};

  std::printf("%2s %14s %14s %12s %12s\n", "N", "g", "E", "gap", "residual");
  for (int n = 1; n <= 4; ++n) {
    for (const auto& pt : juddian::juddian_points(n, resonant).points) {
      const auto v = juddian::verify_point(pt, cutoff);
      std::printf("%2d %14.10f %14.10f %12.3e %12.3e\n", pt.N, pt.g, pt.E, v.point.degeneracy_gap, v.eigen_residual);
    }
  }
}
