// Truncated displaced and squeezed oscillators against their exact ladders.

#include <cstdio>

#include "juddian/commands.hpp"

int main() {
  using namespace juddian::cli;
  for (double lambda : {0.5, 1.0, 1.5}) {
    const auto rep = oscillator_levels({oscillator_type::displaced, lambda, 100, 10});
    std::printf("displaced  lambda=%.2f  max deviation %.3e\n", lambda, rep.max_deviation);
  }
  for (double lambda : {0.1, 0.3, 0.4}) {
    const auto sq = juddian::squeeze_params(lambda);
    const auto rep = oscillator_levels({oscillator_type::squeezed, lambda, 200, 10});
    std::printf("squeezed   lambda=%.2f  Omega=%.4f sigma=%.4f  max deviation %.3e\n", lambda, sq.omega, sq.sigma,
                rep.max_deviation);
  }
}
