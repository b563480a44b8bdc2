#include "arena/rating/elo.hpp"

#include <cmath>

namespace arena {

double elo_expected(double a, double b) { return 1.0 / (1.0 + std::pow(10.0, (b - a) / 400.0)); }

EloUpdate update_elo(double winner, double loser, double k, bool draw) {
  const double delta = k * ((draw ? 0.5 : 1.0) - elo_expected(winner, loser));
  return {winner + delta, loser - delta, delta};
}

}  // namespace arena
