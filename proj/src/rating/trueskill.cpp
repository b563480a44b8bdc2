#include "arena/rating/trueskill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/normal.hpp>

#include "arena/core/errors.hpp"

namespace arena {
namespace {

constexpr double kTiny = 1e-300;

struct VW {
  double v;
  double w;
};

VW win_factors(double t, double eps) {
  const double x = t - eps;
  const double denom = normal_cdf(x);
  if (denom < kTiny) return {-x, 1.0};
  const double v = normal_pdf(x) / denom;
  return {v, v * (v + x)};
}

VW draw_factors(double t, double eps) {
  if (eps < 1e-9) return {-t, 1.0};
  const double a = eps - t;
  const double b = -eps - t;
  const double denom = normal_cdf(a) - normal_cdf(b);
  if (denom < kTiny) {
    return t > 0 ? VW{eps - t, 1.0} : VW{-eps - t, 1.0};
  }
  const double v = (normal_pdf(b) - normal_pdf(a)) / denom;
  const double w = v * v + (a * normal_pdf(a) + (eps + t) * normal_pdf(eps + t)) / denom;
  return {v, w};
}

void require_finite(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw NonFiniteInput();
  }
}

}  // namespace

void RatingConfig::validate() const {
  require_finite({mu0, sigma0, beta, tau, draw_margin});
  if (!(beta > 0)) throw ArenaError("rating config: beta must be positive");
  if (!(sigma0 > 0)) throw ArenaError("rating config: sigma0 must be positive");
  if (tau < 0) throw ArenaError("rating config: tau must be non-negative");
  if (draw_margin < 0) throw ArenaError("rating config: draw margin must be non-negative");
}

Rating init_rating(const RatingConfig& config) { return Rating{config.mu0, config.sigma0}; }

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_ppf(double p) { return boost::math::quantile(boost::math::normal_distribution<double>(), p); }

double draw_margin_for(double draw_probability, double beta) {
  if (draw_probability <= 0) return 0.0;
  return normal_ppf((draw_probability + 1.0) / 2.0) * std::sqrt(2.0) * beta;
}

RatingPair update_two_player(Rating winner, Rating loser, bool draw, const RatingConfig& config) {
  require_finite({winner.mu, winner.sigma, loser.mu, loser.sigma});
  config.validate();
  const double var_w = winner.sigma * winner.sigma + config.tau * config.tau;
  const double var_l = loser.sigma * loser.sigma + config.tau * config.tau;
  const double c2 = 2.0 * config.beta * config.beta + var_w + var_l;
  const double c = std::sqrt(c2);
  const double t = (winner.mu - loser.mu) / c;
  const double eps = config.draw_margin / c;
  const VW f = draw ? draw_factors(t, eps) : win_factors(t, eps);

  RatingPair out;
  out.first.mu = winner.mu + var_w / c * f.v;
  out.second.mu = loser.mu - var_l / c * f.v;
  out.first.sigma = std::sqrt(var_w * std::max(1.0 - var_w / c2 * f.w, 1e-12));
  out.second.sigma = std::sqrt(var_l * std::max(1.0 - var_l / c2 * f.w, 1e-12));
  return out;
}

std::vector<Rating> update_multiplayer(const std::vector<Rating>& ratings, const std::vector<int>& ranks,
                                       const RatingConfig& config) {
  if (ratings.size() < 2) throw TooFewPlayers();
  if (ranks.size() != ratings.size()) throw ArenaError("update_multiplayer: one rank per rating required");
  std::vector<std::size_t> order(ratings.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });

  std::vector<double> delta(ratings.size(), 0.0);
  std::vector<double> sigma(ratings.size(), std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const std::size_t hi = order[k];
    const std::size_t lo = order[k + 1];
    const auto pair = update_two_player(ratings[hi], ratings[lo], ranks[hi] == ranks[lo], config);
    delta[hi] += pair.first.mu - ratings[hi].mu;
    delta[lo] += pair.second.mu - ratings[lo].mu;
    sigma[hi] = std::min(sigma[hi], pair.first.sigma);
    sigma[lo] = std::min(sigma[lo], pair.second.sigma);
  }
  std::vector<Rating> out(ratings.size());
  for (std::size_t i = 0; i < ratings.size(); ++i) out[i] = Rating{ratings[i].mu + delta[i], sigma[i]};
  return out;
}

}  // namespace arena
