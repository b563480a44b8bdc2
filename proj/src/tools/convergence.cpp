#include "arena/tools/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdio>

#include "arena/core/errors.hpp"
#include "arena/core/rng.hpp"
#include "arena/rating/elo.hpp"

namespace arena {
namespace {

double mean_of(const std::vector<ConvergenceRun>& runs, std::optional<int> ConvergenceRun::*field, int cap) {
  if (runs.empty()) return 0.0;
  double sum = 0;
  for (const auto& r : runs) sum += (r.*field).value_or(cap);
  return sum / static_cast<double>(runs.size());
}

int sign(double x) { return (x > 0) - (x < 0); }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double ConvergenceReport::mean_trueskill() const { return mean_of(runs, &ConvergenceRun::trueskill, config.max_matches); }
double ConvergenceReport::mean_elo() const { return mean_of(runs, &ConvergenceRun::elo, config.max_matches); }

int ConvergenceReport::reached_trueskill() const {
  return static_cast<int>(std::count_if(runs.begin(), runs.end(), [](const auto& r) { return r.trueskill.has_value(); }));
}
int ConvergenceReport::reached_elo() const {
  return static_cast<int>(std::count_if(runs.begin(), runs.end(), [](const auto& r) { return r.elo.has_value(); }));
}

std::optional<double> kendall_tau_b(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ArenaError("kendall_tau_b: length mismatch");
  long long concordant = 0;
  long long discordant = 0;
  long long ties_a = 0;
  long long ties_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const int sa = sign(a[i] - a[j]);
      const int sb = sign(b[i] - b[j]);
      if (sa == 0 && sb == 0) continue;
      if (sa == 0) {
        ++ties_a;
      } else if (sb == 0) {
        ++ties_b;
      } else if (sa == sb) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n1 = static_cast<double>(concordant + discordant + ties_b);
  const double n2 = static_cast<double>(concordant + discordant + ties_a);
  if (n1 == 0 || n2 == 0) return std::nullopt;
  return static_cast<double>(concordant - discordant) / std::sqrt(n1 * n2);
}

std::vector<double> latent_skills(const ConvergenceConfig& config) {
  std::vector<double> skills;
  const double spread = config.spread_betas * config.rating.beta;
  for (int i = 0; i < config.agents; ++i) {
    const double frac = config.agents > 1 ? static_cast<double>(i) / (config.agents - 1) - 0.5 : 0.0;
    skills.push_back(config.rating.mu0 + frac * spread);
  }
  return skills;
}

ConvergenceRun simulate_convergence_seed(const ConvergenceConfig& config, std::uint64_t seed) {
  if (config.agents < 2) throw ArenaError("convergence simulation needs at least two agents");
  const auto skills = latent_skills(config);
  const auto n = static_cast<std::size_t>(config.agents);
  std::vector<Rating> ts(n, init_rating(config.rating));
  std::vector<double> elo(n, kEloInitial);
  Rng schedule(seed, "schedule");
  Rng outcomes(seed, "outcomes");

  ConvergenceRun run{seed, std::nullopt, std::nullopt};
  std::vector<double> scores(n);
  for (int m = 1; m <= config.max_matches && !(run.trueskill && run.elo); ++m) {
    const std::size_t i = schedule.index(n);
    std::size_t j = schedule.index(n - 1);
    if (j >= i) ++j;
    const double p = normal_cdf((skills[i] - skills[j]) / (std::sqrt(2.0) * config.rating.beta));
    const bool i_wins = outcomes.bernoulli(p);
    const std::size_t w = i_wins ? i : j;
    const std::size_t l = i_wins ? j : i;

    const auto pair = update_two_player(ts[w], ts[l], false, config.rating);
    ts[w] = pair.first;
    ts[l] = pair.second;
    const auto e = update_elo(elo[w], elo[l], config.elo_k, false);
    elo[w] = e.winner;
    elo[l] = e.loser;

    if (!run.trueskill) {
      for (std::size_t k = 0; k < n; ++k) scores[k] = ts[k].conservative();
      const auto tau = kendall_tau_b(scores, skills);
      if (tau && *tau >= config.threshold) run.trueskill = m;
    }
    if (!run.elo) {
      const auto tau = kendall_tau_b(elo, skills);
      if (tau && *tau >= config.threshold) run.elo = m;
    }
  }
  return run;
}

ConvergenceReport simulate_convergence(const ConvergenceConfig& config) {
  ConvergenceReport report;
  report.config = config;
  const auto skills = latent_skills(config);
  report.signal = std::adjacent_find(skills.begin(), skills.end(), std::not_equal_to<>()) != skills.end();
  for (int s = 0; s < config.seeds; ++s) {
    const auto seed = derive_seed(config.base_seed, "convergence/" + std::to_string(s));
    report.runs.push_back(simulate_convergence_seed(config, seed));
  }
  return report;
}

std::string convergence_csv(const ConvergenceReport& report) {
  std::string out = "seed,trueskill_matches,elo_matches\n";
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : report.runs) {
    out += std::to_string(r.seed) + "," + cell(r.trueskill) + "," + cell(r.elo) + "\n";
  }
  out += "\nsystem,mean_matches,reached,seeds,status\n";
  const std::string status = report.signal ? "ok" : "no signal";
  const auto seeds = std::to_string(report.runs.size());
  out += "trueskill," + fmt_double(report.mean_trueskill()) + "," + std::to_string(report.reached_trueskill()) + "," +
         seeds + "," + status + "\n";
  out += "elo," + fmt_double(report.mean_elo()) + "," + std::to_string(report.reached_elo()) + "," + seeds + "," +
         status + "\n";
  return out;
}

}  // namespace arena
