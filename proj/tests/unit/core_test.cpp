#include <gtest/gtest.h>

#include <map>

#include "arena/core/action_parse.hpp"
#include "arena/core/env.hpp"
#include "arena/core/errors.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/tic_tac_toe.hpp"

using namespace arena;

TEST(BracketParse, SingleToken) { EXPECT_EQ(parse_bracketed_action("I'll take the center: [4]"), "4"); }

TEST(BracketParse, LastGroupWins) { EXPECT_EQ(parse_bracketed_action("Maybe [3]... no, final answer [7]"), "7"); }

TEST(BracketParse, TrimsAndKeepsCase) { EXPECT_EQ(parse_bracketed_action("go [  Bid 3 5 ]"), "Bid 3 5"); }

TEST(BracketParse, NoBrackets) {
  EXPECT_THROW(parse_bracketed_action("no brackets here"), NoBracketToken);
  EXPECT_FALSE(try_parse_bracketed_action("unclosed [4").has_value());
}

TEST(Make, SingletonList) {
  const std::vector<std::string> ids{"TicTacToe-v0"};
  EXPECT_EQ(Env::make(ids, 7).env_id(), "TicTacToe-v0");
}

TEST(Make, UnknownId) {
  const std::vector<std::string> ids{"NoSuchGame-v0"};
  EXPECT_THROW(Env::make(ids, 0), UnknownEnvId);
}

TEST(Make, ListChoiceIsUniform) {
  const std::vector<std::string> ids{"TicTacToe-v0", "Nim-v0"};
  int ttt = 0;
  for (std::uint64_t s = 0; s < 10000; ++s) ttt += Env::make(ids, s).env_id() == "TicTacToe-v0";
  EXPECT_NEAR(ttt, 5000, 200);
}

TEST(Reset, TicTacToeInitialState) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  const auto [player, obs] = env.get_observation();
  EXPECT_EQ(player, 0);
  ASSERT_FALSE(obs.messages.empty());
  EXPECT_EQ(obs.messages.front().content, env.info().rules);
  const auto& board = dynamic_cast<const games::TicTacToe&>(env.game()).board();
  for (char c : board) EXPECT_EQ(c, '.');
}

TEST(Reset, PlayerCountOutOfRange) {
  auto env = Env::make("TicTacToe-v0", 1);
  try {
    env.reset(3);
    FAIL() << "expected PlayerCountOutOfRange";
  } catch (const PlayerCountOutOfRange& e) {
    EXPECT_EQ(e.min, 2);
    EXPECT_EQ(e.max, 2);
    EXPECT_EQ(e.requested, 3);
  }
}

TEST(Reset, LiarsDiceDeterministic) {
  auto a = Env::make("LiarsDice-v0", 42);
  auto b = Env::make("LiarsDice-v0", 42);
  a.reset(4);
  b.reset(4);
  EXPECT_EQ(a.log(), b.log());
}

TEST(Lifecycle, Preconditions) {
  auto env = Env::make("TicTacToe-v0", 1);
  EXPECT_THROW(env.get_observation(), NotResetError);
  env.reset(2);
  EXPECT_THROW(env.close(), NotTerminalError);
  EXPECT_THROW(env.wrap(std::make_shared<LlmObservationWrapper>()), AlreadyResetError);
  env.step("[0]");
  env.step("[3]");
  env.step("[1]");
  env.step("[4]");
  env.step("[2]");
  EXPECT_THROW(env.get_observation(), TerminalError);
}

TEST(Observation, RepeatedCallsIdentical) {
  auto env = wrap_llm_observation(Env::make("KuhnPoker-v0", 3));
  env.reset(2);
  EXPECT_EQ(env.get_observation(), env.get_observation());
}

TEST(Observation, KuhnPrivateCards) {
  auto env = Env::make("KuhnPoker-v0", 11);
  env.reset(2);
  const auto p0 = env.observe(0);
  const auto p1 = env.observe(1);
  int own = 0;
  for (const auto& m : env.log()) {
    if (m.visibility.is_broadcast()) continue;
    const bool to0 = m.visibility.includes(0);
    const bool in0 = std::find(p0.messages.begin(), p0.messages.end(), m) != p0.messages.end();
    const bool in1 = std::find(p1.messages.begin(), p1.messages.end(), m) != p1.messages.end();
    EXPECT_EQ(in0, to0);
    EXPECT_EQ(in1, m.visibility.includes(1));
    own += to0;
  }
  EXPECT_GE(own, 1);
}

TEST(Step, LegalOpening) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  const auto r = env.step("[4]");
  EXPECT_FALSE(r.done);
  EXPECT_TRUE(r.info.empty());
  EXPECT_EQ(dynamic_cast<const games::TicTacToe&>(env.game()).board()[4], 'X');
}

TEST(Step, UnparsableActionForfeits) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  const auto r = env.step("hello!");
  EXPECT_TRUE(r.done);
  EXPECT_EQ(r.info.at("reason"), "invalid_move");
  EXPECT_EQ(env.close(), (Rewards{-1, 1}));
}

TEST(Step, IllegalMoveForfeits) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  env.step("[4]");
  const auto r = env.step("[4]");
  EXPECT_EQ(r.info.at("reason"), "invalid_move");
  EXPECT_EQ(env.close(), (Rewards{1, -1}));
}

TEST(Step, ThreeInARow) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  for (const char* a : {"[0]", "[3]", "[1]", "[4]"}) EXPECT_FALSE(env.step(a).done);
  const auto r = env.step("[2]");
  EXPECT_TRUE(r.done);
  EXPECT_EQ(r.info.at("reason"), "win");
  EXPECT_EQ(env.close(), (Rewards{1, -1}));
  EXPECT_EQ(env.close(), env.close());
}

TEST(Step, Draw) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  for (const char* a : {"[0]", "[1]", "[2]", "[4]", "[3]", "[5]", "[7]", "[6]", "[8]"}) env.step(a);
  EXPECT_TRUE(env.done());
  EXPECT_EQ(env.close(), (Rewards{0, 0}));
}

TEST(Step, MultiplayerForfeitRanksOffenderLast) {
  auto env = Env::make("LiarsDice-v0", 5);
  env.reset(4);
  const int offender = env.current_player();
  env.step("[nonsense]");
  const auto r = env.close();
  EXPECT_DOUBLE_EQ(r[static_cast<std::size_t>(offender)], -1.0);
  double sum = 0;
  for (double x : r) sum += x;
  EXPECT_NEAR(sum, 0.0, 1e-12);
}

TEST(Forfeit, CountsAsInvalidMove) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  env.step("[4]");
  const auto r = env.forfeit("turn clock expired");
  EXPECT_EQ(r.info.at("reason"), "invalid_move");
  EXPECT_EQ(env.close(), (Rewards{1, -1}));
}

TEST(Outcome, FourPlayerRanking) {
  const TerminalInfo t{TerminalKind::Rank, {{2}, {0}, {3}, {1}}, ""};
  const auto r = outcome(t, 4);
  EXPECT_DOUBLE_EQ(r[2], 1.0);
  EXPECT_NEAR(r[0], 1.0 / 3, 1e-15);
  EXPECT_NEAR(r[3], -1.0 / 3, 1e-15);
  EXPECT_DOUBLE_EQ(r[1], -1.0);
  EXPECT_NEAR(r[0] + r[1] + r[2] + r[3], 0.0, 1e-15);
}

TEST(Outcome, TieForFirstSharesMeanRank) {
  const auto r = outcome({TerminalKind::Rank, {{0, 1}, {2}}, ""}, 3);
  EXPECT_DOUBLE_EQ(r[0], 0.5);
  EXPECT_DOUBLE_EQ(r[1], 0.5);
  EXPECT_DOUBLE_EQ(r[2], -1.0);
}

TEST(Outcome, SinglePlayer) {
  EXPECT_EQ(outcome({TerminalKind::Success, {{0}}, ""}, 1), (Rewards{1}));
  EXPECT_EQ(outcome({TerminalKind::Failure, {{0}}, ""}, 1), (Rewards{-1}));
  EXPECT_EQ(outcome({TerminalKind::TurnLimit, {{0}}, ""}, 1), (Rewards{-1}));
}

TEST(Outcome, MonotoneInRank) {
  Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng.index(4));
    std::vector<double> scores(static_cast<std::size_t>(n));
    for (auto& s : scores) s = static_cast<double>(rng.index(3));
    const auto r = outcome({TerminalKind::Rank, rank_by_score(scores), ""}, n);
    double sum = 0;
    for (int i = 0; i < n; ++i) {
      sum += r[i];
      EXPECT_GE(r[i], -1.0);
      EXPECT_LE(r[i], 1.0);
      for (int j = 0; j < n; ++j) {
        if (scores[i] > scores[j]) {
          EXPECT_GT(r[i], r[j]);
        }
        if (scores[i] == scores[j]) {
          EXPECT_EQ(r[i], r[j]);
        }
      }
    }
    EXPECT_NEAR(sum, 0.0, 1e-12);
  }
}

TEST(Wrapper, SenderLabelsInOrder) {
  auto env = wrap_llm_observation(Env::make("TicTacToe-v0", 1));
  env.reset(2);
  env.step("I play [4]");
  const auto [player, obs] = env.get_observation();
  EXPECT_EQ(player, 1);
  const auto game_pos = obs.text.find("[GAME]");
  const auto p0_pos = obs.text.find("[Player 0]");
  ASSERT_NE(game_pos, std::string::npos);
  ASSERT_NE(p0_pos, std::string::npos);
  EXPECT_LT(game_pos, p0_pos);
}

TEST(Wrapper, StackingTwiceMatchesOnce) {
  auto once = wrap_llm_observation(Env::make("Nim-v0", 2));
  auto twice = wrap_llm_observation(wrap_llm_observation(Env::make("Nim-v0", 2)));
  once.reset(2);
  twice.reset(2);
  for (const char* a : {"[0 1]", "[1 2]"}) {
    EXPECT_EQ(once.get_observation(), twice.get_observation());
    once.step(a);
    twice.step(a);
  }
  EXPECT_EQ(once.get_observation(), twice.get_observation());
}

TEST(Wrapper, DoesNotChangeOutcome) {
  auto raw = Env::make("ConnectFour-v0", 4);
  auto wrapped = wrap_llm_observation(Env::make("ConnectFour-v0", 4));
  wrapped.wrap(std::make_shared<TailCharactersWrapper>(200));
  raw.reset(2);
  wrapped.reset(2);
  Rng rng(4);
  while (!raw.done()) {
    EXPECT_EQ(raw.get_observation().first, wrapped.get_observation().first);
    const auto tokens = raw.game().legal_actions().tokens;
    const auto a = "[" + tokens[rng.index(tokens.size())] + "]";
    EXPECT_EQ(raw.step(a).done, wrapped.step(a).done);
  }
  EXPECT_EQ(raw.close(), wrapped.close());
  EXPECT_LE(wrapped.observe(0).text.size(), 200u);
}

TEST(Wrapper, KuhnPromptHidesOpponentCard) {
  auto env = wrap_llm_observation(Env::make("KuhnPoker-v0", 5));
  env.reset(2);
  const auto p1 = env.observe(1).text;
  for (const auto& m : env.log()) {
    if (!m.visibility.is_broadcast() && !m.visibility.includes(1)) {
      EXPECT_EQ(p1.find(m.content), std::string::npos) << m.content;
    }
  }
}

TEST(Wrapper, ListsValidMovesForSmallSets) {
  auto env = wrap_llm_observation(Env::make("TicTacToe-v0", 1));
  env.reset(2);
  EXPECT_NE(env.get_observation().second.text.find("Valid moves: [0], [1]"), std::string::npos);
}

TEST(Rng, DeriveSeedStable) {
  EXPECT_EQ(derive_seed(1, "a"), derive_seed(1, "a"));
  EXPECT_NE(derive_seed(1, "a"), derive_seed(1, "b"));
  EXPECT_NE(derive_seed(1, "a"), derive_seed(2, "a"));
  Rng a(5, "x"), b(5, "x");
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform_int(1, 6), b.uniform_int(1, 6));
}

TEST(Registry, SeventeenGames) {
  EXPECT_EQ(registered_games().size(), 17u);
  for (const GameInfo* g : registered_games()) {
    EXPECT_LE(g->min_players, g->max_players) << g->env_id;
    EXPECT_FALSE(g->rules.empty()) << g->env_id;
    int tagged = 0;
    double total = 0;
    for (const auto& [skill, w] : g->skills) {
      tagged += w > 0;
      total += w;
      EXPECT_GE(w, 0.0);
      EXPECT_LE(w, 1.0);
    }
    EXPECT_GE(tagged, 1) << g->env_id;
    EXPECT_LE(tagged, 5) << g->env_id;
    EXPECT_NEAR(total, 1.0, 1e-12) << g->env_id;
  }
  EXPECT_EQ(find_game("Nope-v0"), nullptr);
  EXPECT_THROW(game_info("Nope-v0"), UnknownEnvId);
}
