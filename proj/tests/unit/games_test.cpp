#include <gtest/gtest.h>

#include <map>
#include <set>

#include "arena/core/env.hpp"
#include "arena/core/errors.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/blind_auction.hpp"
#include "arena/games/connect_four.hpp"
#include "arena/games/dont_say_it.hpp"
#include "arena/games/feedback.hpp"
#include "arena/games/hangman.hpp"
#include "arena/games/kuhn_poker.hpp"
#include "arena/games/liars_dice.hpp"
#include "arena/games/mastermind.hpp"
#include "arena/games/minesweeper.hpp"
#include "arena/games/nim.hpp"
#include "arena/games/pig_dice.hpp"
#include "arena/games/prisoners_dilemma.hpp"
#include "arena/games/simple_negotiation.hpp"
#include "arena/games/snake.hpp"
#include "arena/games/tic_tac_toe.hpp"
#include "arena/games/tower_of_hanoi.hpp"
#include "arena/games/wordle.hpp"
#include "arena/games/wordlists.hpp"
#include "oracles.hpp"

using namespace arena;
using namespace arena::games;

TEST(TicTacToe, LegalOnEmptyBoard) {
  const TicTacToe g(2, 0);
  const auto legal = g.legal_actions();
  EXPECT_EQ(legal.tokens.size(), 9u);
  EXPECT_TRUE(legal.exhaustive);
}

TEST(TicTacToe, MinimaxDraw) { EXPECT_EQ(check::minimax_value(TicTacToe(2, 0)), 0); }

TEST(TicTacToe, RenderAfterCenter) {
  TicTacToe g(2, 0);
  g.apply(0, "4");
  const auto text = g.render(0);
  EXPECT_EQ(std::count(text.begin(), text.end(), 'X'), 1);
  EXPECT_EQ(std::count(text.begin(), text.end(), '.'), 8);
}

TEST(ConnectFour, FullColumnNotLegal) {
  ConnectFour g(2, 0);
  for (int i = 0; i < 6; ++i) g.apply(g.to_move(), "3");
  const auto tokens = g.legal_actions().tokens;
  EXPECT_EQ(tokens.size(), 6u);
  EXPECT_EQ(std::find(tokens.begin(), tokens.end(), "3"), tokens.end());
  EXPECT_THROW(g.apply(g.to_move(), "3"), IllegalAction);
}

TEST(ConnectFour, WinDetectionMatchesScan) {
  Rng rng(2024);
  int boards = 0;
  while (boards < 100000) {
    ConnectFour g(2, rng.next());
    while (!g.is_terminal()) {
      const auto tokens = g.legal_actions().tokens;
      for (const auto& t : tokens) {
        const int col = std::stoi(t);
        ASSERT_EQ(g.cell(ConnectFour::kRows - 1, col), '.');
      }
      g.apply(g.to_move(), tokens[rng.index(tokens.size())]);
      std::array<char, 42> board{};
      for (int r = 0; r < ConnectFour::kRows; ++r) {
        for (int c = 0; c < ConnectFour::kCols; ++c) board[r * 7 + c] = g.cell(r, c);
      }
      const char winner = check::connect_four_scan(board);
      const bool engine_win = g.is_terminal() && g.terminal()->kind == TerminalKind::Win;
      ASSERT_EQ(engine_win, winner != 0);
      ++boards;
    }
  }
}

TEST(Nim, DefaultPiles) { EXPECT_EQ(Nim(2, 0).piles(), (std::vector<int>{3, 4, 5})); }

TEST(Nim, LegalEnumeration) {
  const Nim g(2, 0, Nim::Config{{0, 2, 1}});
  const auto tokens = g.legal_actions().tokens;
  EXPECT_EQ(std::set<std::string>(tokens.begin(), tokens.end()), (std::set<std::string>{"1 1", "1 2", "2 1"}));
}

TEST(Nim, FirstPlayerWinsIffNimSumNonzero) {
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 7; ++b)
      for (int c = 0; c <= 7; ++c) {
        if (a + b + c == 0) continue;
        EXPECT_EQ(check::nim_first_player_wins({a, b, c}), (a ^ b ^ c) != 0) << a << b << c;
      }
}

TEST(Kuhn, DealFrequencies) {
  std::map<std::pair<int, int>, int> counts;
  for (std::uint64_t s = 0; s < 6000; ++s) {
    const KuhnPoker g(2, s);
    ASSERT_NE(g.card(0), g.card(1));
    ++counts[{g.card(0), g.card(1)}];
  }
  EXPECT_EQ(counts.size(), 6u);
  for (const auto& [deal, n] : counts) EXPECT_NEAR(n, 1000, 120);
}

TEST(Kuhn, TreeAndUniformValue) {
  using C = KuhnPoker::Card;
  int terminals = 0;
  double value = 0;
  std::set<std::string> lines;
  std::function<void(const KuhnPoker&, double)> walk = [&](const KuhnPoker& g, double p) {
    if (g.is_terminal()) {
      ++terminals;
      lines.insert(g.history());
      value += p * g.chips(0);
      EXPECT_EQ(g.chips(0) + g.chips(1), 0);
      return;
    }
    const auto tokens = g.legal_actions().tokens;
    for (const auto& t : tokens) {
      KuhnPoker child = g;
      child.apply(child.to_move(), t);
      walk(child, p / static_cast<double>(tokens.size()));
    }
  };
  for (C a : {C::Jack, C::Queen, C::King})
    for (C b : {C::Jack, C::Queen, C::King})
      if (a != b) walk(KuhnPoker(std::array<C, 2>{a, b}), 1.0 / 6);
  EXPECT_EQ(terminals, 30);
  EXPECT_EQ(lines.size(), 5u);
  EXPECT_NEAR(value, check::kuhn_uniform_value_reference(), 1e-12);
  EXPECT_NEAR(value, 0.125, 1e-12);
}

TEST(Kuhn, ShowdownOrder) {
  using C = KuhnPoker::Card;
  KuhnPoker g(std::array<C, 2>{C::Queen, C::King});
  g.apply(0, "check");
  g.apply(1, "check");
  EXPECT_EQ(g.chips(1), 1);
  KuhnPoker h(std::array<C, 2>{C::King, C::Jack});
  h.apply(0, "bet");
  h.apply(1, "call");
  EXPECT_EQ(h.chips(0), 2);
}

TEST(Wordle, Examples) {
  EXPECT_EQ(wordle_feedback("crane", "crane"), "GGGGG");
  EXPECT_EQ(wordle_feedback("crane", "abbey"), "XXYXY");
  EXPECT_EQ(wordle_feedback("geese", "those"), "XXXGG");
  EXPECT_THROW(wordle_feedback("cran", "crane"), BadLength);
}

TEST(Wordle, MatchesCountingOracle) {
  Rng rng(77);
  const auto& words = five_letter_words();
  for (int i = 0; i < 10000; ++i) {
    const auto& g = words[rng.index(words.size())];
    const auto& s = words[rng.index(words.size())];
    ASSERT_EQ(wordle_feedback(g, s), check::wordle_feedback_reference(g, s)) << g << " " << s;
  }
}

TEST(Wordle, InitialState) {
  const Wordle g(1, 3);
  EXPECT_EQ(g.guesses_left(), 6);
  const auto& words = five_letter_words();
  EXPECT_NE(std::find(words.begin(), words.end(), g.secret()), words.end());
}

TEST(Wordle, SolvedOnExactGuess) {
  const auto words = five_letter_words();
  const std::string secret = words[0];
  Wordle g(secret);
  g.apply(0, words[1]);
  EXPECT_FALSE(g.is_terminal());
  std::string upper = secret;
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  g.apply(0, upper);
  ASSERT_TRUE(g.is_terminal());
  EXPECT_EQ(outcome(*g.terminal(), 1), (Rewards{1}));
}

TEST(Mastermind, Examples) {
  const std::vector<int> s{1, 2, 3, 4};
  EXPECT_EQ(mastermind_feedback(s, s), (PegScore{4, 0}));
  EXPECT_EQ(mastermind_feedback(std::vector<int>{1, 3, 5, 6}, s), (PegScore{1, 1}));
  EXPECT_EQ(mastermind_feedback(std::vector<int>{2, 2, 1, 1}, std::vector<int>{1, 1, 2, 2}), (PegScore{0, 4}));
  EXPECT_THROW(mastermind_feedback(std::vector<int>{1, 2, 3}, s), BadLength);
  EXPECT_THROW(mastermind_feedback(std::vector<int>{1, 2, 3, 7}, s), BadSymbol);
}

TEST(Mastermind, ParseForms) {
  const Mastermind g(std::vector<int>{1, 2, 3, 4});
  for (const char* t : {"1 3 5 6", "1356", "1,3,5,6"}) EXPECT_EQ(g.parse_code(t), (std::vector<int>{1, 3, 5, 6}));
  EXPECT_FALSE(g.parse_code("1 3 5").has_value());
}

TEST(PigDice, BustPassesTurn) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PigDice g(2, seed);
    g.apply(0, "roll");
    if (g.last_roll() == 1) {
      EXPECT_EQ(g.turn_total(), 0);
      EXPECT_EQ(g.to_move(), 1);
      return;
    }
  }
  FAIL() << "no bust in 200 seeds";
}

TEST(PigDice, HoldBanks) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    PigDice g(2, seed);
    g.apply(0, "roll");
    if (g.last_roll() == 1) continue;
    const int total = g.turn_total();
    g.apply(0, "hold");
    EXPECT_EQ(g.score(0), total);
    EXPECT_EQ(g.to_move(), 1);
    return;
  }
}

TEST(PrisonersDilemma, Payoffs) {
  IteratedPrisonersDilemma g(2, 0);
  g.apply(0, "defect");
  g.apply(1, "cooperate");
  EXPECT_EQ(g.score(0), 5);
  EXPECT_EQ(g.score(1), 0);
  g.apply(0, "cooperate");
  g.apply(1, "cooperate");
  EXPECT_EQ(g.score(0), 8);
  EXPECT_EQ(g.score(1), 3);
}

TEST(PrisonersDilemma, FirstChoiceHiddenUntilRoundResolves) {
  auto env = Env::make("IteratedPrisonersDilemma-v0", 1);
  env.reset(2);
  env.step("[defect]");
  const auto obs = env.observe(1);
  for (const auto& m : obs.messages) EXPECT_NE(m.sender, 0) << m.content;
}

TEST(DontSayIt, WholeWordCaseInsensitive) {
  EXPECT_TRUE(DontSayIt::says_word("I love APPLE pie", "apple"));
  EXPECT_TRUE(DontSayIt::says_word("apple, please", "apple"));
  EXPECT_FALSE(DontSayIt::says_word("pineapples are great", "apple"));
}

TEST(DontSayIt, OpponentSayingYourWordLoses) {
  DontSayIt g(std::array<std::string, 2>{"river", "candle"});
  g.apply(0, "Let's talk about the weather");
  g.apply(1, "I walked along the River today");
  ASSERT_TRUE(g.is_terminal());
  EXPECT_EQ(outcome(*g.terminal(), 2), (Rewards{1, -1}));
}

TEST(DontSayIt, TurnLimitDraw) {
  DontSayIt g(std::array<std::string, 2>{"river", "candle"});
  for (int t = 0; t < 20; ++t) g.apply(g.to_move(), "hello there");
  ASSERT_TRUE(g.is_terminal());
  EXPECT_EQ(outcome(*g.terminal(), 2), (Rewards{0, 0}));
}

TEST(Hangman, WinAndLose) {
  Hangman win(std::string("cat"));
  for (const char* t : {"c", "a", "t"}) win.apply(0, t);
  ASSERT_TRUE(win.is_terminal());
  EXPECT_EQ(outcome(*win.terminal(), 1), (Rewards{1}));

  Hangman lose(std::string("cat"));
  for (const char* t : {"b", "d", "e", "f", "g", "h"}) lose.apply(0, t);
  ASSERT_TRUE(lose.is_terminal());
  EXPECT_EQ(outcome(*lose.terminal(), 1), (Rewards{-1}));

  Hangman word(std::string("cat"));
  word.apply(0, "cat");
  EXPECT_TRUE(word.is_terminal());
}

TEST(Minesweeper, HiddenGridAndSafeFirstReveal) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Minesweeper g(1, seed);
    const auto text = g.render(0);
    EXPECT_EQ(std::count(text.begin(), text.end(), '#'), 64);
    EXPECT_EQ(g.mine_count(), 10);
    g.apply(0, "0 0");
    EXPECT_FALSE(g.is_mine(0, 0));
    EXPECT_EQ(g.mine_count(), 10);
    EXPECT_TRUE(g.is_revealed(0, 0));
    if (g.is_terminal()) {
      EXPECT_EQ(g.terminal()->kind, TerminalKind::Success);
    }
  }
}

TEST(TowerOfHanoi, OptimalSolution) {
  TowerOfHanoi g(1, 0);
  for (const char* m : {"A C", "A B", "C B", "A C", "B A", "B C", "A C"}) g.apply(0, m);
  ASSERT_TRUE(g.is_terminal());
  EXPECT_EQ(g.terminal()->kind, TerminalKind::Success);
}

TEST(TowerOfHanoi, LargerOnSmallerIllegal) {
  TowerOfHanoi g(1, 0);
  g.apply(0, "A C");
  EXPECT_THROW(g.apply(0, "A C"), IllegalAction);
}

TEST(LiarsDice, BidsMustRise) {
  LiarsDice g(3, 8);
  g.apply(g.to_move(), "bid 3 4");
  EXPECT_THROW(g.apply(g.to_move(), "bid 3 3"), IllegalAction);
  EXPECT_THROW(g.apply(g.to_move(), "bid 2 6"), IllegalAction);
  g.apply(g.to_move(), "bid 3 5");
  g.apply(g.to_move(), "bid 4 2");
  EXPECT_EQ(g.current_bid()->quantity, 4);
}

TEST(LiarsDice, CallCostsLoserADie) {
  LiarsDice g(2, 3);
  const int bidder = g.to_move();
  int count = 0;
  for (int s = 0; s < 2; ++s)
    for (int d : g.dice(s)) count += d == 6;
  const int q = count + 1;  // an overbid: the caller wins
  g.apply(bidder, "bid " + std::to_string(q) + " 6");
  const int caller = g.to_move();
  g.apply(caller, "call");
  EXPECT_EQ(g.dice_in_play(), 9);
  EXPECT_EQ(g.dice(bidder).size() + (g.is_terminal() ? 0 : 0), 4u);
  EXPECT_EQ(g.dice(caller).size(), 5u);
}

TEST(LiarsDice, PrivateDice) {
  auto env = Env::make("LiarsDice-v0", 12);
  env.reset(3);
  for (int v = 0; v < 3; ++v) {
    for (const auto& m : env.observe(v).messages) {
      EXPECT_TRUE(m.visibility.includes(v));
    }
  }
}

TEST(Snake, RankRewardsOrderedBySurvival) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200 && checked < 20; ++seed) {
    auto env = Env::make("Snake-v0", seed);
    env.reset(4);
    Rng rng(seed, "moves");
    check::random_playout(env, rng);
    const auto& g = dynamic_cast<const Snake&>(env.game());
    if (g.terminal()->kind == TerminalKind::InvalidMove) continue;
    const auto r = env.close();
    double sum = 0;
    for (int i = 0; i < 4; ++i) {
      sum += r[i];
      for (int j = 0; j < 4; ++j) {
        const int ti = g.death_tick(i).value_or(1 << 20);
        const int tj = g.death_tick(j).value_or(1 << 20);
        if (ti > tj) EXPECT_GT(r[i], r[j]);
      }
    }
    EXPECT_NEAR(sum, 0.0, 1e-12);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Snake, WallDeath) {
  Snake g(2, 0);
  // Seat 0 starts at (1,1): two steps left hits the wall.
  g.apply(0, "left");
  g.apply(1, "right");
  g.apply(0, "left");
  g.apply(1, "left");
  EXPECT_FALSE(g.alive(0));
  ASSERT_TRUE(g.is_terminal());
  EXPECT_EQ(outcome(*g.terminal(), 2), (Rewards{-1, 1}));
}

TEST(BlindAuction, HighestBidWinsLowestSeatOnTies) {
  BlindAuction g(3, 1);
  g.apply(0, "10 0 0 0 0");
  g.apply(1, "10 5 0 0 0");
  g.apply(2, "0 5 1 0 0");
  ASSERT_TRUE(g.is_terminal());
  const auto r = outcome(*g.terminal(), 3);
  EXPECT_NEAR(r[0] + r[1] + r[2], 0.0, 1e-12);
}

TEST(BlindAuction, OverBudgetIllegal) {
  BlindAuction g(3, 1);
  EXPECT_THROW(g.apply(0, "1000 1 0 0 0"), IllegalAction);
  EXPECT_THROW(g.apply(0, "1 2 3"), IllegalAction);
}

TEST(SimpleNegotiation, OfferAcceptMovesGoods) {
  SimpleNegotiation g(2, 4);
  const auto before0 = g.holdings(0);
  const auto before1 = g.holdings(1);
  const auto& names = SimpleNegotiation::resource_names();
  g.apply(0, "Offer: give 1 " + names[0] + " -> receive 1 " + names[1]);
  g.apply(1, "Accept");
  EXPECT_EQ(g.holdings(0)[0], before0[0] - 1);
  EXPECT_EQ(g.holdings(0)[1], before0[1] + 1);
  EXPECT_EQ(g.holdings(1)[0], before1[0] + 1);
  EXPECT_EQ(g.holdings(1)[1], before1[1] - 1);
}

TEST(SimpleNegotiation, NoTradeIsDraw) {
  SimpleNegotiation g(2, 4);
  while (!g.is_terminal()) g.apply(g.to_move(), "Deny");
  EXPECT_EQ(outcome(*g.terminal(), 2), (Rewards{0, 0}));
}

TEST(SimpleNegotiation, GeneratedTokensPassValidator) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto env = Env::make("SimpleNegotiation-v0", seed);
    env.reset(2);
    Rng rng(seed);
    while (!env.done()) {
      const auto legal = env.game().legal_actions();
      ASSERT_FALSE(legal.tokens.empty());
      for (const auto& t : legal.tokens) ASSERT_TRUE(legal.allows(t)) << t;
      const auto r = env.step("[" + legal.tokens[rng.index(legal.tokens.size())] + "]");
      if (r.done) ASSERT_NE(r.info.at("reason"), "invalid_move");
    }
  }
}

TEST(AllGames, TerminateWithinTurnLimitsUnderRandomPlay) {
  for (const GameInfo* info : registered_games()) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      auto env = Env::make(info->env_id, seed);
      env.reset(info->min_players);
      Rng rng(seed, "random");
      std::size_t steps = 0;
      while (!env.done()) {
        env.step("[" + check::random_legal_token(env, rng) + "]");
        ASSERT_LE(++steps, static_cast<std::size_t>(info->turn_limit)) << info->env_id;
      }
      ASSERT_NE(env.game().terminal()->kind, TerminalKind::InvalidMove) << info->env_id << " seed " << seed;
    }
  }
}
