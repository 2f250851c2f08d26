#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hecke/composition.hpp"

using namespace hecke;

namespace {

// independent brute-force expander used as the oracle for bracket_expansion
void expand_rec(const std::vector<Composition>& blocks, size_t k, Composition cur,
                std::vector<Composition>& out) {
  if (k == blocks.size()) {
    out.push_back(cur);
    return;
  }
  expand_rec(blocks, k + 1, concat(cur, blocks[k]), out);
  expand_rec(blocks, k + 1, near_concat(cur, blocks[k]), out);
}

std::vector<Composition> brute_expansion(const GeneralizedComposition& gc) {
  std::vector<Composition> out;
  expand_rec(gc.blocks, 1, gc.blocks[0], out);
  return out;
}

}  // namespace

TEST_CASE("descent_set basics") {
  CHECK(descent_set(Composition{3, 1, 2}) == std::set<int>{3, 4});
  CHECK(descent_set(Composition{7}) == std::set<int>{});
  CHECK(descent_set(Composition{1, 2, 1}) == std::set<int>{1, 3});
}

TEST_CASE("composition_from_set basics") {
  CHECK(composition_from_set({}, 4) == Composition{4});
  CHECK(composition_from_set({3, 4}, 6) == Composition{3, 1, 2});
  CHECK(composition_from_set({1, 3}, 4) == Composition{1, 2, 1});
}

TEST_CASE("descent set round trips") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) {
      CHECK(composition_from_set(descent_set(a), n) == a);
    }
  // converse: subsets of [n-1]
  for (int n = 1; n <= 6; ++n) {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::set<int> I;
      for (int i = 1; i <= n - 1; ++i)
        if (mask >> (i - 1) & 1) I.insert(i);
      CHECK(descent_set(composition_from_set(I, n)) == I);
    }
  }
}

TEST_CASE("concat / near_concat / reverse") {
  CHECK(concat(Composition{2, 1}, Composition{1}) == Composition{2, 1, 1});
  CHECK(near_concat(Composition{2, 1}, Composition{1}) == Composition{2, 2});
  CHECK(reverse(Composition{2, 1, 2, 3}) == Composition{3, 2, 1, 2});
  CHECK_THROWS_AS(near_concat(Composition{}, Composition{1}), std::invalid_argument);
}

TEST_CASE("bracket expansion") {
  GeneralizedComposition g{Composition{2, 1}, Composition{1}};
  auto e = bracket_expansion(g);
  REQUIRE(e.size() == 2);
  CHECK(std::count(e.begin(), e.end(), Composition{2, 1, 1}) == 1);
  CHECK(std::count(e.begin(), e.end(), Composition{2, 2}) == 1);

  CHECK(bracket_expansion(GeneralizedComposition{Composition{3, 1}}) ==
        std::vector<Composition>{Composition{3, 1}});

  GeneralizedComposition g3{Composition{1}, Composition{1}, Composition{3, 1, 1, 1}};
  auto e3 = bracket_expansion(g3);
  auto brute = brute_expansion(g3);
  std::sort(e3.begin(), e3.end());
  std::sort(brute.begin(), brute.end());
  CHECK(e3 == brute);
  CHECK(e3.size() == 4);
  CHECK(std::count(e3.begin(), e3.end(), Composition{1, 1, 3, 1, 1, 1}) == 1);
  CHECK(std::count(e3.begin(), e3.end(), Composition{1, 4, 1, 1, 1}) == 1);
  CHECK(std::count(e3.begin(), e3.end(), Composition{2, 3, 1, 1, 1}) == 1);
  CHECK(std::count(e3.begin(), e3.end(), Composition{5, 1, 1, 1}) == 1);
}

TEST_CASE("bracket expansion size and sizes property") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      auto hat = alpha_hat(a);
      auto e = bracket_expansion(hat);
      CHECK(e.size() == (1u << (hat.num_blocks() - 1)));
      for (const auto& b : e) CHECK(b.size() == hat.size());
    }
}

TEST_CASE("lex compare") {
  CHECK(lex_compare(Composition{1, 2, 1}, Composition{2, 2}) < 0);
  CHECK(lex_compare(Composition{2, 1, 1}, Composition{2, 1, 1}) == 0);
  CHECK(lex_compare(Composition{2, 1, 1}, Composition{2, 2}) < 0);
  CHECK_THROWS_AS(lex_compare(Composition{1}, Composition{2}), std::invalid_argument);
}

TEST_CASE("cal_I") {
  CHECK(cal_I(Composition{1, 2, 1}) == std::set<int>{1});
  CHECK(cal_I(Composition{6}) == std::set<int>{});
  CHECK(cal_I(Composition{1, 1, 1, 1}) == std::set<int>{});
  CHECK(cal_I(Composition{1, 2, 2}) == std::set<int>{1, 2});
}

TEST_CASE("alpha_gen_i") {
  CHECK(alpha_gen_i(Composition{1, 2, 1}, 1) ==
        GeneralizedComposition{Composition{2, 1}, Composition{1}});
  CHECK(alpha_gen_i(Composition{1, 2, 2}, 2) ==
        GeneralizedComposition{Composition{1, 3, 1}});
  CHECK(alpha_gen_i(Composition{2, 1, 2, 3}, 3) ==
        GeneralizedComposition{Composition{2, 1, 3, 2}});
  CHECK_THROWS_AS(alpha_gen_i(Composition{1, 2, 1}, 2), std::invalid_argument);
}

TEST_CASE("cal_J") {
  CHECK(cal_J(Composition{1, 2, 1}) ==
        std::set<Composition>{Composition{2, 2}, Composition{2, 1, 1}});
  CHECK(cal_J(Composition{5}) == std::set<Composition>{});
  CHECK(cal_J(Composition{1, 2, 2}) ==
        std::set<Composition>{Composition{2, 1, 2}, Composition{2, 3},
                              Composition{1, 3, 1}});
}

TEST_CASE("cal_J multiplicity-free and above alpha") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& a : compositions_of(n)) {
      std::vector<Composition> all;
      for (int i : cal_I(a))
        for (const auto& b : bracket_expansion(alpha_gen_i(a, i)))
          all.push_back(b);
      auto J = cal_J(a);
      CHECK(all.size() == J.size());  // multiplicity-free union
      for (const auto& b : J) CHECK(lex_less(a, b));
      for (int i : cal_I(a))
        for (const auto& b : bracket_expansion(alpha_gen_i(a, i)))
          CHECK(b[i - 1] == a[i - 1] + 1);  // i-th part grew by one
    }
}

TEST_CASE("cal_K") {
  CHECK(cal_K(Composition{2, 1, 2, 3}) == std::vector<int>{0, 1, 3, 4});
  CHECK(cal_K(Composition{1, 1, 1}) == std::vector<int>{0});
  CHECK(cal_K(Composition{1, 2, 2}) == std::vector<int>{0, 2, 3});
}

TEST_CASE("alpha_hat") {
  CHECK(to_string(alpha_hat(Composition{1, 2, 2})) == "1|2,1,1");
  CHECK(to_string(alpha_hat(Composition{2, 1, 2, 3})) == "1|1|3,1,1,1");
  CHECK(to_string(alpha_hat(Composition{5})) == "5");
  CHECK(to_string(alpha_hat(Composition{1, 1, 1})) == "1,1,1");
  CHECK_THROWS_AS(alpha_hat(Composition{}), std::invalid_argument);
}

TEST_CASE("alpha_hat_j") {
  Composition a{2, 1, 2, 3};
  CHECK(to_string(alpha_hat_j(a, 1)) == "1|3,1,1,1,1");
  CHECK(to_string(alpha_hat_j(a, 2)) == "1|3,1,1|1,1");
  CHECK(to_string(alpha_hat_j(a, 3)) == "1|1|2,2,1,1");
  CHECK_THROWS_AS(alpha_hat_j(a, 4), std::invalid_argument);
  CHECK_THROWS_AS(alpha_hat_j(Composition{1, 1}, 1), std::invalid_argument);
}

TEST_CASE("cal_L") {
  auto L = cal_L(Composition{2, 1, 2, 3});
  CHECK(L.size() == 8);
  CHECK(L[Composition{1, 3, 1, 1, 1, 1}] == 2);
  CHECK(L[Composition{4, 1, 1, 1, 1}] == 2);
  int total = 0;
  for (auto& [c, m] : L) total += m;
  CHECK(total == 10);

  // single part: calL((n)) = {(n-1,1)}
  for (int n = 2; n <= 5; ++n) {
    auto Ln = cal_L(Composition{n});
    CHECK(Ln.size() == 1);
    CHECK(Ln[Composition{n - 1, 1}] == 1);
  }
  CHECK(cal_L(Composition{1, 1, 1, 1}).empty());
}

TEST_CASE("text round trips") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& a : compositions_of(n))
      CHECK(parse_composition(to_string(a)) == a);
  GeneralizedComposition g{Composition{2, 1}, Composition{1}};
  CHECK(parse_generalized(to_string(g)) == g);
  CHECK(to_string(g) == "2,1|1");
}

TEST_CASE("degenerate sizes") {
  CHECK(Composition{}.size() == 0);
  CHECK(Composition{}.length() == 0);
  CHECK(compositions_of(0).size() == 1);
  CHECK(compositions_of(1).size() == 1);
  CHECK(compositions_of(6).size() == 32);
}
