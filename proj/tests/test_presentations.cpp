#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hecke/presentations.hpp"

using namespace hecke;

TEST_CASE("phi on the worked (1,2,2) tableaux") {
  Composition a{1, 2, 2};
  RibbonShape sh(a);
  Srt t1, t2;
  t1.cols = {{1}, {2, 3}, {4, 5}};
  t2.cols = {{2}, {1, 3}, {4, 5}};
  REQUIRE(is_valid_srt(sh, t1));
  REQUIRE(is_valid_srt(sh, t2));
  auto s1 = sit_from_srt(a, t1);
  REQUIRE(s1.has_value());
  CHECK(to_string(*s1) == "1/2,3/4,5");
  CHECK_FALSE(sit_from_srt(a, t2).has_value());
}

TEST_CASE("Figure 1 data for alpha = (1,2,1)") {
  Composition a{1, 2, 1};
  auto pres = projective_presentation(a);
  CHECK(pres.Is == std::vector<int>{1});
  CHECK(to_string(alpha_gen_i(a, 1)) == "2,1|1");
  CHECK(pres.P1.rep->dim() == 8);
  CHECK(pres.P0.rep->dim() == 5);
  CHECK(pres.V.rep->dim() == 2);
  // Omega(V) = ker(phi) has dimension 3; ker(partial1) has dimension 5
  CHECK(pres.P0.rep->dim() - rank(pres.phi.mat) == 3);
  CHECK(pres.P1.rep->dim() - rank(pres.partial1.mat) == 5);
  CHECK(verify_projective(pres).empty());
  // the kernel region of phi: tableaux with T_p^1 > T_{p+1}^1 somewhere
  int region = 0;
  for (const auto& t : pres.P0.tabs) {
    bool bad = false;
    for (int p = 1; p < a.length(); ++p)
      if (t.cols[p - 1][0] > t.cols[p][0]) bad = true;
    region += bad;
  }
  CHECK(region == 3);
}

TEST_CASE("syzygy generators") {
  CHECK(syzygy_generators(Composition{1, 2, 1}).size() == 1);
  CHECK(syzygy_generators(Composition{1, 1, 1}).empty());
  // closure of the generators equals ker(phi), n <= 5
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto pres = projective_presentation(a);
      auto gens = syzygy_generators(a);
      std::vector<SparseVec> units;
      for (const auto& g : gens)
        units.push_back(SparseVec::unit(pres.P0.index.at(g)));
      auto sub = submodule(pres.P0.rep, units);
      Span kphi(kernel(pres.phi.mat), pres.P0.rep->dim());
      CHECK(sub.span == kphi);
    }
}

TEST_CASE("H . T^(i) equals the span of the i-th comparison region") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto P = projective_module(a);
      auto gens = syzygy_generators(a);
      auto Is = cal_I(a);
      size_t k = 0;
      for (int i : Is) {
        auto sub = submodule(P.rep, {SparseVec::unit(P.index.at(gens[k]))});
        std::vector<SparseVec> units;
        for (size_t c = 0; c < P.tabs.size(); ++c)
          if (P.tabs[c].cols[i - 1][0] > P.tabs[c].cols[i][0])
            units.push_back(SparseVec::unit(static_cast<int>(c)));
        CHECK(sub.span == Span(units, P.rep->dim()));
        ++k;
      }
    }
}

TEST_CASE("projective presentations verify for all alpha with n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto pres = projective_presentation(a);
      auto bad = verify_projective(pres);
      for (const auto& b : bad) FAIL_CHECK(b);
      CHECK(bad.empty());
    }
}

TEST_CASE("degenerate single-part and all-ones shapes") {
  auto p5 = projective_presentation(Composition{5});
  CHECK(p5.P1.rep->dim() == 0);
  CHECK(verify_projective(p5).empty());
  auto p1 = projective_presentation(Composition{1, 1, 1});
  CHECK(p1.P1.rep->dim() == 0);
  CHECK(verify_projective(p1).empty());
  // all-ones alpha: iota is an isomorphism onto P_(1^l)
  auto inj = injective_presentation(Composition{1, 1, 1});
  CHECK(inj.I0.rep->dim() == 1);
  CHECK(inj.m == 0);
  CHECK(inj.I1.rep->dim() == 0);
  CHECK(verify_injective(inj).empty());
  CHECK(theta_basis(Composition{1, 1, 1}).empty());
}

TEST_CASE("Figure 2 data for alpha = (1,2,2)") {
  Composition a{1, 2, 2};
  auto pres = injective_presentation(a);
  CHECK(pres.I0.rep->dim() == 15);
  CHECK(pres.V.rep->dim() == 3);
  CHECK(theta_basis(a).size() == 12);
  CHECK(verify_injective(pres).empty());
  auto co = cosyzygy(pres);
  CHECK(co.rep->dim() == 12);
}

TEST_CASE("injective presentations verify for all alpha with n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto pres = injective_presentation(a);
      auto bad = verify_injective(pres);
      for (const auto& b : bad) FAIL_CHECK(b);
      CHECK(bad.empty());
    }
}

TEST_CASE("partial^1 vanishing characterization") {
  // One direction of the published iff holds: T_j^{1+d(j,m)} < T^1_{m+k_j-1}
  // forces bstau_{T;j} != 0. The converse fails (the greedy word can descend
  // through later strips, e.g. alpha = (1,2,2), T = 4|1,3,5/2, j = 1), so
  // the reliable global statement is: partial^1 kills exactly the iota
  // image region.
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto K = cal_K(a);
      int m = static_cast<int>(K.size()) - 1;
      if (m == 0 || is_hook(a)) continue;
      auto pres = injective_presentation(a);
      const auto& I0 = pres.I0;
      for (size_t c = 0; c < I0.tabs.size(); ++c) {
        const auto& t = I0.tabs[c];
        for (int j = 1; j <= m; ++j) {
          auto cs = candidate_sets(a, I0.shape, t, j);
          int lhs = (j < m) ? t.entry(j, 1) : t.entry(m, 2);
          int rhs = t.entry(m + K[j] - 1, 1);
          if (lhs < rhs) CHECK(!cs.subsets.empty());
        }
        bool killed = pres.partial_super1.mat.col[c].zero();
        CHECK(killed == in_iota_image_region(a, I0.shape, t));
      }
    }
  {
    // frozen counterexample to the converse
    Composition a{1, 2, 2};
    RibbonShape hat(alpha_hat(a));
    Srt t = parse_srt(hat, "4|1,3,5/2");
    CHECK(t.entry(1, 1) > t.entry(3, 1));  // condition fails at j = 1
    CHECK(!candidate_sets(a, hat, t, 1).subsets.empty());  // map still hits
  }
}

TEST_CASE("sink pullback and J sets for alpha = (2,2,2)") {
  Composition a{2, 2, 2};
  REQUIRE(to_string(alpha_hat(a)) == "1|1|2,1,1");
  auto I0 = projective_module(alpha_hat(a));
  Composition beta{1, 1, 2, 1, 1}, gamma{2, 2, 1, 1};
  CHECK(to_string(I0.shape, sink_pullback(I0.shape, beta)) == "4|5|1,2,3/6");
  CHECK(to_string(I0.shape, sink_pullback(I0.shape, gamma)) == "6|4|1,2,3/5");
  CHECK(J_set(I0.shape, beta) == std::set<int>{4, 5});
  CHECK(J_set(I0.shape, gamma) == std::set<int>{4});

  // the two displayed alternating socle vectors (up to a global sign)
  auto vb = socle_vector_hat(I0, beta);
  auto get = [&](const std::string& s) {
    return I0.index.at(parse_srt(I0.shape, s));
  };
  CHECK(vb.at(get("4|5|1,2,3/6")) == -1);
  CHECK(vb.at(get("4|6|1,2,3/5")) == 1);
  CHECK(vb.at(get("5|4|1,2,3/6")) == 1);
  CHECK(vb.at(get("5|6|1,2,3/4")) == -1);
  CHECK(vb.at(get("6|4|1,2,3/5")) == -1);
  CHECK(vb.at(get("6|5|1,2,3/4")) == 1);
  CHECK(vb.e.size() == 6);
  auto vg = socle_vector_hat(I0, gamma);
  CHECK(vg.at(get("6|4|1,2,3/5")) == -1);
  CHECK(vg.at(get("6|5|1,2,3/4")) == 1);
  CHECK(vg.e.size() == 2);

  RibbonShape bsh(beta), gsh(gamma);
  auto desb = srt_descents(bsh, sink_tableau(bsh));
  auto desg = srt_descents(gsh, sink_tableau(gsh));
  CHECK(check_simple_span(*I0.rep, vb, desb, "beta").empty());
  CHECK(check_simple_span(*I0.rep, vg, desg, "gamma").empty());
}

TEST_CASE("socle lemma for P_alpha-hat over all alpha, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto I0 = projective_module(alpha_hat(a));
      std::vector<SparseVec> vecs;
      for (const auto& beta : bracket_expansion(alpha_hat(a))) {
        auto v = socle_vector_hat(I0, beta);
        RibbonShape bsh(beta);
        auto des = srt_descents(bsh, sink_tableau(bsh));
        auto bad = check_simple_span(*I0.rep, v,
                                     des, "hat " + to_string(a) + "/" + to_string(beta));
        for (const auto& b : bad) FAIL_CHECK(b);
        vecs.push_back(v);
      }
      // together they span the socle
      CHECK(Span(vecs, I0.rep->dim()) == socle_span(*I0.rep));
    }
}

TEST_CASE("socle lemma for the cosyzygy blocks, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto K = cal_K(a);
      int m = static_cast<int>(K.size()) - 1;
      for (int j = 1; j <= m; ++j) {
        auto Pj = projective_module(alpha_hat_j(a, j));
        std::vector<SparseVec> vecs;
        for (const auto& beta : bracket_expansion(alpha_hat_j(a, j))) {
          auto v = socle_vector_hatj(a, j, Pj, beta);
          RibbonShape bsh(beta);
          auto des = srt_descents(bsh, sink_tableau(bsh));
          auto bad = check_simple_span(*Pj.rep, v, des,
                                       "hatj " + to_string(a) + "/" +
                                           std::to_string(j) + "/" + to_string(beta));
          for (const auto& b : bad) FAIL_CHECK(b);
          vecs.push_back(v);
        }
        CHECK(Span(vecs, Pj.rep->dim()) == socle_span(*Pj.rep));
      }
    }
}

TEST_CASE("w0-tilde matches the worked (2,1,2,3) factor") {
  // for beta = (1,3,1,1,1,1) in [alpha-hat^(2)], the twisted longest element
  // is s2 s3 s4 s1 s2 s3 . s7
  Composition a{2, 1, 2, 3};
  auto w = longest_bi_increasing(1, 4, 3, 8) * longest_parabolic({7}, 8);
  CHECK(length(w) == 7);
  CHECK(w == Permutation::from_word({2, 3, 4, 1, 2, 3, 7}, 8));
}

TEST_CASE("chi-led isomorphism onto the expansion sum") {
  // the naive reading-word bijection is not equivariant; the corrected block
  // map is, and is invertible
  for (const auto& gcs : {std::string("2,1|1"), std::string("1|2,1,1"),
                          std::string("1|1|2,1,1"), std::string("3,1|2"),
                          std::string("1|2,1,2")}) {
    auto iso = chi_isomorphism(parse_generalized(gcs));
    CHECK(iso.P.rep->dim() == iso.sum.rep->dim());
    CHECK(rank(iso.map.mat) == iso.P.rep->dim());
    CHECK(is_intertwiner(iso.map));
  }
  // counterexample to naive equivariance: shape 2|2 has a same-row pair that
  // chi sends to a strictly-below pair
  auto P = projective_module(parse_generalized("3,1|2"));
  bool naive_fails = false;
  for (const auto& t : P.tabs) {
    auto [beta, tp] = chi(P.shape, t);
    RibbonShape bsh(beta);
    for (int i = 1; i <= P.shape.n - 1; ++i) {
      auto a1 = pi_on_srt(P.shape, i, t);
      auto a2 = pi_on_srt(bsh, i, tp);
      if (a1.kind != a2.kind) naive_fails = true;
    }
  }
  CHECK(naive_fails);
}

TEST_CASE("omega module generators") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& a : compositions_of(n)) {
      auto pres = projective_presentation(a);
      auto om = omega_module(pres);
      CHECK(om.sub.rep->dim() ==
            pres.P0.rep->dim() - rank(pres.phi.mat));
      if (om.sub.rep->dim() > 0) {
        // generators generate: hom solver must not throw
        auto homs = hom_from_generators(om.sub.rep, om.generator_index,
                                        pres.V.rep);
        for (const auto& f : homs) CHECK(is_intertwiner(f));
      }
    }
}
