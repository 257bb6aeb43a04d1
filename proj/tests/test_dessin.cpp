#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "dessin.hpp"

using namespace dmm;

namespace {

std::vector<std::vector<int>> canon(const std::string& words) {
  return canonical_collection(parse_words(words));
}

// the face successor permutation F and the letter flip a(i) = -i generate the
// vertex words: the vertex successor of x must equal -F(x) on every letter
void check_permutation_identity(const DessinModel& m) {
  auto F = successor_map(m.faces());
  auto S = successor_map(m.vertices());
  REQUIRE(F.size() == S.size());
  for (auto& [x, fx] : F) CHECK(S.at(x) == -fx);
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(parse_words("1 2 -1 -2") == std::vector<std::vector<int>>{{1, 2, -1, -2}});
  CHECK(parse_words("(1,2)(-1)(-2)") ==
        std::vector<std::vector<int>>{{1, 2}, {-1}, {-2}});
  CHECK(parse_words("1 2|-1|-2") == std::vector<std::vector<int>>{{1, 2}, {-1}, {-2}});
  CHECK(parse_words("1 2\n-1\n-2\n") == std::vector<std::vector<int>>{{1, 2}, {-1}, {-2}});
  CHECK(parse_words("-1 -2\n\n1\n2") == std::vector<std::vector<int>>{{-1, -2}, {1}, {2}});
  CHECK_THROWS_AS(parse_words("1 x"), error);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(DessinModel::from_faces({{1, 1, -1}}), error);  // duplicate letter
  CHECK_THROWS_AS(DessinModel::from_faces({{1, 2, -1}}), error);  // -2 missing
  auto parts = DessinModel::from_faces({{1, -1}, {2, -2}});       // two components, kept
  CHECK(parts.components() == 2);
  CHECK_FALSE(parts.connected());
  CHECK_THROWS_AS(parts.genus(), error);
}

TEST_CASE("basic invariants of the one-edge models") {
  auto seg = DessinModel::from_faces({{1}, {-1}});
  CHECK(seg.edges() == 1);
  CHECK(seg.num_faces() == 2);
  CHECK(seg.num_vertices() == 1);
  CHECK(seg.euler() == 2);
  CHECK(seg.genus() == 0);

  auto loop = DessinModel::from_faces({{1, -1}});
  CHECK(loop.num_faces() == 1);
  CHECK(loop.num_vertices() == 2);
  CHECK(loop.euler() == 2);
  CHECK(parse_words(loop.str()) == loop.faces());
}

struct DualExample {
  const char* faces;
  const char* dual_faces;
  int euler;
};

TEST_CASE("duality catalogue") {
  // hand-checked dual pairs covering segments, cycles, chains, polygons,
  // stars, higher genus, and the tetrahedron
  const DualExample ex[] = {
      {"(1)(-1)", "(1,-1)", 2},
      {"(1,2,-1,-2)", "(1,-2,-1,2)", 0},
      {"(-1,-2)(1)(2)", "(1,-1,2,-2)", 2},
      {"(1,2,-1)(-2)", "(1,-2,2)(-1)", 2},
      {"(1,2,3,4)(-3,-2,5)(-5,-1,-4)", "(1,-2,-5)(2,-3)(3,-4,5)(4,-1)", 2},
      {"(1,2,3,-3,-2,-1)", "(1,-2)(2,-3)(3)(-1)", 2},
      {"(1,2,3)(-3,-2,-1)", "(1,-2)(2,-3)(3,-1)", 2},
      {"(1,-1,2,-2,3,-3)", "(-1,-2,-3)(1)(2)(3)", 2},
      {"(1,2,-1,-2,3,4,-3,-4)", "(-1,2,1,-2,-3,4,3,-4)", -2},
      {"(-1,-2,-3)(1,-4,-5)(2,5,-6)(6,4,3)", "(1,4,-3)(-5,-1,2)(-6,-2,3)(-4,5,6)", 2},
  };
  for (auto& e : ex) {
    CAPTURE(e.faces);
    auto m = DessinModel::from_faces(parse_words(e.faces));
    CHECK(m.euler() == e.euler);
    auto d = m.dual();
    CHECK(d.canonical_faces() == canon(e.dual_faces));
    CHECK(d.dual() == m);
    CHECK(d.euler() == m.euler());
    check_permutation_identity(m);
    check_permutation_identity(d);
  }
}

TEST_CASE("higher genus one-vertex models") {
  // face word (a1,b1,-a1,-b1,...,ag,bg,-ag,-bg) has one face, one vertex
  for (int g = 1; g <= 3; ++g) {
    std::vector<int> w;
    for (int k = 0; k < g; ++k) {
      int a = 2 * k + 1, b = 2 * k + 2;
      w.insert(w.end(), {a, b, -a, -b});
    }
    auto m = DessinModel::from_faces({w});
    CHECK(m.num_faces() == 1);
    CHECK(m.num_vertices() == 1);
    CHECK(m.euler() == 2 - 2 * g);
    CHECK(m.genus() == g);
    CHECK(m.dual().dual() == m);
    check_permutation_identity(m);
  }
}

TEST_CASE("chains, polygons, stars at every small size") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> chain, polyTop, polyBot, star;
    for (int i = 1; i <= n; ++i) chain.push_back(i);
    for (int i = n; i >= 1; --i) chain.push_back(-i);
    for (int i = 1; i <= n; ++i) polyTop.push_back(i);
    for (int i = n; i >= 1; --i) polyBot.push_back(-i);
    for (int i = 1; i <= n; ++i) star.insert(star.end(), {i, -i});
    auto mc = DessinModel::from_faces({chain});
    CHECK(mc.euler() == 2);
    CHECK(mc.num_vertices() == n + 1);
    auto mp = DessinModel::from_faces({polyTop, polyBot});
    CHECK(mp.euler() == 2);
    CHECK(mp.num_vertices() == n);
    auto ms = DessinModel::from_faces({star});
    CHECK(ms.euler() == 2);
    CHECK(ms.num_vertices() == n + 1);
    // the chain and the star are dual to each other's class: both planar trees
    for (auto* m : {&mc, &mp, &ms}) {
      CHECK(m->dual().dual() == *m);
      check_permutation_identity(*m);
    }
  }
}

TEST_CASE("tetrahedron is self-dual") {
  auto m = DessinModel::from_faces(parse_words("(-1,-2,-3)(1,-4,-5)(2,5,-6)(6,4,3)"));
  CHECK(m.num_vertices() == 4);
  CHECK(m.num_faces() == 4);
  CHECK(m.edges() == 6);
  CHECK(is_isomorphic(m, m.dual()));
  CHECK_FALSE(is_isomorphic(m, DessinModel::from_faces({{1, -1}})));
}

TEST_CASE("cut-or-join moves") {
  auto m = DessinModel::from_faces(parse_words("(-1,-2,-3)(1,-4,-5)(2,5,-6)(6,4,3)"));
  auto w = m.faces();
  for (int i = 1; i <= m.edges(); ++i) {
    auto moved = apply_T(w, i);
    CHECK(canonical_collection(apply_T(moved, i)) == canonical_collection(w));  // involution
  }
  // composing the move over every edge lands on the dual
  auto acc = w;
  for (int i = 1; i <= m.edges(); ++i) acc = apply_T(acc, i);
  CHECK(canonical_collection(acc) == m.dual().canonical_faces());
  // same route on a genus-1 model
  auto t = DessinModel::from_faces({{1, 2, -1, -2}});
  auto tw = apply_T(apply_T(t.faces(), 1), 2);
  CHECK(canonical_collection(tw) == t.dual().canonical_faces());
}

TEST_CASE("random models: involution and the permutation identity") {
  int count = 0;
  for (int n = 1; n <= 6; ++n)
    for (uint64_t s = 0; s < 34 && count < 200; ++s, ++count) {
      auto m = random_model(n, 1000 * n + s);
      REQUIRE(m.connected());
      CHECK(m.edges() == n);
      CHECK(m.dual().dual() == m);
      CHECK(m.dual().euler() == m.euler());
      check_permutation_identity(m);
    }
  CHECK(count >= 200);
  // seeded draws are reproducible
  CHECK(random_model(4, 9) == random_model(4, 9));
}

TEST_CASE("exhaustive small catalogues") {
  CHECK(all_models(1).size() == 2);
  auto two = all_models(2);
  CHECK(two.size() == 20);
  for (auto& m : two) {
    CHECK(m.connected());
    CHECK(m.dual().dual() == m);
    check_permutation_identity(m);
  }
  // dual of every catalogued model is again in the catalogue
  for (auto& m : two) {
    bool found = false;
    for (auto& c : two)
      if (c == m.dual()) found = true;
    CHECK(found);
  }
}

TEST_CASE("profiles and stats") {
  auto m = DessinModel::from_faces(parse_words("(-1,-2)(1)(2)"));
  CHECK(m.face_profile() == Partition{2, 1, 1});
  // the dual is the single word (1,-1,2,-2), so one vertex of degree 4
  CHECK(m.vertex_profile() == Partition{4});
  CHECK(m.num_vertices() == 1);
  CHECK(m.genus() == 0);
  auto torus = DessinModel::from_faces({{1, 2, -1, -2}});
  CHECK(torus.genus() == 1);
  CHECK(torus.face_profile() == Partition{4});
}

TEST_CASE("matrix along a word uses adjoints on reversed letters") {
  std::vector<Eigen::MatrixXcd> mats(2);
  mats[0] = Eigen::MatrixXcd(2, 2);
  mats[0] << Cplx(1, 1), Cplx(0, 2), Cplx(3, 0), Cplx(1, -1);
  mats[1] = Eigen::MatrixXcd(2, 2);
  mats[1] << Cplx(0, 1), Cplx(2, 0), Cplx(1, 0), Cplx(0, -2);
  auto got = word_matrix({1, -2}, mats);
  Eigen::MatrixXcd want = mats[0] * mats[1].adjoint();
  CHECK((got - want).norm() == 0.0);
  auto idw = word_matrix({2, -2}, mats);
  CHECK((idw - mats[1] * mats[1].adjoint()).norm() == 0.0);
}
