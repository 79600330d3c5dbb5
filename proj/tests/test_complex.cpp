#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "artinstab/complex.hpp"

using namespace artinstab;

namespace {

FiltrationBuilder braid_builder(int n) {
  return FiltrationBuilder(braid_sequence(n));
}

}  // namespace

TEST_CASE("chambers") {
  SECTION("empty seed: chambers are the elements themselves") {
    FiltrationBuilder fb = braid_builder(2);
    auto alpha = fb.ambient().element("12");
    auto c = fb.chamber(alpha);
    REQUIRE(c.level == 1);
    REQUIRE(c.rep == alpha);
    REQUIRE(fb.chamber(MonoidElement()).rep.is_identity());
  }

  SECTION("seed generators reduce away") {
    SequenceConfig cfg;
    cfg.seed = CoxeterDiagram(2);  // anchor 1 plus a commuting generator tau = 2
    cfg.n = 2;
    FiltrationBuilder fb(cfg);
    // sigma_2 is the third generator overall
    REQUIRE(fb.sigma(2) == 3);
    auto alpha = fb.ambient().element(PositiveWord{3, 2});  // sigma_2 tau
    auto c = fb.chamber(alpha);
    REQUIRE(c.rep == fb.ambient().element(PositiveWord{3}));
  }
}

TEST_CASE("face maps") {
  SECTION("n = 2 facets of the base chamber") {
    FiltrationBuilder fb = braid_builder(2);
    auto top = fb.chamber(MonoidElement());
    auto f0 = fb.face(top, 0);
    REQUIRE(f0.level == 0);
    REQUIRE(f0.rep.is_identity());
    auto f1 = fb.face(top, 1);
    REQUIRE(f1.rep == fb.ambient().element("2"));
    REQUIRE(f0 != f1);
  }

  SECTION("n = 3 highest face multiplies by the two-letter run") {
    FiltrationBuilder fb = braid_builder(3);
    auto top = fb.chamber(MonoidElement());
    REQUIRE(fb.face_word(2, 2) == PositiveWord{3, 2});
    auto f = fb.face(top, 2);
    REQUIRE(f.level == 1);
    REQUIRE(f.rep == fb.ambient().element("32"));
  }

  SECTION("reduction happens at the target level") {
    FiltrationBuilder fb = braid_builder(2);
    auto top = fb.chamber(fb.ambient().element("1"));
    // multiplying by e then reducing with respect to {sigma_1} kills the word
    auto f = fb.face(top, 0);
    REQUIRE(f.rep.is_identity());
  }
}

TEST_CASE("iterated faces") {
  SECTION("n = 2 base chamber has three cells") {
    FiltrationBuilder fb = braid_builder(2);
    auto faces = fb.all_faces(MonoidElement());
    REQUIRE(faces.size() == 3);
    std::set<SimplexRef> cells;
    for (auto& [tuple, cell] : faces) cells.insert(cell);
    REQUIRE(cells.count({1, MonoidElement()}) == 1);
    REQUIRE(cells.count({0, MonoidElement()}) == 1);
    REQUIRE(cells.count({0, fb.ambient().element("2")}) == 1);
  }

  SECTION("n = 3 base chamber is a triangle") {
    FiltrationBuilder fb = braid_builder(3);
    auto faces = fb.all_faces(MonoidElement());
    int per_level[3] = {0, 0, 0};
    for (auto& [tuple, cell] : faces) {
      (void)tuple;
      ++per_level[cell.level];
    }
    REQUIRE(per_level[2] == 1);
    REQUIRE(per_level[1] == 3);
    REQUIRE(per_level[0] == 3);
  }

  SECTION("witness tuples are nondecreasing and reproduce the cell") {
    FiltrationBuilder fb = braid_builder(3);
    auto alpha = fb.ambient().element("21");
    for (auto& [tuple, cell] : fb.all_faces(alpha)) {
      SimplexRef cur = fb.chamber(alpha);
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (j > 0) REQUIRE(tuple[j] >= tuple[j - 1]);
        cur = fb.face(cur, tuple[j]);
      }
      REQUIRE(cur == cell);
    }
  }
}

TEST_CASE("tuple normalization") {
  REQUIRE(FiltrationBuilder::normalize_tuple({1, 0}) == FaceTuple{0, 0});
  REQUIRE(FiltrationBuilder::normalize_tuple({2, 1, 0}) == FaceTuple{0, 0, 0});
  REQUIRE(FiltrationBuilder::normalize_tuple({0, 1, 2}) == FaceTuple{0, 1, 2});

  SECTION("normalized tuples reach the same cell") {
    FiltrationBuilder fb = braid_builder(3);
    auto apply = [&](SimplexRef s, const FaceTuple& t) {
      for (int q : t) s = fb.face(s, q);
      return s;
    };
    for (const auto& alpha :
         {MonoidElement(), fb.ambient().element("12"), fb.ambient().element("321")}) {
      SimplexRef top = fb.chamber(alpha);
      for (FaceTuple t : {FaceTuple{2, 0}, FaceTuple{1, 0}, FaceTuple{2, 1}})
        REQUIRE(apply(top, t) == apply(top, FiltrationBuilder::normalize_tuple(t)));
    }
  }
}

TEST_CASE("filtration stages") {
  SECTION("n = 2, k = 0: a single edge with two vertices") {
    auto fc = braid_builder(2).build(0);
    REQUIRE(fc.dims() == std::vector<int>{2, 1});
    REQUIRE(fc.cells[2].level == 1);
    REQUIRE(fc.face_ids[2].size() == 2);
    REQUIRE(fc.face_ids[2][0] != fc.face_ids[2][1]);
  }

  SECTION("n = 2, k = 1: a tree on four vertices") {
    FiltrationBuilder fb = braid_builder(2);
    auto fc = fb.build(1);
    REQUIRE(fc.dims() == std::vector<int>{4, 3});
    std::set<MonoidElement> vertex_reps;
    for (const auto& c : fc.cells)
      if (c.level == 0) vertex_reps.insert(c.rep);
    std::set<MonoidElement> expect{MonoidElement(), fb.ambient().element("2"),
                                   fb.ambient().element("12"),
                                   fb.ambient().element("22")};
    REQUIRE(vertex_reps == expect);
  }

  SECTION("n = 1: a discrete set of all elements") {
    auto fc = braid_builder(1).build(2);
    REQUIRE(fc.dims() == std::vector<int>{3});  // e, 1, 11
    for (const auto& row : fc.face_ids) REQUIRE(row.empty());
  }

  SECTION("stages are nested") {
    FiltrationBuilder fb = braid_builder(3);
    auto small = fb.build(1);
    auto big = fb.build(2);
    for (const auto& c : small.cells) REQUIRE(big.contains(c));
  }

  SECTION("every lower cell is an iterated face of a stored top cell") {
    FiltrationBuilder fb = braid_builder(3);
    auto fc = fb.build(2);
    std::set<SimplexRef> reachable;
    for (const auto& c : fc.cells)
      if (c.level == fb.n() - 1)
        for (auto& [tuple, cell] : fb.all_faces(c.rep)) {
          (void)tuple;
          reachable.insert(cell);
        }
    for (const auto& c : fc.cells) REQUIRE(reachable.count(c) == 1);
  }

  SECTION("stored incidences satisfy the simplicial identities") {
    auto fc = braid_builder(3).build(2);
    for (std::size_t c = 0; c < fc.cells.size(); ++c) {
      int p = fc.cells[c].level;
      if (p < 2) continue;
      for (int j = 1; j <= p; ++j)
        for (int i = 0; i < j; ++i) {
          int via_j = fc.face_ids[static_cast<std::size_t>(fc.face_ids[c][j])][i];
          int via_i = fc.face_ids[static_cast<std::size_t>(fc.face_ids[c][i])][j - 1];
          REQUIRE(via_j == via_i);
        }
    }
  }

  SECTION("cell cap fails loudly") {
    FiltrationBuilder fb(braid_sequence(3), kDefaultClassCap, 4);
    REQUIRE_THROWS_AS(fb.build(2), ScaleExceeded);
  }

  SECTION("json shape") {
    auto fc = braid_builder(2).build(1);
    auto j = fc.to_json();
    REQUIRE(j["schema"] == 1);
    REQUIRE(j["n"] == 2);
    REQUIRE(j["k"] == 1);
    REQUIRE(j["cells"].size() == 7);
    REQUIRE(j["cells"][0]["id"] == 0);
    REQUIRE(j["faces"].size() == 6);
  }
}

TEST_CASE("simplicial identities", "[property]") {
  SECTION("exhaustive for small levels") {
    for (int n : {3, 4}) {
      FiltrationBuilder fb = braid_builder(n);
      auto report = fb.check_simplicial_identities(n == 3 ? 3 : 2);
      INFO(report.counterexample.value_or(""));
      REQUIRE(report.passed());
      REQUIRE(report.checked > 0);
    }
  }

  SECTION("vacuous at n = 2") {
    auto report = braid_builder(2).check_simplicial_identities(3);
    REQUIRE(report.passed());
    REQUIRE(report.checked == 0);
  }

  SECTION("with a seed") {
    SequenceConfig cfg;
    cfg.seed = parse_diagram("generators: 2\nm 1 2 4");
    cfg.n = 3;
    FiltrationBuilder fb(cfg);
    REQUIRE(fb.check_simplicial_identities(2).passed());
  }
}

TEST_CASE("face maps are well defined", "[property]") {
  FiltrationBuilder fb = braid_builder(3);
  const Monoid& m = fb.ambient();
  std::set<SimplexRef> cells;
  for (const auto& level : m.elements_by_length(2))
    for (const auto& alpha : level)
      for (auto& [tuple, cell] : fb.all_faces(alpha)) {
        (void)tuple;
        if (cell.level >= 1) cells.insert(cell);
      }
  for (const auto& cell : cells) {
    auto sub = m.submonoid_elements_by_length(fb.level_subset(fb.n() - cell.level - 1), 2);
    for (const auto& level : sub)
      for (const auto& tail : level) {
        MonoidElement moved = m.multiply(cell.rep, tail);
        for (int q = 0; q <= cell.level; ++q)
          REQUIRE(fb.face_of_word(moved.word(), cell.level, q) == fb.face(cell, q));
      }
  }
}
