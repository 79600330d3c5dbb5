#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "artinstab/homology.hpp"

using namespace artinstab;

namespace {

IMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IMatrix m(static_cast<int>(rows.size()),
            rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<long long> invariants_of(const SnfResult& r) {
  std::vector<long long> out;
  for (const Int& d : r.invariants) out.push_back(d.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("smith normal form") {
  SECTION("hand-checked diagonal") {
    auto r = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(invariants_of(r) == std::vector<long long>{1, 6});
    REQUIRE(r.rank == 2);
  }

  SECTION("zero matrix") {
    auto r = smith_normal_form(IMatrix(3, 2));
    REQUIRE(r.rank == 0);
    REQUIRE(r.invariants.empty());
  }

  SECTION("identity") {
    auto r = smith_normal_form(IMatrix::identity(3));
    REQUIRE(invariants_of(r) == std::vector<long long>{1, 1, 1});
  }

  SECTION("torsion shows up as nontrivial invariants") {
    // presentation matrix of Z/2 + Z/12
    auto r = smith_normal_form(from_rows({{2, 0}, {0, 12}}));
    REQUIRE(invariants_of(r) == std::vector<long long>{2, 12});
    REQUIRE(r.torsion().size() == 2);
  }

  SECTION("transforms re-multiply to the diagonal") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 5);
      int cols = 1 + static_cast<int>(rng() % 5);
      IMatrix m(rows, cols);
      for (auto& x : m.a) x = entry(rng);
      auto r = smith_normal_form(m, true);
      REQUIRE(r.transforms.has_value());
      IMatrix product = r.transforms->first * m * r.transforms->second;
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          Int expect = 0;
          if (i == j && i < r.rank) expect = r.invariants[static_cast<std::size_t>(i)];
          REQUIRE(product.at(i, j) == expect);
        }
      for (std::size_t i = 1; i < r.invariants.size(); ++i)
        REQUIRE(r.invariants[i] % r.invariants[i - 1] == 0);
    }
  }
}

TEST_CASE("chain complexes of filtration stages") {
  SECTION("single edge gets a (-1, +1) column") {
    auto fc = FiltrationBuilder(braid_sequence(2)).build(0);
    auto cc = chain_complex(fc);
    REQUIRE(cc.dims == std::vector<int>{2, 1});
    std::vector<long long> col{cc.boundaries[1].at(0, 0).convert_to<long long>(),
                               cc.boundaries[1].at(1, 0).convert_to<long long>()};
    std::sort(col.begin(), col.end());
    REQUIRE(col == std::vector<long long>{-1, 1});
  }

  SECTION("tree stage has full-rank boundary") {
    auto fc = FiltrationBuilder(braid_sequence(2)).build(1);
    auto cc = chain_complex(fc);
    REQUIRE(cc.dims == std::vector<int>{4, 3});
    REQUIRE(smith_normal_form(cc.boundaries[1]).rank == 3);
  }

  SECTION("boundary squares to zero on 2-dimensional stages") {
    auto fc = FiltrationBuilder(braid_sequence(3)).build(2);
    REQUIRE_NOTHROW(chain_complex(fc));
  }
}

TEST_CASE("reduced homology") {
  SECTION("tree is acyclic") {
    auto fc = FiltrationBuilder(braid_sequence(2)).build(1);
    auto report = homology(fc);
    REQUIRE(report.at(0).betti == 0);
    REQUIRE(report.at(1).betti == 0);
    REQUIRE(report.at(0).torsion.empty());
  }

  SECTION("discrete set of m vertices has reduced rank m-1") {
    auto fc = FiltrationBuilder(braid_sequence(1)).build(2);
    auto report = homology(fc);
    REQUIRE(report.at(0).betti == 2);  // three vertices
    auto unreduced = homology(chain_complex(fc), false);
    REQUIRE(unreduced.at(0).betti == 3);
  }

  SECTION("level-3 stages are connected and simply wedge-like") {
    FiltrationBuilder fb(braid_sequence(3));
    for (int k = 0; k <= 3; ++k) {
      auto report = homology(fb.build(k));
      REQUIRE(report.at(0).betti == 0);
      REQUIRE(report.at(1).betti == 0);
      REQUIRE(report.at(2).torsion.empty());
      REQUIRE(report.at(2).betti >= 0);
    }
  }
}

TEST_CASE("connectivity witness") {
  SECTION("level 2 stages") {
    FiltrationBuilder fb(braid_sequence(2));
    for (int k = 0; k <= 4; ++k) {
      auto report = connectivity_check(fb.build(k), 2);
      INFO("k=" << k << " " << report.failure.value_or(""));
      REQUIRE(report.passed);
      REQUIRE(report.euler_ok);
    }
  }

  SECTION("level 1 is a non-empty discrete set") {
    auto report = connectivity_check(FiltrationBuilder(braid_sequence(1)).build(3), 1);
    REQUIRE(report.passed);
    REQUIRE(report.vertex_count == 4);  // e, 1, 11, 111
  }
}

TEST_CASE("homology is invariant under cell reordering", "[property]") {
  auto fc = FiltrationBuilder(braid_sequence(3)).build(2);
  auto cc = chain_complex(fc);
  auto base = homology(cc);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    IntegerChainComplex shuffled = cc;
    // Permute the cells within each degree, rewriting the two boundary
    // matrices each degree touches.
    for (std::size_t p = 0; p < cc.dims.size(); ++p) {
      int d = cc.dims[p];
      std::vector<int> perm(static_cast<std::size_t>(d));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      if (p >= 1) {
        IMatrix& m = shuffled.boundaries[p];
        IMatrix out(m.rows, m.cols);
        for (int i = 0; i < m.rows; ++i)
          for (int j = 0; j < m.cols; ++j) out.at(i, perm[j]) = m.at(i, j);
        m = out;
      }
      if (p + 1 < cc.dims.size()) {
        IMatrix& m = shuffled.boundaries[p + 1];
        IMatrix out(m.rows, m.cols);
        for (int i = 0; i < m.rows; ++i)
          for (int j = 0; j < m.cols; ++j) out.at(perm[i], j) = m.at(i, j);
        m = out;
      }
    }
    auto got = homology(shuffled);
    for (std::size_t i = 0; i < base.degrees.size(); ++i) {
      REQUIRE(got.degrees[i].betti == base.degrees[i].betti);
      REQUIRE(got.degrees[i].torsion == base.degrees[i].torsion);
    }
  }
}

TEST_CASE("euler characteristic consistency", "[property]") {
  for (int n : {1, 2, 3}) {
    FiltrationBuilder fb(braid_sequence(n));
    for (int k = 0; k <= 3; ++k)
      REQUIRE(euler_characteristic_consistent(chain_complex(fb.build(k))));
  }
}
