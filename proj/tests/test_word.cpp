#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "artinstab/sequence.hpp"
#include "artinstab/word.hpp"

using namespace artinstab;

namespace {

Monoid braid_monoid(int n) { return Monoid(level_diagram(braid_sequence(n))); }

}  // namespace

TEST_CASE("alternating products") {
  REQUIRE(alternating_product(1, 2, 3) == PositiveWord{1, 2, 1});
  REQUIRE(alternating_product(1, 2, 0).empty());
  REQUIRE(alternating_product(2, 1, 2) == PositiveWord{2, 1});
}

TEST_CASE("word literals") {
  REQUIRE(parse_word("121") == PositiveWord{1, 2, 1});
  REQUIRE(parse_word("1.2.1") == PositiveWord{1, 2, 1});
  REQUIRE(parse_word("10.2") == PositiveWord{10, 2});
  REQUIRE(parse_word("e").empty());
  REQUIRE(format_word({1, 2, 1}) == "121");
  REQUIRE(format_word({10, 2}) == "10.2");
  REQUIRE(format_word({}) == "e");
}

TEST_CASE("equivalence classes") {
  Monoid b3 = braid_monoid(2);  // two generators: the braid monoid B_3^+

  SECTION("braid relation class") {
    auto cls = b3.equivalence_class({1, 2, 1});
    REQUIRE(cls == std::vector<PositiveWord>{{1, 2, 1}, {2, 1, 2}});
  }

  SECTION("empty word") {
    REQUIRE(b3.equivalence_class({}) == std::vector<PositiveWord>{{}});
  }

  SECTION("free monoid has singleton classes") {
    CoxeterDiagram d(2);
    d.set_label(1, 2, EdgeLabel::infinity());
    Monoid free(d);
    REQUIRE(free.equivalence_class({1, 2}) == std::vector<PositiveWord>{{1, 2}});
  }

  SECTION("class cap fails loudly") {
    Monoid capped(level_diagram(braid_sequence(4)), 3);
    REQUIRE_THROWS_AS(capped.equivalence_class({1, 2, 1, 3, 2, 1}), ClassSizeExceeded);
  }
}

TEST_CASE("canonical forms") {
  Monoid b3 = braid_monoid(2);
  REQUIRE(b3.canonicalize({2, 1, 2}).word() == PositiveWord{1, 2, 1});
  REQUIRE(b3.canonicalize({1, 2}).word() == PositiveWord{1, 2});
  REQUIRE(b3.canonicalize({}).is_identity());
  REQUIRE(b3.element("212") == b3.element("121"));
}

TEST_CASE("multiplication") {
  Monoid b3 = braid_monoid(2);
  auto a = b3.element("21");
  auto b = b3.element("2");
  REQUIRE(b3.multiply(a, b).word() == PositiveWord{1, 2, 1});
  REQUIRE(b3.multiply(MonoidElement(), a) == a);
  REQUIRE(b3.multiply(a, MonoidElement()) == a);
  REQUIRE(b3.multiply(b3.element("1"), b3.element("1")).word() == PositiveWord{1, 1});
}

TEST_CASE("letter sets") {
  Monoid b4 = braid_monoid(3);
  REQUIRE(letter_set(b4.element("121")) == std::vector<Gen>{1, 2});
  REQUIRE(letter_set(MonoidElement()).empty());
  REQUIRE(letter_set(b4.element("33")) == std::vector<Gen>{3});

  SECTION("constant across a class") {
    for (const auto& w : b4.equivalence_class({1, 2, 1, 3, 2})) {
      REQUIRE(letter_set(b4.canonicalize(w)) ==
              letter_set(b4.element("12132")));
      std::set<Gen> letters(w.begin(), w.end());
      REQUIRE(std::vector<Gen>(letters.begin(), letters.end()) ==
              letter_set(b4.element("12132")));
    }
  }
}

TEST_CASE("infinite labels mix freely with finite ones") {
  CoxeterDiagram d(3);
  d.set_label(1, 2, EdgeLabel::infinity());  // 3 commutes with both
  Monoid m(d);
  REQUIRE(m.equivalence_class({2, 1, 3}) ==
          std::vector<PositiveWord>{{2, 1, 3}, {2, 3, 1}, {3, 2, 1}});
  REQUIRE(m.canonicalize({3, 2, 1}).word() == PositiveWord{2, 1, 3});
  REQUIRE(m.multiply(m.element("21"), m.element("3")) == m.element("213"));
  auto counts = m.elements_by_length(3);
  REQUIRE(counts[2].size() == 7);  // 9 words, two commutation identifications
}

TEST_CASE("letterwise commuting") {
  Monoid b4 = braid_monoid(3);
  REQUIRE(letterwise_commutes(b4.diagram(), b4.element("1"), b4.element("3")));
  REQUIRE_FALSE(letterwise_commutes(b4.diagram(), b4.element("1"), b4.element("2")));
  REQUIRE_FALSE(letterwise_commutes(b4.diagram(), b4.element("1"), b4.element("1")));
}

TEST_CASE("enumeration by length") {
  Monoid b3 = braid_monoid(2);
  auto table = b3.elements_by_length(5);
  std::vector<std::size_t> counts;
  for (const auto& level : table) counts.push_back(level.size());
  REQUIRE(counts == std::vector<std::size_t>{1, 2, 4, 7, 12, 20});

  SECTION("submonoid on one generator is a line") {
    auto sub = b3.submonoid_elements_by_length({1}, 4);
    for (const auto& level : sub) REQUIRE(level.size() == 1);
  }
}

namespace {

// Every word of length <= max_len over the generators.
std::vector<PositiveWord> all_words(int gens, int max_len) {
  std::vector<PositiveWord> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Gen s = 1; s <= gens; ++s) {
        PositiveWord w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("rewriting closure is closed", "[property]") {
  for (int n : {2, 3}) {
    Monoid m = braid_monoid(n);
    int max_len = n == 2 ? 6 : 5;
    for (const auto& w : all_words(n, max_len)) {
      auto cls = m.equivalence_class(w);
      std::set<PositiveWord> members(cls.begin(), cls.end());
      for (const auto& v : cls)
        for (const auto& u : m.equivalence_class(v)) REQUIRE(members.count(u) == 1);
    }
  }
}

TEST_CASE("canonical equality matches class intersection", "[property]") {
  Monoid b3 = braid_monoid(2);
  auto words = all_words(2, 5);
  std::vector<std::set<PositiveWord>> classes;
  std::vector<MonoidElement> canon;
  for (const auto& w : words) {
    auto cls = b3.equivalence_class(w);
    classes.emplace_back(cls.begin(), cls.end());
    canon.push_back(b3.canonicalize(w));
  }
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      bool intersects = std::any_of(
          classes[i].begin(), classes[i].end(),
          [&](const PositiveWord& w) { return classes[j].count(w) != 0; });
      REQUIRE(intersects == (canon[i] == canon[j]));
    }
}

TEST_CASE("length is a homomorphism", "[property]") {
  Monoid b3 = braid_monoid(2);
  auto table = b3.elements_by_length(4);
  for (const auto& level_a : table)
    for (const auto& a : level_a)
      for (const auto& level_b : table)
        for (const auto& b : level_b)
          REQUIRE(b3.multiply(a, b).length() == a.length() + b.length());
}

TEST_CASE("cancellation", "[property]") {
  Monoid b3 = braid_monoid(2);
  auto table = b3.elements_by_length(4);
  std::vector<MonoidElement> elems;
  for (const auto& level : table) elems.insert(elems.end(), level.begin(), level.end());
  for (const auto& a : elems) {
    std::map<MonoidElement, const MonoidElement*> left, right;
    for (const auto& b : elems) {
      auto [itl, newl] = left.emplace(b3.multiply(a, b), &b);
      REQUIRE(newl);
      auto [itr, newr] = right.emplace(b3.multiply(b, a), &b);
      REQUIRE(newr);
    }
  }
}
