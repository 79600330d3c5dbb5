#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "artinstab/divisibility.hpp"
#include "artinstab/parallel.hpp"
#include "artinstab/sequence.hpp"

namespace artinstab {

/// A cell of the level-n complex: the class of an element with respect to
/// the submonoid at level n-p-1, held by its reduced representative. Cells
/// at level p are p-dimensional; two cells are equal exactly when level and
/// representative match.
struct SimplexRef {
  int level = 0;
  MonoidElement rep;

  bool operator==(const SimplexRef& o) const {
    return level == o.level && rep == o.rep;
  }
  bool operator!=(const SimplexRef& o) const { return !(*this == o); }
  bool operator<(const SimplexRef& o) const {
    if (level != o.level) return level < o.level;
    return rep < o.rep;
  }

  std::string str() const {
    return "[" + rep.str() + "]@" + std::to_string(level);
  }
};

/// A tuple of face-map indices, first applied map first.
using FaceTuple = std::vector<int>;

/// The finite filtration stage: all iterated faces of the top cells whose
/// reduced representative has length at most k, with face incidences.
struct FiltrationComplex {
  int n = 0;
  int k = 0;
  std::vector<SimplexRef> cells;              // sorted by (level, shortlex rep)
  std::vector<std::vector<int>> face_ids;     // face_ids[c][q]; empty at level 0
  std::map<SimplexRef, int> index;

  int cell_id(const SimplexRef& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
  }

  bool contains(const SimplexRef& s) const { return index.count(s) != 0; }

  /// Cell counts per level 0..n-1.
  std::vector<int> dims() const {
    std::vector<int> out(static_cast<std::size_t>(std::max(n, 1)), 0);
    for (const auto& c : cells) ++out[static_cast<std::size_t>(c.level)];
    return out;
  }

  std::vector<std::array<int, 3>> incidence_triples() const {
    std::vector<std::array<int, 3>> out;
    for (std::size_t c = 0; c < face_ids.size(); ++c)
      for (std::size_t q = 0; q < face_ids[c].size(); ++q)
        out.push_back({static_cast<int>(c), static_cast<int>(q), face_ids[c][q]});
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json cell_list = nlohmann::json::array();
    for (std::size_t i = 0; i < cells.size(); ++i)
      cell_list.push_back({{"level", cells[i].level},
                           {"rep", cells[i].rep.str()},
                           {"id", static_cast<int>(i)}});
    nlohmann::json face_list = nlohmann::json::array();
    for (const auto& t : incidence_triples())
      face_list.push_back({t[0], t[1], t[2]});
    return {{"schema", 1}, {"n", n}, {"k", k}, {"cells", cell_list},
            {"faces", face_list}};
  }
};

struct SimplicialIdentityReport {
  long long checked = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Builds the complex attached to a diagram sequence at level n: top cells
/// are classes of monoid elements with respect to level 0, faces are taken
/// by right multiplication with descending runs of tail generators followed
/// by reduction at the next level up.
class FiltrationBuilder {
 public:
  explicit FiltrationBuilder(const SequenceConfig& cfg,
                             std::size_t class_cap = kDefaultClassCap,
                             std::size_t cell_cap = 200000)
      : n_(cfg.n),
        seed_size_(cfg.seed.generator_count()),
        cell_cap_(cell_cap),
        ambient_(level_diagram(cfg), class_cap) {
    if (n_ < 1) throw Error("complex needs level n >= 1");
    for (int p = 0; p <= n_; ++p)
      level_subsets_.push_back(level_generators(seed_size_, p));
  }

  int n() const { return n_; }
  const Monoid& ambient() const { return ambient_; }

  /// Global generator id of the tail generator sigma_i.
  Gen sigma(int i) const { return sigma_index(seed_size_, i); }

  /// Generators of the level-p submonoid inside the ambient diagram.
  const std::vector<Gen>& level_subset(int p) const {
    return level_subsets_[static_cast<std::size_t>(p)];
  }

  /// The word a face map multiplies by: for the q-th face at level p this is
  /// the descending run sigma_{n-p+q} ... sigma_{n-p+1} (empty when q = 0).
  /// The q = p case is the p-letter run sigma_n ... sigma_{n-p+1}.
  PositiveWord face_word(int level, int q) const {
    PositiveWord w;
    for (int i = n_ - level + q; i >= n_ - level + 1; --i) w.push_back(sigma(i));
    return w;
  }

  /// Top cell represented by alpha: level n-1, reduced with respect to the
  /// level-0 submonoid (trivial for a one-generator seed).
  SimplexRef chamber(const MonoidElement& alpha) const {
    return {n_ - 1, reduced_part(ambient_, level_subset(0), alpha)};
  }

  SimplexRef face(const SimplexRef& s, int q) const {
    if (s.level < 1 || q < 0 || q > s.level)
      throw Error("face index out of range");
    return face_of_word(s.rep.word(), s.level, q);
  }

  /// Face computed from an arbitrary representative word; used by the
  /// well-definedness checks.
  SimplexRef face_of_word(const PositiveWord& w, int level, int q) const {
    PositiveWord moved = w;
    PositiveWord run = face_word(level, q);
    moved.insert(moved.end(), run.begin(), run.end());
    return {level - 1,
            reduced_part(ambient_, level_subset(n_ - level), ambient_.canonicalize(moved))};
  }

  /// Rewrites a tuple of face-map indices into its nondecreasing form via
  /// the simplicial identities; the rewritten tuple reaches the same cell.
  static FaceTuple normalize_tuple(FaceTuple t) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j + 1 < t.size(); ++j)
        if (t[j + 1] < t[j]) {
          int x = t[j], y = t[j + 1];
          t[j] = y;
          t[j + 1] = x - 1;
          changed = true;
        }
    }
    return t;
  }

  /// Every iterated face of the chamber of alpha (the chamber itself
  /// included, under the empty tuple), each distinct cell once with its
  /// lexicographically least nondecreasing witness tuple.
  std::vector<std::pair<FaceTuple, SimplexRef>> all_faces(
      const MonoidElement& alpha) const {
    std::map<SimplexRef, FaceTuple> seen;
    FaceTuple tuple;
    walk_faces(chamber(alpha), 0, tuple, seen);
    std::vector<std::pair<FaceTuple, SimplexRef>> out;
    for (const auto& [cell, witness] : seen) out.emplace_back(witness, cell);
    return out;
  }

  /// The filtration stage: all faces of chambers with representative length
  /// at most k.
  FiltrationComplex build(int k, int jobs = 1) const {
    auto chambers = reduced_elements_by_length(ambient_, level_subset(0), k);
    std::vector<MonoidElement> tops;
    for (const auto& level : chambers)
      tops.insert(tops.end(), level.begin(), level.end());

    std::vector<std::set<SimplexRef>> shards(tops.size());
    parallel_for(tops.size(), jobs, [&](std::size_t i) {
      for (auto& [tuple, cell] : all_faces(tops[i])) {
        (void)tuple;
        shards[i].insert(cell);
      }
    });

    FiltrationComplex fc;
    fc.n = n_;
    fc.k = k;
    std::set<SimplexRef> all;
    for (auto& shard : shards) all.merge(shard);
    if (all.size() > cell_cap_)
      throw ScaleExceeded("complex has " + std::to_string(all.size()) +
                          " cells, above the cap");
    fc.cells.assign(all.begin(), all.end());  // (level, shortlex) order
    for (std::size_t i = 0; i < fc.cells.size(); ++i)
      fc.index.emplace(fc.cells[i], static_cast<int>(i));

    fc.face_ids.resize(fc.cells.size());
    parallel_for(fc.cells.size(), jobs, [&](std::size_t i) {
      const SimplexRef& cell = fc.cells[i];
      if (cell.level == 0) return;
      auto& row = fc.face_ids[i];
      row.resize(static_cast<std::size_t>(cell.level) + 1);
      for (int q = 0; q <= cell.level; ++q) {
        int id = fc.cell_id(face(cell, q));
        if (id < 0)
          throw Error("complex not closed under faces at " + cell.str());
        row[static_cast<std::size_t>(q)] = id;
      }
    });
    return fc;
  }

  /// Exhaustively checks the simplicial identities d_i d_j = d_{j-1} d_i
  /// (i < j) on every face of every chamber with length <= max_len.
  SimplicialIdentityReport check_simplicial_identities(int max_len,
                                                       int jobs = 1) const {
    SimplicialIdentityReport report;
    auto elems = ambient_.elements_by_length(max_len);
    std::vector<MonoidElement> alphas;
    for (const auto& level : elems)
      alphas.insert(alphas.end(), level.begin(), level.end());

    std::set<SimplexRef> cells;
    for (const auto& alpha : alphas)
      for (auto& [tuple, cell] : all_faces(alpha)) {
        (void)tuple;
        if (cell.level >= 2) cells.insert(cell);
      }

    std::vector<SimplexRef> todo(cells.begin(), cells.end());
    std::vector<std::optional<std::string>> failures(todo.size());
    std::vector<long long> counts(todo.size(), 0);
    parallel_for(todo.size(), jobs, [&](std::size_t idx) {
      const SimplexRef& s = todo[idx];
      for (int j = 1; j <= s.level; ++j)
        for (int i = 0; i < j; ++i) {
          ++counts[idx];
          SimplexRef lhs = face(face(s, j), i);
          SimplexRef rhs = face(face(s, i), j - 1);
          if (lhs != rhs && !failures[idx])
            failures[idx] = "d_" + std::to_string(i) + " d_" + std::to_string(j) +
                            " != d_" + std::to_string(j - 1) + " d_" +
                            std::to_string(i) + " at " + s.str();
        }
    });
    for (std::size_t idx = 0; idx < todo.size(); ++idx) {
      report.checked += counts[idx];
      if (failures[idx] && !report.counterexample)
        report.counterexample = failures[idx];
    }
    return report;
  }

 private:
  void walk_faces(const SimplexRef& cell, int min_q, FaceTuple& tuple,
                  std::map<SimplexRef, FaceTuple>& seen) const {
    auto it = seen.find(cell);
    if (it == seen.end()) {
      seen.emplace(cell, tuple);
    } else if (tuple < it->second) {
      it->second = tuple;
    }
    if (cell.level == 0) return;
    for (int q = min_q; q <= cell.level; ++q) {
      tuple.push_back(q);
      walk_faces(face(cell, q), q, tuple, seen);
      tuple.pop_back();
    }
  }

  int n_;
  int seed_size_;
  std::size_t cell_cap_;
  Monoid ambient_;
  std::vector<std::vector<Gen>> level_subsets_;
};

}  // namespace artinstab
