#pragma once

#include <numeric>
#include <vector>

#include "artinstab/diagram.hpp"

namespace artinstab {

/// Configuration of the diagram sequence A_0, A_1, ..., A_n: a seed diagram
/// containing a distinguished anchor generator, extended at level n by the
/// chain of tail generators sigma_2, ..., sigma_n attached to the anchor.
struct SequenceConfig {
  CoxeterDiagram seed;
  Gen anchor = 1;
  int n = 0;
};

/// The seed with the anchor relabeled to generator 1 (identity swap of the
/// two ids). All level arithmetic below assumes this normalization.
inline CoxeterDiagram normalized_seed(const SequenceConfig& cfg) {
  if (cfg.seed.generator_count() < 1)
    throw ParseError(ParseError::Kind::UnknownGenerator,
                     "seed must contain the anchor generator");
  if (cfg.anchor < 1 || cfg.anchor > cfg.seed.generator_count())
    throw ParseError(ParseError::Kind::UnknownGenerator, "anchor not in seed");
  return cfg.seed.with_swapped(1, cfg.anchor);
}

/// Global generator id of sigma_i at any level. The anchor is sigma_1 = 1;
/// tail generators occupy the indices after the seed, so sigma_i for i >= 2
/// is seed_size + i - 1. Levels then embed into one another identically.
inline Gen sigma_index(int seed_size, int i) {
  return i == 1 ? 1 : seed_size + i - 1;
}

/// Generator ids of level p inside the ambient level-n diagram.
/// Level 0 is the seed without the anchor; level p >= 1 is the seed plus the
/// tail sigma_2..sigma_p, which is the contiguous range 1..seed_size+p-1.
inline std::vector<Gen> level_generators(int seed_size, int p) {
  std::vector<Gen> out;
  if (p == 0) {
    for (Gen s = 2; s <= seed_size; ++s) out.push_back(s);
  } else {
    out.resize(static_cast<std::size_t>(seed_size + p - 1));
    std::iota(out.begin(), out.end(), 1);
  }
  return out;
}

/// The level-n diagram of the sequence as a standalone dense diagram.
/// For n = 0 the anchor is removed and the remaining seed generators are
/// renumbered down by one.
inline CoxeterDiagram level_diagram(const SequenceConfig& cfg) {
  if (cfg.n < 0) throw ParseError(ParseError::Kind::BadSyntax, "level must be >= 0");
  CoxeterDiagram seed = normalized_seed(cfg);
  const int g = seed.generator_count();
  if (cfg.n == 0) return seed.restricted(level_generators(g, 0));
  CoxeterDiagram out(g + cfg.n - 1);
  for (const auto& [pair, m] : seed.edges()) out.set_label(pair.first, pair.second, m);
  for (int i = 1; i < cfg.n; ++i)
    out.set_label(sigma_index(g, i), sigma_index(g, i + 1), EdgeLabel::finite(3));
  return out;
}

inline CoxeterDiagram level_diagram(SequenceConfig cfg, int n) {
  cfg.n = n;
  return level_diagram(cfg);
}

/// Convenience: the seed consisting of the anchor alone, giving the braid
/// monoid sequence A_n^+ = B_{n+1}^+.
inline SequenceConfig braid_sequence(int n) {
  SequenceConfig cfg;
  cfg.seed = CoxeterDiagram(1);
  cfg.anchor = 1;
  cfg.n = n;
  return cfg;
}

}  // namespace artinstab
