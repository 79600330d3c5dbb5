#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "artinstab/diagram.hpp"

namespace artinstab {

/// Classification of one connected component of a Coxeter diagram against
/// the table of finite irreducible types.
struct ComponentType {
  enum class Family { A, B, D, I2, F4, H3, H4, E6, E7, E8, NotFiniteType };

  Family family = Family::NotFiniteType;
  int rank = 0;       // number of generators in the component
  int i2_label = 0;   // edge label for I2(p)
  std::vector<Gen> generators;

  bool finite_type() const { return family != Family::NotFiniteType; }

  std::string name() const {
    switch (family) {
      case Family::A: return "A" + std::to_string(rank);
      case Family::B: return "B" + std::to_string(rank);
      case Family::D: return "D" + std::to_string(rank);
      case Family::I2: return "I2(" + std::to_string(i2_label) + ")";
      case Family::F4: return "F4";
      case Family::H3: return "H3";
      case Family::H4: return "H4";
      case Family::E6: return "E6";
      case Family::E7: return "E7";
      case Family::E8: return "E8";
      case Family::NotFiniteType: return "not-finite-type";
    }
    return "?";
  }
};

struct ClassificationResult {
  std::vector<ComponentType> components;  // generator sets partition 1..g

  bool all_finite_type() const {
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentType& c) { return c.finite_type(); });
  }
};

namespace detail {

// Adjacency of the diagram graph: neighbors joined by any edge with m >= 3
// (finite or infinite). m = 2 pairs are non-edges.
inline std::map<Gen, std::vector<Gen>> diagram_adjacency(const CoxeterDiagram& d) {
  std::map<Gen, std::vector<Gen>> adj;
  for (Gen s = 1; s <= d.generator_count(); ++s) adj[s];
  for (const auto& [pair, m] : d.edges()) {
    (void)m;
    adj[pair.first].push_back(pair.second);
    adj[pair.second].push_back(pair.first);
  }
  for (auto& [s, nb] : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

inline std::vector<std::vector<Gen>> connected_components(const CoxeterDiagram& d) {
  auto adj = diagram_adjacency(d);
  std::vector<std::vector<Gen>> comps;
  std::vector<bool> seen(static_cast<std::size_t>(d.generator_count()) + 1, false);
  for (Gen s = 1; s <= d.generator_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Gen> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Gen v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Gen w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Classify one connected component. Works on the induced subdiagram shape:
// the finite table contains only trees that are paths or single forks, so
// everything else is rejected up front.
inline ComponentType classify_component(const CoxeterDiagram& d,
                                        const std::vector<Gen>& comp) {
  ComponentType out;
  out.generators = comp;
  out.rank = static_cast<int>(comp.size());

  auto not_finite = [&]() {
    out.family = ComponentType::Family::NotFiniteType;
    return out;
  };

  auto adj = diagram_adjacency(d);
  std::vector<std::pair<std::pair<Gen, Gen>, EdgeLabel>> edges;
  for (const auto& [pair, m] : d.edges())
    if (std::binary_search(comp.begin(), comp.end(), pair.first) &&
        std::binary_search(comp.begin(), comp.end(), pair.second)) {
      if (m.is_infinity()) return not_finite();
      edges.emplace_back(pair, m);
    }

  if (out.rank == 1) {
    out.family = ComponentType::Family::A;
    return out;
  }

  // Must be a tree.
  if (edges.size() != comp.size() - 1) return not_finite();

  std::vector<Gen> deg3;
  for (Gen v : comp) {
    std::size_t deg = adj[v].size();
    if (deg > 3) return not_finite();
    if (deg == 3) deg3.push_back(v);
  }
  if (deg3.size() > 1) return not_finite();

  int labeled = 0;   // edges with m >= 4
  int max_label = 0;
  for (const auto& [pair, m] : edges) {
    (void)pair;
    if (m.value() >= 4) {
      ++labeled;
      max_label = std::max(max_label, m.value());
    }
  }

  if (deg3.empty()) {
    // A path. Walk it from one end to read off the label sequence.
    Gen end = 0;
    for (Gen v : comp)
      if (adj[v].size() == 1) {
        end = v;
        break;
      }
    std::vector<int> labels;
    Gen prev = 0, cur = end;
    while (true) {
      Gen next = 0;
      for (Gen w : adj[cur])
        if (w != prev) next = w;
      if (next == 0) break;
      labels.push_back(d.label(cur, next).value());
      prev = cur;
      cur = next;
    }
    if (labeled == 0) {
      out.family = ComponentType::Family::A;
      return out;
    }
    if (out.rank == 2) {
      out.family = max_label == 4 ? ComponentType::Family::B : ComponentType::Family::I2;
      out.i2_label = max_label;
      return out;
    }
    if (labeled != 1) return not_finite();
    bool at_end = labels.front() >= 4 || labels.back() >= 4;
    if (max_label == 4 && at_end) {
      out.family = ComponentType::Family::B;
      return out;
    }
    if (max_label == 4 && out.rank == 4 && labels[1] == 4) {
      out.family = ComponentType::Family::F4;
      return out;
    }
    if (max_label == 5 && at_end && out.rank == 3) {
      out.family = ComponentType::Family::H3;
      return out;
    }
    if (max_label == 5 && at_end && out.rank == 4) {
      out.family = ComponentType::Family::H4;
      return out;
    }
    return not_finite();
  }

  // Single fork: all edges must be unlabeled (m = 3).
  if (labeled != 0) return not_finite();
  Gen center = deg3.front();
  std::array<int, 3> arms{};
  int arm = 0;
  for (Gen start : adj[center]) {
    int len = 1;
    Gen prev = center, cur = start;
    while (true) {
      Gen next = 0;
      for (Gen w : adj[cur])
        if (w != prev) next = w;
      if (next == 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms[arm++] = len;
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    out.family = ComponentType::Family::D;  // D_{arms[2] + 3}
    return out;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    out.family = arms[2] == 2 ? ComponentType::Family::E6
               : arms[2] == 3 ? ComponentType::Family::E7
                              : ComponentType::Family::E8;
    return out;
  }
  return not_finite();
}

}  // namespace detail

/// Decomposes the diagram into connected components and matches each against
/// the finite irreducible types; anything else is NotFiniteType.
inline ClassificationResult classify_finite_type(const CoxeterDiagram& d) {
  ClassificationResult out;
  for (const auto& comp : detail::connected_components(d))
    out.components.push_back(detail::classify_component(d, comp));
  return out;
}

/// First homology of the Artin group given by the diagram, computed from the
/// abelianized presentation. The relation pi(s,t;m) = pi(t,s;m) abelianizes
/// to s = t when m is odd and finite, and to nothing otherwise, so H_1 is
/// free of rank the number of connected components of the odd-edge graph.
struct Abelianization {
  int rank = 0;
  std::vector<long long> torsion;  // always empty; kept for report symmetry
};

inline Abelianization abelianization(const CoxeterDiagram& d) {
  const int g = d.generator_count();
  std::vector<Gen> parent(static_cast<std::size_t>(g) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Gen x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Gen s = 1; s <= g; ++s)
    for (Gen t = s + 1; t <= g; ++t)
      if (d.odd_edge(s, t)) parent[find(s)] = find(t);
  Abelianization out;
  for (Gen s = 1; s <= g; ++s)
    if (find(s) == s) ++out.rank;
  return out;
}

}  // namespace artinstab
