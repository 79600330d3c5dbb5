#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "artinstab/errors.hpp"

namespace artinstab {

/// Generator identifier. Generators of a diagram are the dense range 1..g.
using Gen = int;

/// Edge label m(s,t) of a Coxeter diagram: an integer >= 2 or infinity.
/// Infinity is a distinct state, never a sentinel value, so it cannot leak
/// into arithmetic.
class EdgeLabel {
 public:
  static EdgeLabel finite(int m) {
    if (m < 2) throw ParseError(ParseError::Kind::BadLabel, "edge label must be >= 2");
    EdgeLabel l;
    l.value_ = m;
    return l;
  }

  static EdgeLabel infinity() {
    EdgeLabel l;
    l.value_ = 0;
    return l;
  }

  bool is_finite() const { return value_ != 0; }
  bool is_infinity() const { return value_ == 0; }

  /// Finite value; only valid when is_finite().
  int value() const {
    if (!is_finite()) throw Error("EdgeLabel::value() called on infinity");
    return value_;
  }

  bool operator==(const EdgeLabel& o) const { return value_ == o.value_; }
  bool operator!=(const EdgeLabel& o) const { return value_ != o.value_; }

 private:
  int value_ = 2;  // 0 encodes infinity; encapsulated here only
};

namespace detail {
inline std::pair<Gen, Gen> ordered_pair(Gen s, Gen t) {
  return s < t ? std::make_pair(s, t) : std::make_pair(t, s);
}
}  // namespace detail

/// A Coxeter diagram on generators 1..g: the symmetric labeling m(s,t).
/// Unstored pairs mean m = 2 (commuting); the diagonal m(s,s) = 1 is never
/// stored. This is the entire data of an Artin presentation.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;

  explicit CoxeterDiagram(int generator_count) : count_(generator_count) {
    if (generator_count < 0)
      throw ParseError(ParseError::Kind::BadSyntax, "negative generator count");
  }

  int generator_count() const { return count_; }

  void set_label(Gen s, Gen t, EdgeLabel m) {
    check_pair(s, t);
    auto key = detail::ordered_pair(s, t);
    if (labels_.count(key))
      throw ParseError(ParseError::Kind::DuplicateEdge,
                       "edge {" + std::to_string(s) + "," + std::to_string(t) +
                           "} given twice");
    if (m.is_finite() && m.value() == 2) return;  // normalize: m=2 is "no edge"
    labels_.emplace(key, m);
  }

  EdgeLabel label(Gen s, Gen t) const {
    check_pair(s, t);
    auto it = labels_.find(detail::ordered_pair(s, t));
    return it == labels_.end() ? EdgeLabel::finite(2) : it->second;
  }

  bool commutes(Gen s, Gen t) const {
    auto m = label(s, t);
    return m.is_finite() && m.value() == 2;
  }

  bool odd_edge(Gen s, Gen t) const {
    auto m = label(s, t);
    return m.is_finite() && m.value() % 2 == 1;
  }

  /// Stored labels only (m >= 3 or infinity), keyed by ordered pair.
  const std::map<std::pair<Gen, Gen>, EdgeLabel>& edges() const { return labels_; }

  /// Induced subdiagram on `subset` (ascending generator ids), renumbered
  /// densely to 1..subset.size() preserving order.
  CoxeterDiagram restricted(const std::vector<Gen>& subset) const {
    CoxeterDiagram out(static_cast<int>(subset.size()));
    std::map<Gen, Gen> renum;
    for (std::size_t i = 0; i < subset.size(); ++i)
      renum[subset[i]] = static_cast<Gen>(i + 1);
    for (const auto& [pair, m] : labels_) {
      auto s = renum.find(pair.first);
      auto t = renum.find(pair.second);
      if (s != renum.end() && t != renum.end())
        out.set_label(s->second, t->second, m);
    }
    return out;
  }

  /// Swap the identities of two generators, relabeling edges accordingly.
  CoxeterDiagram with_swapped(Gen a, Gen b) const {
    if (a == b) return *this;
    check_gen(a);
    check_gen(b);
    auto swap_gen = [&](Gen x) { return x == a ? b : (x == b ? a : x); };
    CoxeterDiagram out(count_);
    for (const auto& [pair, m] : labels_)
      out.set_label(swap_gen(pair.first), swap_gen(pair.second), m);
    return out;
  }

  bool operator==(const CoxeterDiagram& o) const {
    return count_ == o.count_ && labels_ == o.labels_;
  }
  bool operator!=(const CoxeterDiagram& o) const { return !(*this == o); }

 private:
  void check_gen(Gen s) const {
    if (s < 1 || s > count_)
      throw ParseError(ParseError::Kind::UnknownGenerator,
                       "generator " + std::to_string(s) + " out of range 1.." +
                           std::to_string(count_));
  }

  void check_pair(Gen s, Gen t) const {
    check_gen(s);
    check_gen(t);
    if (s == t)
      throw ParseError(ParseError::Kind::SelfPair,
                       "self-pair {" + std::to_string(s) + "," + std::to_string(s) + "}");
  }

  int count_ = 0;
  std::map<std::pair<Gen, Gen>, EdgeLabel> labels_;
};

/// A parsed diagram file: the diagram plus its (optional) anchor line.
struct DiagramFile {
  CoxeterDiagram diagram;
  Gen anchor = 1;
};

/// Parses the line-oriented diagram format:
///
///   generators: <g>
///   m <s> <t> <v>      v in {2,3,...} or "inf"
///   anchor: <s>        optional, defaults to 1
///
/// '#' starts a comment; blank lines are ignored.
inline DiagramFile parse_diagram_file(std::istream& in) {
  DiagramFile out;
  bool have_count = false;
  bool have_anchor = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank
    auto fail = [&](ParseError::Kind k, const std::string& msg) {
      throw ParseError(k, "line " + std::to_string(lineno) + ": " + msg);
    };
    if (head == "generators:") {
      if (have_count) fail(ParseError::Kind::BadSyntax, "generators given twice");
      int g;
      if (!(ls >> g) || g < 0) fail(ParseError::Kind::BadSyntax, "bad generator count");
      out.diagram = CoxeterDiagram(g);
      have_count = true;
    } else if (head == "m") {
      if (!have_count) fail(ParseError::Kind::BadSyntax, "edge before generators line");
      Gen s, t;
      std::string v;
      if (!(ls >> s >> t >> v)) fail(ParseError::Kind::BadSyntax, "bad edge line");
      EdgeLabel m = EdgeLabel::infinity();
      if (v != "inf") {
        int value = 0;
        try {
          std::size_t pos = 0;
          value = std::stoi(v, &pos);
          if (pos != v.size()) throw std::invalid_argument(v);
        } catch (const std::exception&) {
          fail(ParseError::Kind::BadLabel, "label '" + v + "' is not an integer or inf");
        }
        if (value < 2) fail(ParseError::Kind::BadLabel, "label must be >= 2 or inf");
        m = EdgeLabel::finite(value);
      }
      try {
        out.diagram.set_label(s, t, m);
      } catch (ParseError& e) {
        throw ParseError(e.kind, "line " + std::to_string(lineno) + ": " + e.what());
      }
    } else if (head == "anchor:") {
      if (have_anchor) fail(ParseError::Kind::BadSyntax, "anchor given twice");
      if (!(ls >> out.anchor)) fail(ParseError::Kind::BadSyntax, "bad anchor line");
      have_anchor = true;
    } else {
      fail(ParseError::Kind::BadSyntax, "unrecognized line '" + head + "'");
    }
  }
  if (!have_count)
    throw ParseError(ParseError::Kind::BadSyntax, "missing 'generators:' line");
  if (out.anchor < 1 || out.anchor > std::max(out.diagram.generator_count(), 1))
    throw ParseError(ParseError::Kind::UnknownGenerator, "anchor out of range");
  return out;
}

inline CoxeterDiagram parse_diagram(std::istream& in) {
  return parse_diagram_file(in).diagram;
}

inline CoxeterDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

}  // namespace artinstab
