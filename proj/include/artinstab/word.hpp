#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "artinstab/diagram.hpp"

namespace artinstab {

/// A positive word: a finite sequence of generator indices.
using PositiveWord = std::vector<Gen>;

inline constexpr std::size_t kDefaultClassCap = 100000;

/// Word of length k alternating s,t starting with s.
inline PositiveWord alternating_product(Gen s, Gen t, int k) {
  PositiveWord w;
  w.reserve(static_cast<std::size_t>(std::max(k, 0)));
  for (int j = 0; j < k; ++j) w.push_back(j % 2 == 0 ? s : t);
  return w;
}

/// Shortlex order: by length, then lexicographically.
inline bool shortlex_less(const PositiveWord& a, const PositiveWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Word literal: generators juxtaposed as single digits ("121"), or
/// dot-separated ("1.2.1") which also covers indices above 9; "e" is the
/// empty word.
inline PositiveWord parse_word(std::string_view text) {
  PositiveWord w;
  if (text == "e" || text.empty()) return w;
  if (text.find('.') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t dot = text.find('.', pos);
      if (dot == std::string_view::npos) dot = text.size();
      std::string piece(text.substr(pos, dot - pos));
      if (piece.empty())
        throw ParseError(ParseError::Kind::BadSyntax, "empty letter in word literal");
      w.push_back(std::stoi(piece));
      pos = dot + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw ParseError(ParseError::Kind::BadSyntax,
                         std::string("bad letter '") + c + "' in word literal");
      w.push_back(c - '0');
    }
  }
  return w;
}

inline std::string format_word(const PositiveWord& w) {
  if (w.empty()) return "e";
  bool digits = std::all_of(w.begin(), w.end(), [](Gen s) { return s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

/// An element of the Artin monoid: an equivalence class of positive words
/// under the length-preserving braid relations, held by its shortlex-least
/// representative. Only Monoid produces non-identity values, so equality of
/// elements is equality of representatives.
class MonoidElement {
 public:
  MonoidElement() = default;  // the identity

  const PositiveWord& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  std::string str() const { return format_word(word_); }

  bool operator==(const MonoidElement& o) const { return word_ == o.word_; }
  bool operator!=(const MonoidElement& o) const { return word_ != o.word_; }
  bool operator<(const MonoidElement& o) const { return shortlex_less(word_, o.word_); }

 private:
  friend class Monoid;
  explicit MonoidElement(PositiveWord w) : word_(std::move(w)) {}

  PositiveWord word_;
};

/// Letters appearing in an element; well defined because the relations have
/// the same letters on both sides.
inline std::vector<Gen> letter_set(const MonoidElement& a) {
  std::vector<Gen> out(a.word());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool letterwise_commutes(const CoxeterDiagram& d, const MonoidElement& a,
                                const MonoidElement& b) {
  auto la = letter_set(a);
  auto lb = letter_set(b);
  for (Gen s : la)
    for (Gen t : lb) {
      if (s == t) return false;
      if (!d.commutes(s, t)) return false;
    }
  return true;
}

struct DivisorPoset;  // defined in divisibility.hpp

/// Positive-word arithmetic for a fixed Coxeter diagram. Pure interface over
/// immutable values; the canonical-form and divisor caches behave as
/// functions (idempotent inserts), so concurrent use is safe.
class Monoid {
 public:
  explicit Monoid(CoxeterDiagram diagram, std::size_t class_cap = kDefaultClassCap)
      : diagram_(std::move(diagram)), class_cap_(class_cap) {
    const int g = diagram_.generator_count();
    if (g > 200)
      throw ScaleExceeded("diagrams this large are out of desk scale");
    labels_.assign(static_cast<std::size_t>(g) * g, 2);
    for (Gen s = 1; s <= g; ++s)
      for (Gen t = 1; t <= g; ++t) {
        if (s == t) continue;
        EdgeLabel m = diagram_.label(s, t);
        labels_[idx(s, t)] = m.is_finite() ? m.value() : 0;  // 0 = infinity
      }
  }

  const CoxeterDiagram& diagram() const { return diagram_; }
  int generator_count() const { return diagram_.generator_count(); }
  std::size_t class_cap() const { return class_cap_; }

  /// Finite label lookup; 0 encodes infinity (no relation).
  int finite_label_or_zero(Gen s, Gen t) const { return labels_[idx(s, t)]; }

  /// Walks the rewriting closure of `start`, calling visit(word) on each
  /// class member (including `start`). Stops early when visit returns false.
  /// Returns false on early stop.
  template <typename Visit>
  bool walk_class(const PositiveWord& start, Visit&& visit) const {
    check_letters(start);
    std::unordered_set<std::string> seen;
    std::deque<PositiveWord> queue;
    seen.insert(encode(start));
    queue.push_back(start);
    while (!queue.empty()) {
      PositiveWord w = std::move(queue.front());
      queue.pop_front();
      if (!visit(static_cast<const PositiveWord&>(w))) return false;
      bool grown = false;
      for_each_rewrite(w, [&](PositiveWord&& nw) {
        std::string key = encode(nw);
        if (seen.insert(std::move(key)).second) {
          queue.push_back(std::move(nw));
          grown = true;
        }
      });
      if (grown && seen.size() > class_cap_)
        throw ClassSizeExceeded("equivalence class of " + format_word(start) +
                                " exceeds cap " + std::to_string(class_cap_));
    }
    return true;
  }

  /// All words obtainable from w by the braid relations, sorted shortlex.
  std::vector<PositiveWord> equivalence_class(const PositiveWord& w) const {
    std::vector<PositiveWord> out;
    walk_class(w, [&](const PositiveWord& m) {
      out.push_back(m);
      return true;
    });
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

  /// Shortlex-least representative of the class of w.
  MonoidElement canonicalize(const PositiveWord& w) const {
    if (w.empty()) return MonoidElement();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = canon_cache_.find(encode(w));
      if (it != canon_cache_.end()) return MonoidElement(it->second);
    }
    PositiveWord best = w;
    std::vector<PositiveWord> members;
    walk_class(w, [&](const PositiveWord& m) {
      if (m < best) best = m;  // same length throughout the class
      members.push_back(m);
      return true;
    });
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (members.size() <= kCacheWholeClassLimit) {
        for (const auto& m : members) canon_cache_.emplace(encode(m), best);
      } else {
        canon_cache_.emplace(encode(w), best);
      }
    }
    return MonoidElement(std::move(best));
  }

  MonoidElement element(const PositiveWord& w) const { return canonicalize(w); }
  MonoidElement element(std::string_view literal) const {
    return canonicalize(parse_word(literal));
  }

  MonoidElement multiply(const MonoidElement& a, const MonoidElement& b) const {
    PositiveWord w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return canonicalize(w);
  }

  MonoidElement multiply(const MonoidElement& a, const MonoidElement& b,
                         const MonoidElement& c) const {
    return multiply(multiply(a, b), c);
  }

  /// All elements of length <= max_len, grouped by length, each group sorted.
  std::vector<std::vector<MonoidElement>> elements_by_length(int max_len) const {
    std::vector<Gen> gens(static_cast<std::size_t>(generator_count()));
    std::iota(gens.begin(), gens.end(), 1);
    return closure_by_length(gens, max_len);
  }

  /// Elements of the parabolic submonoid generated by `sigma`, by length.
  std::vector<std::vector<MonoidElement>> submonoid_elements_by_length(
      const std::vector<Gen>& sigma, int max_len) const {
    return closure_by_length(sigma, max_len);
  }

  // Divisor-poset memo slots; managed by divisibility.hpp.
  std::shared_ptr<const DivisorPoset> poset_lookup(const MonoidElement& a) const;
  std::shared_ptr<const DivisorPoset> poset_store(
      const MonoidElement& a, std::shared_ptr<const DivisorPoset> p) const;

 private:
  static constexpr std::size_t kCacheWholeClassLimit = 3000;

  std::size_t idx(Gen s, Gen t) const {
    return static_cast<std::size_t>(s - 1) * generator_count() +
           static_cast<std::size_t>(t - 1);
  }

  void check_letters(const PositiveWord& w) const {
    for (Gen s : w)
      if (s < 1 || s > generator_count())
        throw ParseError(ParseError::Kind::UnknownGenerator,
                         "letter " + std::to_string(s) + " not a generator");
  }

  static std::string encode(const PositiveWord& w) {
    std::string key;
    key.reserve(w.size());
    for (Gen s : w) key.push_back(static_cast<char>(s));
    return key;
  }

  // Applies every single-relation rewrite pi(s,t;m) -> pi(t,s;m) at every
  // position of w.
  template <typename Fn>
  void for_each_rewrite(const PositiveWord& w, Fn&& fn) const {
    const int g = generator_count();
    const std::size_t len = w.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
      Gen s = w[i];
      for (Gen t = 1; t <= g; ++t) {
        if (t == s) continue;
        int m = labels_[idx(s, t)];
        if (m == 0) continue;  // infinity: no relation
        std::size_t span = static_cast<std::size_t>(m);
        if (i + span > len) continue;
        bool match = true;
        for (std::size_t j = 1; j < span; ++j)
          if (w[i + j] != (j % 2 == 0 ? s : t)) {
            match = false;
            break;
          }
        if (!match) continue;
        PositiveWord nw = w;
        for (std::size_t j = 0; j < span; ++j) nw[i + j] = j % 2 == 0 ? t : s;
        fn(std::move(nw));
      }
    }
  }

  std::vector<std::vector<MonoidElement>> closure_by_length(
      const std::vector<Gen>& gens, int max_len) const {
    check_letters(gens);
    std::vector<std::vector<MonoidElement>> out;
    out.push_back({MonoidElement()});
    for (int len = 1; len <= max_len; ++len) {
      std::set<MonoidElement> next;
      for (const MonoidElement& a : out.back())
        for (Gen s : gens) {
          PositiveWord w = a.word();
          w.push_back(s);
          next.insert(canonicalize(w));
        }
      out.emplace_back(next.begin(), next.end());
    }
    return out;
  }

  CoxeterDiagram diagram_;
  std::size_t class_cap_;
  std::vector<int> labels_;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, PositiveWord> canon_cache_;

  mutable std::mutex poset_mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const DivisorPoset>>
      poset_cache_;
};

}  // namespace artinstab
