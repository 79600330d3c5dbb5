#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artinstab/word.hpp"

namespace artinstab {

/// All right-divisors of a target element, each paired with one left
/// quotient: target = quotient * divisor. Built by scanning every suffix of
/// every class representative; the simplest trustworthy oracle.
struct DivisorPoset {
  MonoidElement target;
  std::map<MonoidElement, MonoidElement> divisors;  // divisor -> left quotient

  bool contains(const MonoidElement& b) const { return divisors.count(b) != 0; }
};

inline std::shared_ptr<const DivisorPoset> Monoid::poset_lookup(
    const MonoidElement& a) const {
  std::lock_guard<std::mutex> lock(poset_mu_);
  auto it = poset_cache_.find(encode(a.word()));
  return it == poset_cache_.end() ? nullptr : it->second;
}

inline std::shared_ptr<const DivisorPoset> Monoid::poset_store(
    const MonoidElement& a, std::shared_ptr<const DivisorPoset> p) const {
  std::lock_guard<std::mutex> lock(poset_mu_);
  auto [it, inserted] = poset_cache_.emplace(encode(a.word()), std::move(p));
  return it->second;  // idempotent: first insert wins
}

inline std::shared_ptr<const DivisorPoset> divisor_poset(const Monoid& m,
                                                         const MonoidElement& a) {
  if (auto hit = m.poset_lookup(a)) return hit;
  auto poset = std::make_shared<DivisorPoset>();
  poset->target = a;
  m.walk_class(a.word(), [&](const PositiveWord& w) {
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      PositiveWord prefix(w.begin(), w.begin() + cut);
      PositiveWord suffix(w.begin() + cut, w.end());
      poset->divisors.emplace(m.canonicalize(suffix), m.canonicalize(prefix));
    }
    return true;
  });
  return m.poset_store(a, std::move(poset));
}

/// Does b right-divide a? When yes, returns the left quotient q with
/// a = q * b (unique by cancellation); otherwise nullopt.
inline std::optional<MonoidElement> right_quotient(const Monoid& m,
                                                   const MonoidElement& b,
                                                   const MonoidElement& a) {
  if (b.is_identity()) return a;
  if (b.length() > a.length()) return std::nullopt;
  // Letters of a divisor appear in the element.
  {
    auto la = letter_set(a);
    for (Gen s : letter_set(b))
      if (!std::binary_search(la.begin(), la.end(), s)) return std::nullopt;
  }
  if (auto poset = m.poset_lookup(a)) {
    auto it = poset->divisors.find(b);
    if (it == poset->divisors.end()) return std::nullopt;
    return it->second;
  }
  // Suffix scan with early exit; avoids building the full poset.
  const std::size_t blen = static_cast<std::size_t>(b.length());
  std::optional<MonoidElement> quotient;
  m.walk_class(a.word(), [&](const PositiveWord& w) {
    PositiveWord suffix(w.end() - blen, w.end());
    if (m.canonicalize(suffix) == b) {
      PositiveWord prefix(w.begin(), w.end() - blen);
      quotient = m.canonicalize(prefix);
      return false;
    }
    return true;
  });
  return quotient;
}

inline bool right_divides(const Monoid& m, const MonoidElement& b,
                          const MonoidElement& a) {
  return right_quotient(m, b, a).has_value();
}

/// EndGen: generators of the parabolic submonoid that right-divide a.
inline std::vector<Gen> end_gen(const Monoid& m, const std::vector<Gen>& sigma_m,
                                const MonoidElement& a) {
  std::set<Gen> wanted(sigma_m.begin(), sigma_m.end());
  std::set<Gen> found;
  m.walk_class(a.word(), [&](const PositiveWord& w) {
    if (!w.empty() && wanted.count(w.back())) found.insert(w.back());
    return found.size() < wanted.size();
  });
  return std::vector<Gen>(found.begin(), found.end());
}

/// EndMon: the nontrivial elements of the parabolic submonoid generated by
/// sigma_m that right-divide a. The identity is excluded, so the set is
/// empty exactly when a has no right-divisor in the submonoid.
inline std::vector<MonoidElement> end_mon(const Monoid& m,
                                          const std::vector<Gen>& sigma_m,
                                          const MonoidElement& a) {
  auto poset = divisor_poset(m, a);
  std::vector<Gen> sorted_sigma(sigma_m);
  std::sort(sorted_sigma.begin(), sorted_sigma.end());
  std::vector<MonoidElement> out;
  for (const auto& [b, q] : poset->divisors) {
    (void)q;
    if (b.is_identity()) continue;
    auto letters = letter_set(b);
    bool inside = std::all_of(letters.begin(), letters.end(), [&](Gen s) {
      return std::binary_search(sorted_sigma.begin(), sorted_sigma.end(), s);
    });
    if (inside) out.push_back(b);
  }
  return out;  // map iteration: already sorted shortlex
}

/// Least common multiple of EndMon(a) with respect to sigma_m, read off as
/// the unique member every member right-divides; e when EndMon is empty.
inline MonoidElement end_mon_lcm(const Monoid& m, const std::vector<Gen>& sigma_m,
                                 const MonoidElement& a) {
  auto members = end_mon(m, sigma_m, a);
  if (members.empty()) return MonoidElement();
  int max_len = 0;
  for (const auto& b : members) max_len = std::max(max_len, b.length());
  std::optional<MonoidElement> best;
  for (const auto& cand : members) {
    if (cand.length() != max_len) continue;
    bool all = std::all_of(members.begin(), members.end(), [&](const MonoidElement& b) {
      return right_divides(m, b, cand);
    });
    if (!all) continue;
    if (best)
      throw MaximumNotUnique("two distinct maxima in EndMon(" + a.str() + ")");
    best = cand;
  }
  if (!best)
    throw MaximumNotUnique("EndMon(" + a.str() + ") has no maximum element");
  return *best;
}

/// Canonical reduction of a with respect to the parabolic submonoid on
/// sigma_m: a = reduced * tail with tail the lcm of EndMon(a), and reduced
/// carrying no further right-divisor in the submonoid.
struct Reduction {
  MonoidElement original;
  MonoidElement reduced;
  MonoidElement tail;
  std::vector<Gen> submonoid;
};

inline Reduction reduce_by(const Monoid& m, const std::vector<Gen>& sigma_m,
                           const MonoidElement& a) {
  Reduction r;
  r.original = a;
  r.submonoid = sigma_m;
  std::sort(r.submonoid.begin(), r.submonoid.end());
  r.tail = end_mon_lcm(m, sigma_m, a);
  auto q = right_quotient(m, r.tail, a);
  if (!q)
    throw MaximumNotUnique("EndMon lcm does not divide its own target " + a.str());
  r.reduced = *q;
  return r;
}

/// Fast path when only the reduced part is needed.
inline MonoidElement reduced_part(const Monoid& m, const std::vector<Gen>& sigma_m,
                                  const MonoidElement& a) {
  return reduce_by(m, sigma_m, a).reduced;
}

/// Same coset of the parabolic submonoid: reductions agree.
inline bool coset_equal(const Monoid& m, const std::vector<Gen>& sigma_m,
                        const MonoidElement& a, const MonoidElement& b) {
  return reduced_part(m, sigma_m, a) == reduced_part(m, sigma_m, b);
}

/// Is a reduced with respect to sigma_m, i.e. no generator of the submonoid
/// right-divides it?
inline bool is_reduced(const Monoid& m, const std::vector<Gen>& sigma_m,
                       const MonoidElement& a) {
  return end_gen(m, sigma_m, a).empty();
}

/// The reduced elements ("coset representatives") of length <= max_len,
/// grouped by length.
inline std::vector<std::vector<MonoidElement>> reduced_elements_by_length(
    const Monoid& m, const std::vector<Gen>& sigma_m, int max_len) {
  auto all = m.elements_by_length(max_len);
  std::vector<std::vector<MonoidElement>> out(all.size());
  for (std::size_t len = 0; len < all.size(); ++len)
    for (const auto& a : all[len])
      if (is_reduced(m, sigma_m, a)) out[len].push_back(a);
  return out;
}

/// Result of a pairwise lcm search.
struct LcmResult {
  enum class Status { Found, NoCommonMultiple, Undetermined };

  Status status = Status::Undetermined;
  std::optional<MonoidElement> value;

  bool found() const { return status == Status::Found; }
};

inline int default_lcm_cap(const MonoidElement& a, const MonoidElement& b) {
  return a.length() + b.length() + 8;
}

/// Least common multiple by breadth-first search over multiples of the
/// longer element in increasing length, returning the first multiple the
/// other element right-divides (least by Brieskorn-Saito, since common
/// multiples of minimal length are unique). Nonexistence is only certified
/// syntactically: some generator right-dividing a and some generator
/// right-dividing b carry an infinite label, which rules out any common
/// multiple. Otherwise hitting the cap yields Undetermined.
inline LcmResult lcm_pair(const Monoid& m, const MonoidElement& a,
                          const MonoidElement& b, int cap) {
  if (cap < std::max(a.length(), b.length()))
    throw Error("lcm_pair cap below operand length");
  LcmResult result;
  auto all_gens = [&]() {
    std::vector<Gen> gens(static_cast<std::size_t>(m.generator_count()));
    std::iota(gens.begin(), gens.end(), 1);
    return gens;
  }();
  for (Gen s : end_gen(m, all_gens, a))
    for (Gen t : end_gen(m, all_gens, b))
      if (s != t && m.finite_label_or_zero(s, t) == 0) {
        result.status = LcmResult::Status::NoCommonMultiple;
        return result;
      }

  const MonoidElement& base = a.length() >= b.length() ? a : b;
  const MonoidElement& other = a.length() >= b.length() ? b : a;
  std::set<MonoidElement> layer{base};
  for (int len = base.length(); len <= cap; ++len) {
    std::optional<MonoidElement> hit;
    for (const MonoidElement& x : layer) {
      if (!right_divides(m, other, x)) continue;
      if (hit && *hit != x)
        throw MaximumNotUnique("two distinct minimal common multiples of " +
                               a.str() + " and " + b.str());
      hit = x;
    }
    if (hit) {
      result.status = LcmResult::Status::Found;
      result.value = *hit;
      return result;
    }
    if (len == cap) break;
    std::set<MonoidElement> next;
    for (const MonoidElement& x : layer)
      for (Gen s = 1; s <= m.generator_count(); ++s) {
        PositiveWord w;
        w.reserve(x.word().size() + 1);
        w.push_back(s);
        w.insert(w.end(), x.word().begin(), x.word().end());
        next.insert(m.canonicalize(w));
      }
    layer = std::move(next);
  }
  return result;
}

inline LcmResult lcm_pair(const Monoid& m, const MonoidElement& a,
                          const MonoidElement& b) {
  return lcm_pair(m, a, b, default_lcm_cap(a, b));
}

/// Lcm of a finite set, folded pairwise. Empty set has lcm e.
inline LcmResult lcm_set(const Monoid& m, const std::vector<MonoidElement>& elems,
                         int cap) {
  LcmResult acc;
  acc.status = LcmResult::Status::Found;
  acc.value = MonoidElement();
  for (const auto& b : elems) {
    acc = lcm_pair(m, *acc.value, b, cap);
    if (!acc.found()) return acc;
  }
  return acc;
}

/// Checks that (reduced, tail) -> reduced * tail is a bijection onto the
/// elements of length <= max_len: products are pairwise distinct and the
/// per-length counts of the monoid equal the convolution of the per-length
/// counts of the reduced set and the submonoid.
struct DecompositionReport {
  bool passed = false;
  std::vector<long long> monoid_counts;
  std::vector<long long> reduced_counts;
  std::vector<long long> submonoid_counts;
  std::optional<std::string> counterexample;
};

inline DecompositionReport verify_decomposition(const Monoid& m,
                                                const std::vector<Gen>& sigma_m,
                                                int max_len) {
  DecompositionReport report;
  auto all = m.elements_by_length(max_len);
  auto reduced = reduced_elements_by_length(m, sigma_m, max_len);
  auto sub = m.submonoid_elements_by_length(sigma_m, max_len);
  for (int len = 0; len <= max_len; ++len) {
    report.monoid_counts.push_back(static_cast<long long>(all[len].size()));
    report.reduced_counts.push_back(static_cast<long long>(reduced[len].size()));
    report.submonoid_counts.push_back(static_cast<long long>(sub[len].size()));
  }

  // Injectivity: distinct (reduced, tail) pairs give distinct products.
  std::map<MonoidElement, std::pair<MonoidElement, MonoidElement>> seen;
  for (int lr = 0; lr <= max_len; ++lr)
    for (const auto& r : reduced[lr])
      for (int lt = 0; lt + lr <= max_len; ++lt)
        for (const auto& t : sub[lt]) {
          MonoidElement prod = m.multiply(r, t);
          auto [it, inserted] = seen.emplace(prod, std::make_pair(r, t));
          if (!inserted) {
            report.counterexample = "products collide: (" + r.str() + "," + t.str() +
                                    ") and (" + it->second.first.str() + "," +
                                    it->second.second.str() + ") both give " +
                                    prod.str();
            return report;
          }
        }

  // Surjectivity by counting: monoid counts equal the convolution.
  for (int len = 0; len <= max_len; ++len) {
    long long conv = 0;
    for (int j = 0; j <= len; ++j)
      conv += report.reduced_counts[j] * report.submonoid_counts[len - j];
    if (conv != report.monoid_counts[len]) {
      report.counterexample = "count mismatch at length " + std::to_string(len) +
                              ": monoid has " + std::to_string(report.monoid_counts[len]) +
                              ", convolution gives " + std::to_string(conv);
      return report;
    }
  }
  report.passed = true;
  return report;
}

}  // namespace artinstab
