#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "artinstab/divisibility.hpp"

namespace artinstab {

/// Descending generator run sigma_hi sigma_{hi-1} ... sigma_lo; empty when
/// hi < lo. Runs of this shape are what iterated face maps multiply by.
inline PositiveWord descending_run(Gen hi, Gen lo) {
  PositiveWord w;
  for (Gen s = hi; s >= lo; --s) w.push_back(s);
  return w;
}

struct IdentityBounds {
  int max_index = 4;  // bound on the run lengths i_j, l_j
  int max_j = 3;      // bound on the position index j
};

struct IdentityCheck {
  std::string name;
  long long cases = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }

  long long total_cases() const {
    long long n = 0;
    for (const auto& c : checks) n += c.cases;
    return n;
  }
};

namespace detail {

/// Verifies that the generators sigma[1..N] form a type-A chain inside the
/// monoid's diagram: consecutive labels 3, all other pairs commuting.
inline void require_type_a_chain(const Monoid& m, const std::vector<Gen>& sigma) {
  for (std::size_t i = 1; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      int want = (j == i + 1) ? 3 : 2;
      if (m.finite_label_or_zero(sigma[i], sigma[j]) != want)
        throw Error("generators do not form a type-A chain");
    }
}

}  // namespace detail

/// Brute-force verification of the word and lcm identities satisfied by the
/// descending runs a_j = sigma_{i_j-1+j} ... sigma_j that iterated face maps
/// are built from. `sigma` maps chain position i (1-based) to the generator
/// id of sigma_i in the ambient monoid; sigma[0] is ignored.
///
/// Checks, over all indices within bounds:
///   - run-braiding:  (s_k..s_{j+1}) s_j (s_k..s_{j+1})
///                      = (s_{k-1}s_k)(s_{k-2}s_{k-1})..(s_j s_{j+1} s_j)
///   - run-lcm:       lcm(a_{j+1}, s_j) = a_{j+1} s_j a_{j+1}, via the BFS
///                    lcm search as an independent oracle
///   - hat:           a_{j+1} s_j a_{j+1} = hat(a_j) a_j a_{j+1} s_j
///   - tail-merge:    a_{j+1} s_j = bar(a_j) a_j, and equals the descending
///                    run sigma_{i_{j+1}+j} .. sigma_j
///   - pair-lcm:      for products a = a_2..a_{p+1}, b = b_2..b_{p+1} of
///                    nondecreasing runs, c with c_j the longer of a_j, b_j
///                    satisfies c = a'a = b'b and c = lcm(a, b)
inline IdentityReport verify_divisor_identities(const Monoid& m,
                                                const std::vector<Gen>& sigma,
                                                const IdentityBounds& bounds) {
  detail::require_type_a_chain(m, sigma);
  const int max_i = bounds.max_index;
  const int max_j = bounds.max_j;
  const int top = static_cast<int>(sigma.size()) - 1;  // largest chain position

  auto run = [&](int hi, int lo) {
    PositiveWord w;
    for (int s = hi; s >= lo; --s) {
      if (s < 1 || s > top) throw Error("chain position out of range");
      w.push_back(sigma[static_cast<std::size_t>(s)]);
    }
    return w;
  };
  auto a_word = [&](int i, int j) { return run(i - 1 + j, j); };  // a_j, length i
  auto concat = [](std::initializer_list<PositiveWord> parts) {
    PositiveWord w;
    for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
  };

  IdentityReport report;

  {
    IdentityCheck check{"run-braiding", 0, std::nullopt};
    for (int j = 1; j <= max_j && check.passed(); ++j)
      for (int k = j + 1; k <= std::min(j + max_i, top) && check.passed(); ++k) {
        PositiveWord lhs = concat({run(k, j + 1), run(j, j), run(k, j + 1)});
        PositiveWord rhs;
        for (int r = k - 1; r >= j + 1; --r) {
          rhs.push_back(sigma[static_cast<std::size_t>(r)]);
          rhs.push_back(sigma[static_cast<std::size_t>(r + 1)]);
        }
        rhs = concat({rhs, run(j, j), run(j + 1, j + 1), run(j, j)});
        ++check.cases;
        if (m.canonicalize(lhs) != m.canonicalize(rhs))
          check.counterexample = "j=" + std::to_string(j) + " k=" + std::to_string(k);
      }
    report.checks.push_back(std::move(check));
  }

  {
    IdentityCheck check{"run-lcm", 0, std::nullopt};
    for (int j = 1; j <= max_j && check.passed(); ++j)
      for (int i = 0; i <= max_i && check.passed(); ++i) {
        if (i + j > top) continue;
        MonoidElement aj1 = m.canonicalize(a_word(i, j + 1));
        MonoidElement sj = m.canonicalize(run(j, j));
        MonoidElement expected =
            m.canonicalize(concat({a_word(i, j + 1), run(j, j), a_word(i, j + 1)}));
        ++check.cases;
        LcmResult lcm = lcm_pair(m, aj1, sj, expected.length() + 2);
        if (!lcm.found() || *lcm.value != expected)
          check.counterexample = "j=" + std::to_string(j) + " i=" + std::to_string(i);
      }
    report.checks.push_back(std::move(check));
  }

  {
    IdentityCheck check{"hat", 0, std::nullopt};
    for (int j = 1; j <= max_j && check.passed(); ++j)
      for (int ij1 = 1; ij1 <= max_i && check.passed(); ++ij1)
        for (int ij = 0; ij <= ij1 && check.passed(); ++ij) {
          if (ij1 + j > top) continue;
          PositiveWord lhs = concat({a_word(ij1, j + 1), run(j, j), a_word(ij1, j + 1)});
          PositiveWord hat = run(ij1 + j - 1, ij + j);
          PositiveWord rhs = concat({hat, a_word(ij, j), a_word(ij1, j + 1), run(j, j)});
          ++check.cases;
          if (m.canonicalize(lhs) != m.canonicalize(rhs))
            check.counterexample = "j=" + std::to_string(j) +
                                   " i_{j+1}=" + std::to_string(ij1) +
                                   " i_j=" + std::to_string(ij);
        }
    report.checks.push_back(std::move(check));
  }

  {
    IdentityCheck check{"tail-merge", 0, std::nullopt};
    for (int j = 1; j <= max_j && check.passed(); ++j)
      for (int ij1 = 0; ij1 <= max_i && check.passed(); ++ij1)
        for (int ij = 0; ij <= ij1 && check.passed(); ++ij) {
          if (ij1 + j > top) continue;
          PositiveWord lhs = concat({a_word(ij1, j + 1), run(j, j)});
          ++check.cases;
          // As one descending run (the face-map form), for any i_j.
          if (m.canonicalize(lhs) != m.canonicalize(run(ij1 + j, j))) {
            check.counterexample = "face-map form at j=" + std::to_string(j) +
                                   " i_{j+1}=" + std::to_string(ij1);
            continue;
          }
          if (ij == 0) continue;  // bar(a_j) requires a_j nontrivial
          PositiveWord bar = run(ij1 + j, ij + j);
          if (m.canonicalize(lhs) != m.canonicalize(concat({bar, a_word(ij, j)})))
            check.counterexample = "j=" + std::to_string(j) +
                                   " i_{j+1}=" + std::to_string(ij1) +
                                   " i_j=" + std::to_string(ij);
        }
    report.checks.push_back(std::move(check));
  }

  {
    IdentityCheck check{"pair-lcm", 0, std::nullopt};
    // Nondecreasing tuples of run lengths, one run per position j = 2..p+1.
    std::vector<std::vector<int>> tuples;
    for (int i2 = 0; i2 <= max_i; ++i2) {
      if (max_j >= 2) tuples.push_back({i2});
      for (int i3 = i2; i3 <= max_i && max_j >= 3; ++i3) tuples.push_back({i2, i3});
    }
    auto product_word = [&](const std::vector<int>& t) {
      PositiveWord w;
      for (std::size_t idx = 0; idx < t.size(); ++idx)
        w = concat({w, a_word(t[idx], static_cast<int>(idx) + 2)});
      return w;
    };
    for (const auto& ti : tuples)
      for (const auto& tl : tuples) {
        if (ti.size() != tl.size()) continue;
        int width = static_cast<int>(ti.size());
        if (std::max(ti.back(), tl.back()) + width + 1 > top + 1) continue;
        if (!check.passed()) break;
        std::vector<int> tc(ti.size());
        PositiveWord a_prime, b_prime;
        for (std::size_t idx = 0; idx < ti.size(); ++idx) {
          int j = static_cast<int>(idx) + 2;
          tc[idx] = std::max(ti[idx], tl[idx]);
          if (ti[idx] < tl[idx])
            a_prime = concat({a_prime, run(tl[idx] + j - 1, ti[idx] + j)});
          if (tl[idx] < ti[idx])
            b_prime = concat({b_prime, run(ti[idx] + j - 1, tl[idx] + j)});
        }
        MonoidElement a = m.canonicalize(product_word(ti));
        MonoidElement b = m.canonicalize(product_word(tl));
        MonoidElement c = m.canonicalize(product_word(tc));
        ++check.cases;
        auto label = [&]() {
          auto fmt = [](const std::vector<int>& t) {
            std::string s = "(";
            for (std::size_t i = 0; i < t.size(); ++i)
              s += (i ? "," : "") + std::to_string(t[i]);
            return s + ")";
          };
          return "i=" + fmt(ti) + " l=" + fmt(tl);
        };
        if (m.canonicalize(concat({a_prime, product_word(ti)})) != c ||
            m.canonicalize(concat({b_prime, product_word(tl)})) != c) {
          check.counterexample = "factorization fails at " + label();
          continue;
        }
        LcmResult lcm = lcm_pair(m, a, b, c.length() + 2);
        if (!lcm.found() || *lcm.value != c)
          check.counterexample = "lcm mismatch at " + label();
      }
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace artinstab
