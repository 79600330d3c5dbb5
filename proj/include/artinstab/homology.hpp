#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "artinstab/complex.hpp"
#include "artinstab/errors.hpp"

namespace artinstab {

/// Exact integers for boundary matrices and their normal forms. Entries are
/// arbitrary precision; overflow is not a failure mode here.
using Int = boost::multiprecision::cpp_int;

struct IMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IMatrix() = default;
  IMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  bool is_zero() const {
    for (const Int& x : a)
      if (x != 0) return false;
    return true;
  }

  static IMatrix identity(int n) {
    IMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IMatrix operator*(const IMatrix& o) const {
    IMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
      }
    return out;
  }

  bool operator==(const IMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

/// Smith normal form: diagonal invariant factors d_1 | d_2 | ... | d_r with
/// r the rank. When transforms are requested, row_ops * M * col_ops equals
/// the diagonalized matrix, both factors unimodular.
struct SnfResult {
  std::vector<Int> invariants;
  int rank = 0;
  std::optional<std::pair<IMatrix, IMatrix>> transforms;  // (row_ops, col_ops)

  std::vector<Int> torsion() const {
    std::vector<Int> out;
    for (const Int& d : invariants)
      if (d > 1) out.push_back(d);
    return out;
  }
};

inline SnfResult smith_normal_form(IMatrix m, bool with_transforms = false) {
  const int rows = m.rows, cols = m.cols;
  IMatrix u, v;
  if (with_transforms) {
    u = IMatrix::identity(rows);
    v = IMatrix::identity(cols);
  }

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    if (with_transforms)
      for (int c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    if (with_transforms)
      for (int r = 0; r < cols; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto add_row = [&](int dst, int src, const Int& factor) {  // row_dst += f*row_src
    for (int c = 0; c < cols; ++c) m.at(dst, c) += factor * m.at(src, c);
    if (with_transforms)
      for (int c = 0; c < rows; ++c) u.at(dst, c) += factor * u.at(src, c);
  };
  auto add_col = [&](int dst, int src, const Int& factor) {
    for (int r = 0; r < rows; ++r) m.at(r, dst) += factor * m.at(r, src);
    if (with_transforms)
      for (int r = 0; r < cols; ++r) v.at(r, dst) += factor * v.at(r, src);
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < cols; ++c) m.at(i, c) = -m.at(i, c);
    if (with_transforms)
      for (int c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
  };

  SnfResult result;
  int limit = std::min(rows, cols);
  for (int t = 0; t < limit; ++t) {
    while (true) {
      // Smallest-magnitude pivot keeps intermediate entries tame.
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          const Int& x = m.at(i, j);
          if (x == 0) continue;
          if (pi < 0 || abs(x) < abs(m.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto diagonal_done;
      swap_rows(t, pi);
      swap_cols(t, pj);
      if (m.at(t, t) < 0) negate_row(t);

      bool cleared = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        if (q != 0) add_row(i, t, -q);
        if (m.at(i, t) != 0) cleared = false;  // remainder: smaller pivot exists
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        if (q != 0) add_col(j, t, -q);
        if (m.at(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols && fixed; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
  }
diagonal_done:
  for (int t = 0; t < limit; ++t) {
    if (m.at(t, t) == 0) break;
    result.invariants.push_back(m.at(t, t));
  }
  result.rank = static_cast<int>(result.invariants.size());
  if (with_transforms) result.transforms = std::make_pair(std::move(u), std::move(v));
  return result;
}

/// The cellular chain complex of a filtration stage: boundary entries are
/// signed counts of face incidences, sum over q of (-1)^q [d_q cell].
struct IntegerChainComplex {
  std::vector<int> dims;            // cells per degree
  std::vector<IMatrix> boundaries;  // boundaries[p] : degree p -> p-1, p >= 1
};

inline IntegerChainComplex chain_complex(const FiltrationComplex& fc) {
  IntegerChainComplex cc;
  cc.dims = fc.dims();
  const int levels = static_cast<int>(cc.dims.size());

  std::vector<int> offset(static_cast<std::size_t>(levels) + 1, 0);
  for (int p = 0; p < levels; ++p) offset[p + 1] = offset[p] + cc.dims[p];

  cc.boundaries.resize(static_cast<std::size_t>(levels));
  for (int p = 1; p < levels; ++p)
    cc.boundaries[p] = IMatrix(cc.dims[p - 1], cc.dims[p]);
  for (std::size_t id = 0; id < fc.cells.size(); ++id) {
    int p = fc.cells[id].level;
    if (p == 0) continue;
    int col = static_cast<int>(id) - offset[p];
    for (std::size_t q = 0; q < fc.face_ids[id].size(); ++q) {
      int row = fc.face_ids[id][q] - offset[p - 1];
      cc.boundaries[p].at(row, col) += (q % 2 == 0) ? 1 : -1;
    }
  }

  for (int p = 2; p < levels; ++p) {
    IMatrix square = cc.boundaries[p - 1] * cc.boundaries[p];
    if (!square.is_zero())
      throw BoundarySquareNonzero("boundary composite nonzero at degree " +
                                  std::to_string(p));
  }
  return cc;
}

struct HomologyReport {
  struct Degree {
    int degree = 0;
    long long betti = 0;
    std::vector<Int> torsion;
  };

  bool reduced = true;
  std::vector<Degree> degrees;

  const Degree& at(int i) const { return degrees[static_cast<std::size_t>(i)]; }

  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : degrees) {
      nlohmann::json torsion = nlohmann::json::array();
      for (const Int& t : d.torsion) torsion.push_back(t.convert_to<long long>());
      out.push_back({{"degree", d.degree}, {"betti", d.betti}, {"torsion", torsion}});
    }
    return out;
  }
};

/// Homology of the chain complex from Smith normal forms of the boundaries;
/// reduced subtracts one from the rank in degree zero of a non-empty complex.
inline HomologyReport homology(const IntegerChainComplex& cc, bool reduced = true) {
  HomologyReport report;
  report.reduced = reduced;
  const int levels = static_cast<int>(cc.dims.size());
  long long total = 0;
  for (int d : cc.dims) total += d;

  std::vector<SnfResult> snf(static_cast<std::size_t>(levels) + 1);
  for (int p = 1; p < levels; ++p)
    snf[p] = smith_normal_form(cc.boundaries[p]);

  for (int i = 0; i < levels; ++i) {
    HomologyReport::Degree deg;
    deg.degree = i;
    int rank_in = i >= 1 ? snf[i].rank : 0;
    int rank_out = i + 1 < levels ? snf[i + 1].rank : 0;
    deg.betti = cc.dims[i] - rank_in - rank_out;
    if (i + 1 < levels) deg.torsion = snf[i + 1].torsion();
    if (reduced && i == 0 && total > 0) deg.betti -= 1;
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

inline HomologyReport homology(const FiltrationComplex& fc, bool reduced = true) {
  return homology(chain_complex(fc), reduced);
}

/// Euler characteristic consistency: the alternating sum of cell counts
/// equals the alternating sum of unreduced Betti numbers.
inline bool euler_characteristic_consistent(const IntegerChainComplex& cc) {
  auto unreduced = homology(cc, false);
  long long cells = 0, betti = 0;
  for (std::size_t p = 0; p < cc.dims.size(); ++p) {
    long long sign = p % 2 == 0 ? 1 : -1;
    cells += sign * cc.dims[p];
    betti += sign * unreduced.degrees[p].betti;
  }
  return cells == betti;
}

/// Connectivity witness for a stage of the level-n complex: reduced homology
/// vanishes through degree n-2 and the top degree is torsion-free.
struct ConnectivityReport {
  int n = 0;
  int k = 0;
  bool passed = false;
  bool euler_ok = false;
  long long top_betti = 0;
  long long vertex_count = 0;
  HomologyReport reduced_homology;
  std::optional<std::string> failure;

  nlohmann::json to_json() const {
    nlohmann::json out{{"schema", 1},
                       {"n", n},
                       {"k", k},
                       {"passed", passed},
                       {"euler_ok", euler_ok},
                       {"top_betti", top_betti},
                       {"homology", reduced_homology.to_json()}};
    out["counterexample"] = failure ? nlohmann::json(*failure) : nlohmann::json();
    return out;
  }
};

inline ConnectivityReport connectivity_check(const FiltrationComplex& fc, int n) {
  ConnectivityReport report;
  report.n = n;
  report.k = fc.k;
  auto cc = chain_complex(fc);
  report.reduced_homology = homology(cc, true);
  report.euler_ok = euler_characteristic_consistent(cc);
  report.vertex_count = cc.dims.empty() ? 0 : cc.dims[0];
  report.top_betti = report.reduced_homology.at(n - 1).betti;

  report.passed = report.euler_ok;
  for (int i = 0; i <= n - 2; ++i) {
    const auto& deg = report.reduced_homology.at(i);
    if (deg.betti != 0 || !deg.torsion.empty()) {
      report.passed = false;
      report.failure = "reduced homology nonzero in degree " + std::to_string(i);
      return report;
    }
  }
  if (!report.reduced_homology.at(n - 1).torsion.empty()) {
    report.passed = false;
    report.failure = "torsion in top degree";
  }
  if (!report.euler_ok && !report.failure)
    report.failure = "euler characteristic mismatch";
  return report;
}

}  // namespace artinstab
