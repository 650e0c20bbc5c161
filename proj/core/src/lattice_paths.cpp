#include "trsk/lattice_paths.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace trsk {

int enumeration_cap() {
  if (const char* env = std::getenv("TRSK_ENUM_CAP")) {
    int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 14;
}

namespace {

int sgn(int d) { return d > 0 ? 1 : d < 0 ? -1 : 0; }

void check_in_grid(GridPoint p, int m, int n) {
  if (p.row < 1 || p.row > m || p.col < 1 || p.col > n)
    fail(Errc::BoundsError, "grid point (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                                ") outside " + std::to_string(m) + "x" + std::to_string(n));
}

void extend_paths(GridPoint cur, GridPoint end, LatticePath& acc,
                  std::vector<LatticePath>& out) {
  if (cur == end) {
    out.push_back(acc);
    return;
  }
  if (cur.row != end.row) {
    GridPoint next{cur.row + sgn(end.row - cur.row), cur.col};
    acc.push_back(next);
    extend_paths(next, end, acc, out);
    acc.pop_back();
  }
  if (cur.col != end.col) {
    GridPoint next{cur.row, cur.col + sgn(end.col - cur.col)};
    acc.push_back(next);
    extend_paths(next, end, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<LatticePath> enumerate_paths(GridPoint start, GridPoint end, int m, int n) {
  check_in_grid(start, m, n);
  check_in_grid(end, m, n);
  int len = std::abs(end.row - start.row) + std::abs(end.col - start.col);
  if (len > enumeration_cap())
    fail(Errc::CapExceeded, "path length " + std::to_string(len) + " exceeds enumeration cap " +
                                std::to_string(enumeration_cap()));
  std::vector<LatticePath> out;
  LatticePath acc{start};
  extend_paths(start, end, acc, out);
  return out;
}

Scalar path_weight(const Matrix& x, const LatticePath& gamma) {
  if (gamma.empty()) fail(Errc::InvalidArgument, "empty path has no weight");
  Scalar w = x.at(gamma[0].row, gamma[0].col);
  for (size_t k = 1; k < gamma.size(); ++k) w = w.mul(x.at(gamma[k].row, gamma[k].col));
  return w;
}

std::vector<PathTuple> nonintersecting_tuples(const std::vector<GridPoint>& starts,
                                              const std::vector<GridPoint>& ends, int m, int n) {
  if (starts.size() != ends.size())
    fail(Errc::LengthMismatch, "starts and ends differ in length");
  if (m * n > 64)
    fail(Errc::CapExceeded, "grid too large for the brute-force oracle (m*n > 64)");
  size_t r = starts.size();
  std::vector<std::vector<LatticePath>> choices(r);
  std::vector<std::vector<uint64_t>> masks(r);
  for (size_t k = 0; k < r; ++k) {
    choices[k] = enumerate_paths(starts[k], ends[k], m, n);
    for (const LatticePath& p : choices[k]) {
      uint64_t mask = 0;
      for (GridPoint v : p) mask |= uint64_t(1) << ((v.row - 1) * n + (v.col - 1));
      masks[k].push_back(mask);
    }
  }
  std::vector<PathTuple> out;
  PathTuple acc;
  auto rec = [&](auto&& self, size_t k, uint64_t used) -> void {
    if (k == r) {
      out.push_back(acc);
      return;
    }
    for (size_t c = 0; c < choices[k].size(); ++c) {
      if (masks[k][c] & used) continue;
      acc.push_back(choices[k][c]);
      self(self, k + 1, used | masks[k][c]);
      acc.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::optional<Scalar> lgv_minor(const Matrix& x, const std::vector<GridPoint>& starts,
                                const std::vector<GridPoint>& ends) {
  std::vector<PathTuple> tuples = nonintersecting_tuples(starts, ends, x.rows(), x.cols());
  std::optional<Scalar> acc;
  for (const PathTuple& t : tuples) {
    Scalar w = Scalar::one(x.algebra());
    for (const LatticePath& p : t) w = w.mul(path_weight(x, p));
    acc = acc ? acc->add(w) : w;
  }
  return acc;
}

namespace detail {

std::optional<Scalar> disjoint_path_sum(
    Algebra alg, int m_rows, const std::function<Scalar(int, int)>& weight,
    const std::function<bool(int, int)>& in_region, const std::vector<PathSpec>& paths) {
  for (const PathSpec& s : paths) {
    if (s.srow < 1 || s.erow > m_rows || s.srow > s.erow || s.ecol < 1)
      fail(Errc::InvalidArgument, "malformed path spec");
    if (!in_region(s.srow, s.scol) || !in_region(s.erow, s.ecol))
      fail(Errc::InvalidArgument, "path endpoint outside region");
  }
  const Scalar one = Scalar::one(alg);

  // States are the strictly increasing crossing columns of the paths alive
  // across the current row boundary, in noncrossing (index) order.
  std::map<std::vector<int>, Scalar> cur;
  cur[{}] = one;

  for (int a = 1; a <= m_rows; ++a) {
    std::vector<size_t> active;
    for (size_t t = 0; t < paths.size(); ++t)
      if (paths[t].srow <= a && a <= paths[t].erow) active.push_back(t);

    std::map<std::vector<int>, Scalar> next;
    for (const auto& [state, acc] : cur) {
      // Entry column of each active path: its start, or its crossing
      // column from the previous boundary.
      std::vector<int> entry(active.size());
      size_t sp = 0;
      bool ok = true;
      for (size_t idx = 0; idx < active.size(); ++idx) {
        const PathSpec& s = paths[active[idx]];
        if (s.srow == a) {
          entry[idx] = s.scol;
        } else {
          if (sp >= state.size()) { ok = false; break; }
          entry[idx] = state[sp++];
        }
      }
      if (!ok || sp != state.size()) continue;

      // Enumerate exits left to right; run [entry,exit] in row a must stay
      // in region, reach no further right than the path's end column, and
      // sit strictly left of the next path's entry.
      std::vector<int> next_state;
      auto rec = [&](auto&& self, size_t idx, int prev_exit, const Scalar& w) -> void {
        if (idx == active.size()) {
          auto it = next.find(next_state);
          if (it == next.end())
            next.emplace(next_state, w);
          else
            it->second = it->second.add(w);
          return;
        }
        const PathSpec& s = paths[active[idx]];
        int e = entry[idx];
        if (e <= prev_exit) return;
        if (!in_region(a, e)) return;
        Scalar run = w.mul(weight(a, e));
        int limit = s.ecol;
        if (idx + 1 < active.size()) limit = std::min(limit, entry[idx + 1] - 1);
        for (int exit = e; exit <= limit; ++exit) {
          if (exit > e) {
            if (!in_region(a, exit)) break;
            run = run.mul(weight(a, exit));
          }
          if (s.erow == a) {
            if (exit == s.ecol) self(self, idx + 1, exit, run);
          } else {
            next_state.push_back(exit);
            self(self, idx + 1, exit, run);
            next_state.pop_back();
          }
        }
      };
      rec(rec, 0, 0, acc);
    }
    cur = std::move(next);
  }

  auto it = cur.find({});
  if (it == cur.end()) return std::nullopt;
  return it->second;
}

}  // namespace detail

Scalar MinorTable::at(int i, int j) const {
  if (i == 0 || j == 0) return Scalar::one(alg_);
  auto it = entries_.find({i, j});
  if (it == entries_.end())
    fail(Errc::BoundsError,
         "minor table entry (" + std::to_string(i) + "," + std::to_string(j) + ") undefined");
  return it->second;
}

Scalar MinorTable::ratio(int i, int j) const {
  return at(i, j).mul(at(i - 1, j - 1)).div(at(i - 1, j).mul(at(i, j - 1)));
}

MinorTable rect_minor_table(const Matrix& x, Orientation orientation) {
  const int m = x.rows(), n = x.cols();
  const Algebra alg = x.algebra();
  MinorTable table(alg, m, n);
  auto full = [&](int, int b) { return b >= 1 && b <= n; };

  auto compute = [&](int i, int j, const std::vector<detail::PathSpec>& paths,
                     const std::function<Scalar(int, int)>& w,
                     const std::function<bool(int, int)>& region) {
    std::optional<Scalar> v = detail::disjoint_path_sum(alg, m, w, region, paths);
    if (!v)
      fail(Errc::EmptyFamily, "no nonintersecting family for entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    table.set(i, j, *v);
  };

  switch (orientation) {
    case Orientation::Insertion: {
      auto w = [&](int a, int b) { return x.at(a, b); };
      for (int i = 1; i <= std::min(m, n); ++i)
        for (int j = i; j <= n; ++j) {
          std::vector<detail::PathSpec> paths;
          for (int k = 1; k <= i; ++k) paths.push_back({1, k, m, j - i + k});
          compute(i, j, paths, w, full);
        }
      break;
    }
    case Orientation::Iota: {
      // Row-flipped so the corner paths run down-right.
      auto w = [&](int a, int b) { return x.at(m + 1 - a, b); };
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
          int r = std::min(i, j);
          std::vector<detail::PathSpec> paths;
          for (int k = 1; k <= r; ++k) paths.push_back({i + 1 - k, 1, m, n - j + k});
          compute(i, j, paths, w, full);
        }
      break;
    }
    case Orientation::Schutz: {
      // Column-flipped staircase; original cells require row <= col.
      auto w = [&](int a, int b) { return x.at(a, n + 1 - b); };
      auto region = [&](int a, int b) { return b >= 1 && b <= n + 1 - a; };
      for (int i = 1; i <= std::min(m, n); ++i)
        for (int j = i; j <= n; ++j) {
          std::vector<detail::PathSpec> paths;
          for (int k = 1; k <= i; ++k) {
            int cf = j - i + k;
            paths.push_back({1, k, std::min(m, n + 1 - cf), cf});
          }
          compute(i, j, paths, w, region);
        }
      break;
    }
  }
  return table;
}

std::optional<Scalar> e_diagram_entry(const std::vector<std::vector<Scalar>>& xs, int i, int j) {
  if (xs.empty()) fail(Errc::InvalidArgument, "no layer vectors");
  const size_t n = xs[0].size();
  for (const auto& v : xs)
    if (v.size() != n) fail(Errc::LengthMismatch, "layer vectors differ in length");
  if (i < 1 || j < 1 || i > static_cast<int>(n) || j > static_cast<int>(n))
    fail(Errc::BoundsError, "entry outside 1.." + std::to_string(n));

  // Per layer: stay in the column (weight x^a_c) or slant one column right
  // (weight one).
  std::vector<std::optional<Scalar>> f(n + 1);
  f[i] = Scalar::one(xs[0][0].algebra());
  for (const auto& layer : xs) {
    std::vector<std::optional<Scalar>> g(n + 1);
    for (size_t c = 1; c <= n; ++c) {
      std::optional<Scalar> acc;
      if (f[c]) acc = f[c]->mul(layer[c - 1]);
      if (c > 1 && f[c - 1]) acc = acc ? acc->add(*f[c - 1]) : *f[c - 1];
      g[c] = acc;
    }
    f = std::move(g);
  }
  return f[j];
}

}  // namespace trsk
