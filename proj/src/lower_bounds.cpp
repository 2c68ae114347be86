#include "xc01/lower_bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace xc01 {

namespace {

void check_shape(const SlackMatrix& s) {
  if (s.rows() > 64 || s.cols() > 64 || s.rows() * s.cols() > CellSet::kCapacity)
    throw InvalidInput("lower bounds: matrix too large (" + std::to_string(s.rows()) + "x" +
                       std::to_string(s.cols()) + ")");
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (s(i, j) < 0) throw InvalidInput("lower bounds: negative matrix entry");
}

// Two support cells can share a rectangle unless one of the cross cells is zero.
bool fooling_compatible(const SlackMatrix& s, int i1, int j1, int i2, int j2) {
  return s(i1, j2) == 0 || s(i2, j1) == 0;
}

struct CellGraph {
  std::vector<int> cells;          // support cells, row-major
  std::vector<CellSet> fool_with;  // fool_with[c]: cells fooling-compatible with c (by cell id)
};

CellGraph build_cell_graph(const SlackMatrix& s) {
  CellGraph g;
  const int k = s.cols();
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < k; ++j)
      if (s(i, j) > 0) g.cells.push_back(i * k + j);
  g.fool_with.assign(std::size_t(s.rows()) * k, CellSet{});
  for (int a : g.cells)
    for (int b : g.cells)
      if (a != b && fooling_compatible(s, a / k, a % k, b / k, b % k)) g.fool_with[a].set(b);
  return g;
}

class MaxClique {
 public:
  explicit MaxClique(std::vector<CellSet> adj) : adj_(std::move(adj)) {}

  int solve(const CellSet& all) {
    best_ = all.any() ? 1 : 0;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(CellSet cand, int size) {
    std::vector<int> order;
    std::vector<int> color;
    CellSet uncolored = cand;
    for (int k = 1; uncolored.any(); ++k) {
      CellSet q = uncolored;
      while (q.any()) {
        int v = q.first();
        q = q.minus(adj_[v]);
        q.reset(v);
        uncolored.reset(v);
        order.push_back(v);
        color.push_back(k);
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (size + color[idx] <= best_) return;
      int v = order[idx];
      CellSet next = cand;
      next &= adj_[v];
      if (!next.any()) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(next, size + 1);
      }
      cand.reset(v);
    }
  }

  std::vector<CellSet> adj_;
  int best_ = 0;
};

std::vector<CellSet> rectangle_cells(const std::vector<Rectangle>& rects, int rows, int cols) {
  std::vector<CellSet> out(rects.size());
  for (std::size_t r = 0; r < rects.size(); ++r)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (rects[r].contains(i, j)) out[r].set(i * cols + j);
  return out;
}

// Minimum length of a list of the given rectangles covering `target`, in which
// every pair meets at least two entries.
class CoverSearch {
 public:
  CoverSearch(std::vector<CellSet> rect_cells, CellSet target, std::vector<CellSet> fool_with,
              std::vector<std::array<int, 2>> pairs, int ncells)
      : rects_(std::move(rect_cells)),
        target_(target),
        fool_with_(std::move(fool_with)),
        pairs_(std::move(pairs)),
        rects_of_cell_(ncells),
        pairs_of_rect_(rects_.size()),
        forbidden_(rects_.size(), 0),
        pair_hits_(pairs_.size(), 0) {
    for (std::size_t r = 0; r < rects_.size(); ++r) {
      rects_[r].for_each([&](int c) { rects_of_cell_[c].push_back(static_cast<int>(r)); });
      for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (rects_[r].test(pairs_[p][0]) || rects_[r].test(pairs_[p][1]))
          pairs_of_rect_[r].push_back(static_cast<int>(p));
    }
  }

  int solve(int lower) {
    best_ = greedy_upper_bound();
    if (best_ > lower) search(CellSet{}, 0);
    return best_;
  }

 private:
  int greedy_upper_bound() const {
    CellSet covered;
    std::vector<int> hits(pairs_.size(), 0);
    int used = 0;
    auto take = [&](int r) {
      covered |= rects_[r];
      for (int p : pairs_of_rect_[r]) ++hits[p];
      ++used;
    };
    while (!covered.contains_all(target_)) {
      CellSet open = target_.minus(covered);
      int pick = -1, gain = 0;
      for (std::size_t r = 0; r < rects_.size(); ++r) {
        CellSet g = rects_[r];
        g &= open;
        int n = g.count();
        if (n > gain) gain = n, pick = static_cast<int>(r);
      }
      if (pick < 0) throw InternalError("cover search: support cell outside every rectangle");
      take(pick);
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      while (hits[p] < 2) take(rects_of_cell_[pairs_[p][0]].front());
    return used;
  }

  int fooling_lower_bound(const CellSet& open) const {
    int n = 0;
    CellSet allowed = open;
    while (allowed.any()) {
      int c = allowed.first();
      ++n;
      allowed &= fool_with_[c];
    }
    return n;
  }

  int max_deficit() const {
    int d = 0;
    for (int h : pair_hits_) d = std::max(d, 2 - h);
    return d;
  }

  void add(int r) {
    for (int p : pairs_of_rect_[r]) ++pair_hits_[p];
  }
  void remove(int r) {
    for (int p : pairs_of_rect_[r]) --pair_hits_[p];
  }

  void branch(const std::vector<int>& candidates, const CellSet& covered, int chosen) {
    std::vector<int> opts;
    for (int r : candidates)
      if (!forbidden_[r]) opts.push_back(r);
    CellSet open = target_.minus(covered);
    std::stable_sort(opts.begin(), opts.end(), [&](int a, int b) {
      CellSet ga = rects_[a], gb = rects_[b];
      ga &= open;
      gb &= open;
      return ga.count() > gb.count();
    });
    // Some optimal completion uses opts[t] and none of opts[0..t).
    std::size_t t = 0;
    for (; t < opts.size(); ++t) {
      int r = opts[t];
      CellSet next = covered;
      next |= rects_[r];
      add(r);
      search(next, chosen + 1);
      remove(r);
      forbidden_[r] = 1;
      if (chosen + 1 >= best_) break;
    }
    for (std::size_t u = 0; u < std::min(t + 1, opts.size()); ++u) forbidden_[opts[u]] = 0;
  }

  void search(const CellSet& covered, int chosen) {
    CellSet open = target_.minus(covered);
    if (open.any()) {
      int lb = chosen + std::max(fooling_lower_bound(open), max_deficit());
      if (lb >= best_) return;
      int cell = -1;
      std::size_t fewest = SIZE_MAX;
      open.for_each([&](int c) {
        std::size_t n = 0;
        for (int r : rects_of_cell_[c]) n += !forbidden_[r];
        if (n < fewest) fewest = n, cell = c;
      });
      if (fewest == 0) return;
      branch(rects_of_cell_[cell], covered, chosen);
      return;
    }
    int deficit = max_deficit();
    if (deficit == 0) {
      best_ = std::min(best_, chosen);
      return;
    }
    if (chosen + deficit >= best_) return;
    std::size_t fewest = SIZE_MAX;
    std::vector<int> touching;
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (pair_hits_[p] >= 2) continue;
      std::vector<int> t = rects_of_cell_[pairs_[p][0]];
      for (int r : rects_of_cell_[pairs_[p][1]])
        if (!rects_[r].test(pairs_[p][0])) t.push_back(r);
      std::size_t n = 0;
      for (int r : t) n += !forbidden_[r];
      if (n < fewest) fewest = n, touching = std::move(t);
    }
    if (fewest == 0) return;
    branch(touching, covered, chosen);
  }

  std::vector<CellSet> rects_;
  CellSet target_;
  std::vector<CellSet> fool_with_;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<std::vector<int>> rects_of_cell_;
  std::vector<std::vector<int>> pairs_of_rect_;
  std::vector<char> forbidden_;
  std::vector<int> pair_hits_;
  int best_ = 0;
};

CellSet support_cells(const SlackMatrix& s) {
  CellSet all;
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (s(i, j) > 0) all.set(i * s.cols() + j);
  return all;
}

std::vector<std::array<int, 2>> pair_cells(const SlackMatrix& s) {
  std::vector<std::array<int, 2>> out;
  for (const auto& p : determinant_pairs(s))
    out.push_back({p.i1 * s.cols() + p.j1, p.i2 * s.cols() + p.j2});
  return out;
}

int cover_number(const SlackMatrix& s, bool refined, int lower) {
  check_shape(s);
  CellSet all = support_cells(s);
  if (!all.any()) return 0;
  auto rects = enumerate_maximal_rectangles(s);
  CellGraph g = build_cell_graph(s);
  CoverSearch search(rectangle_cells(rects, s.rows(), s.cols()), all, g.fool_with,
                     refined ? pair_cells(s) : std::vector<std::array<int, 2>>{}, s.rows() * s.cols());
  return search.solve(lower);
}

}  // namespace

SupportPattern support_pattern(const SlackMatrix& s) {
  check_shape(s);
  SupportPattern p{s.rows(), s.cols(), std::vector<std::uint64_t>(s.rows(), 0)};
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (s(i, j) > 0) p.bits[i] |= std::uint64_t{1} << j;
  return p;
}

int fooling_set_number(const SlackMatrix& s) {
  check_shape(s);
  CellGraph g = build_cell_graph(s);
  if (g.cells.empty()) return 0;
  // Relabel cells by ascending compatibility degree; ties keep row-major order.
  std::vector<int> order = g.cells;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.fool_with[a].count() < g.fool_with[b].count(); });
  std::vector<int> label(g.fool_with.size(), -1);
  for (std::size_t v = 0; v < order.size(); ++v) label[order[v]] = static_cast<int>(v);
  std::vector<CellSet> adj(order.size());
  CellSet all;
  for (std::size_t v = 0; v < order.size(); ++v) {
    all.set(static_cast<int>(v));
    g.fool_with[order[v]].for_each([&](int c) { adj[v].set(label[c]); });
  }
  return MaxClique(std::move(adj)).solve(all);
}

std::vector<Rectangle> enumerate_maximal_rectangles(const SlackMatrix& s) {
  SupportPattern p = support_pattern(s);
  std::set<std::uint64_t> closed;
  std::vector<std::uint64_t> frontier;
  for (auto r : p.bits)
    if (r && closed.insert(r).second) frontier.push_back(r);
  while (!frontier.empty()) {
    std::uint64_t c = frontier.back();
    frontier.pop_back();
    for (auto r : p.bits) {
      std::uint64_t x = c & r;
      if (x && closed.insert(x).second) frontier.push_back(x);
    }
  }
  std::vector<Rectangle> out;
  for (auto cols : closed) {
    Rectangle rect{0, cols};
    for (int i = 0; i < p.rows; ++i)
      if ((p.bits[i] & cols) == cols) rect.row_set |= std::uint64_t{1} << i;
    out.push_back(rect);
  }
  std::sort(out.begin(), out.end(), [](const Rectangle& a, const Rectangle& b) {
    return std::tie(a.col_set, a.row_set) < std::tie(b.col_set, b.row_set);
  });
  return out;
}

int rectangle_covering_number(const SlackMatrix& s) { return cover_number(s, false, fooling_set_number(s)); }

std::vector<DetPair> determinant_pairs(const SlackMatrix& s) {
  check_shape(s);
  std::vector<DetPair> out;
  const int m = s.rows(), k = s.cols();
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < k; ++j1) {
      if (s(i1, j1) == 0) continue;
      for (int i2 = i1 + 1; i2 < m; ++i2)
        for (int j2 = 0; j2 < k; ++j2) {
          if (j2 == j1) continue;
          if (s(i1, j1) * s(i2, j2) > s(i1, j2) * s(i2, j1)) out.push_back({i1, j1, i2, j2});
        }
    }
  return out;
}

int refined_rectangle_covering_number(const SlackMatrix& s) {
  return cover_number(s, true, rectangle_covering_number(s));
}

int min_cover_oracle(const SlackMatrix& s, bool refined) {
  check_shape(s);
  CellSet all = support_cells(s);
  const int ncells = all.count();
  if (ncells > 12 && (s.rows() > 6 || s.cols() > 6))
    throw InvalidInput("min_cover_oracle: instance exceeds the size limit");
  if (ncells == 0) return 0;
  SupportPattern p = support_pattern(s);

  // Every rectangle: a nonempty row set with a nonempty subset of its common columns.
  std::vector<CellSet> rects;
  std::vector<int> used_rows;
  for (int i = 0; i < p.rows; ++i)
    if (p.bits[i]) used_rows.push_back(i);
  const int nr = static_cast<int>(used_rows.size());
  for (std::uint32_t sub = 1; sub < (1U << nr); ++sub) {
    std::uint64_t common = ~std::uint64_t{0};
    for (int t = 0; t < nr; ++t)
      if ((sub >> t) & 1U) common &= p.bits[used_rows[t]];
    for (std::uint64_t cols = common; cols; cols = (cols - 1) & common) {
      CellSet c;
      for (int t = 0; t < nr; ++t)
        if ((sub >> t) & 1U)
          for (int j = 0; j < p.cols; ++j)
            if ((cols >> j) & 1U) c.set(used_rows[t] * p.cols + j);
      rects.push_back(c);
    }
  }
  std::vector<std::array<int, 2>> pairs = refined ? pair_cells(s) : std::vector<std::array<int, 2>>{};
  std::vector<int> last_rect(std::size_t(s.rows()) * s.cols(), -1);
  int widest = 0;
  for (std::size_t r = 0; r < rects.size(); ++r) {
    rects[r].for_each([&](int c) { last_rect[c] = static_cast<int>(r); });
    widest = std::max(widest, rects[r].count());
  }

  // Lists are enumerated as nondecreasing index sequences of a fixed length.
  std::vector<int> list;
  auto feasible = [&]() {
    for (const auto& pr : pairs) {
      int hits = 0;
      for (int r : list) hits += rects[r].test(pr[0]) || rects[r].test(pr[1]);
      if (hits < 2) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int length, int from, const CellSet& covered) -> bool {
    if (static_cast<int>(list.size()) == length) return covered.contains_all(all) && feasible();
    CellSet open = all.minus(covered);
    int left = length - static_cast<int>(list.size());
    if (open.count() > left * widest) return false;
    if (open.any() && last_rect[open.first()] < from) return false;
    for (int r = from; r < static_cast<int>(rects.size()); ++r) {
      list.push_back(r);
      CellSet next = covered;
      next |= rects[r];
      bool ok = self(self, length, r, next);
      list.pop_back();
      if (ok) return true;
    }
    return false;
  };
  for (int length = 1;; ++length)
    if (dfs(dfs, length, 0, CellSet{})) return length;
}

LowerBounds compute_lower_bounds(const SlackMatrix& s) {
  LowerBounds b;
  b.omega = fooling_set_number(s);
  b.rc = cover_number(s, false, b.omega);
  b.rrc = cover_number(s, true, b.rc);
  return b;
}

}  // namespace xc01
