// Angulation enumeration by recursive ear decomposition: in every pending
// sub-polygon, pick the cell on its closing edge (last vertex, first vertex),
// queue the sub-polygons cut off by that cell, and continue. Each angulation
// is produced exactly once, so no deduplication is needed.

#include <atomic>
#include <thread>
#include <unordered_set>

#include "cquiver/geometry.hpp"

namespace cquiver {

namespace {

// Calls f(parts) for every vector of `count` non-negative ints summing to total.
template <class F>
void for_each_composition(int total, int count, F&& f) {
  std::vector<int> parts(count, 0);
  auto rec = [&](auto&& self, int index, int left) -> void {
    if (index == count - 1) {
      parts[index] = left;
      f(parts);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      parts[index] = a;
      self(self, index + 1, left - a);
    }
  };
  rec(rec, 0, total);
}

class Enumerator {
 public:
  using Polygon = std::vector<int>;

  explicit Enumerator(int m) : m_(m) {}

  int cells_of(const Polygon& poly) const { return (static_cast<int>(poly.size()) - 2) / m_; }

  // Cell over the closing edge with gaps parts[t]*m + 1 between its
  // consecutive vertices. Returns how many sub-polygons were queued.
  int push_cell(const Polygon& poly, const std::vector<int>& parts) {
    int pushed = 0;
    int at = 0;
    for (int a : parts) {
      const int next = at + a * m_ + 1;
      if (a > 0) {
        pending_.emplace_back(poly.begin() + at, poly.begin() + next + 1);
        diagonals_.emplace_back(poly[at], poly[next]);
        ++pushed;
      }
      at = next;
    }
    return pushed;
  }

  void pop_cell(int pushed) {
    pending_.resize(pending_.size() - pushed);
    diagonals_.erase(diagonals_.end() - static_cast<std::ptrdiff_t>(pushed), diagonals_.end());
  }

  template <class Visit>
  void run(Visit& visit) {
    if (pending_.empty()) {
      visit(diagonals_);
      return;
    }
    Polygon poly = std::move(pending_.back());
    pending_.pop_back();
    const int k = cells_of(poly);
    if (k == 1) {
      run(visit);
    } else {
      for_each_composition(k - 1, m_ + 1, [&](const std::vector<int>& parts) {
        const int pushed = push_cell(poly, parts);
        run(visit);
        pop_cell(pushed);
      });
    }
    pending_.push_back(std::move(poly));
  }

 private:
  int m_;
  std::vector<Polygon> pending_;
  std::vector<MDiagonal> diagonals_;
};

// Labels 2, 3, ..., V, 1: the first cell chosen is the one on border edge {1, 2}.
std::vector<int> root_polygon(const PolygonParams& p) {
  const int V = p.vertex_count();
  std::vector<int> poly;
  poly.reserve(V);
  for (int v = 2; v <= V; ++v) poly.push_back(v);
  poly.push_back(1);
  return poly;
}

}  // namespace

void for_each_angulation(const PolygonParams& p, const std::function<void(const Angulation&)>& visit) {
  Enumerator e(p.m);
  const auto root = root_polygon(p);
  auto emit = [&](const std::vector<MDiagonal>& diagonals) { visit(Angulation(p, diagonals)); };
  if (p.N == 1) {
    emit({});
    return;
  }
  for_each_composition(p.N - 1, p.m + 1, [&](const std::vector<int>& parts) {
    const int pushed = e.push_cell(root, parts);
    e.run(emit);
    e.pop_cell(pushed);
  });
}

std::vector<Angulation> enumerate_angulations(const PolygonParams& p) {
  std::vector<Angulation> out;
  for_each_angulation(p, [&](const Angulation& a) { out.push_back(a); });
  return out;
}

std::uint64_t enumerate_count(const PolygonParams& p, int threads) {
  if (p.N == 1) return 1;
  const auto root = root_polygon(p);
  std::vector<std::vector<int>> choices;
  for_each_composition(p.N - 1, p.m + 1, [&](const std::vector<int>& parts) { choices.push_back(parts); });

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  auto worker = [&] {
    Enumerator e(p.m);
    std::uint64_t local = 0;
    auto tally = [&local](const std::vector<MDiagonal>&) { ++local; };
    for (std::size_t c = next++; c < choices.size(); c = next++) {
      const int pushed = e.push_cell(root, choices[c]);
      e.run(tally);
      e.pop_cell(pushed);
    }
    total += local;
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return total;
}

std::size_t count_rotation_classes(const PolygonParams& p) {
  std::unordered_set<RotationClassKey> keys;
  for_each_angulation(p, [&](const Angulation& a) { keys.insert(rotation_class_key(a)); });
  return keys.size();
}

}  // namespace cquiver
