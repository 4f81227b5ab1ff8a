#include "cquiver/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace cquiver {

PolygonParams::PolygonParams(int cells, int m_) : N(cells), m(m_) {
  if (N < 1) throw GeometryError("polygon needs N >= 1 cells");
  if (m < 1) throw GeometryError("polygon needs m >= 1");
}

MDiagonal::MDiagonal(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b) throw GeometryError("chord endpoints must differ");
}

namespace {

void check_label(const PolygonParams& p, int v) {
  if (v < 1 || v > p.vertex_count()) {
    throw GeometryError("vertex label " + std::to_string(v) + " outside 1.." +
                        std::to_string(p.vertex_count()));
  }
}

bool is_border_chord(int V, int a, int b) {
  const int gap = std::abs(a - b);
  return gap == 1 || gap == V - 1;
}

std::string chord_text(const MDiagonal& d) {
  return std::to_string(d.i) + "-" + std::to_string(d.j);
}

}  // namespace

bool is_m_diagonal(const PolygonParams& p, int i, int j) {
  check_label(p, i);
  check_label(p, j);
  const int V = p.vertex_count();
  const int gap = std::abs(j - i);
  return gap % p.m == 1 % p.m && gap >= p.m + 1 && gap <= V - (p.m + 1);
}

bool crosses(const MDiagonal& x, const MDiagonal& y) {
  return (x.i < y.i && y.i < x.j && x.j < y.j) || (y.i < x.i && x.i < y.j && y.j < x.j);
}

Count count_m_diagonals(const PolygonParams& p) {
  return Count(p.N - 1) * p.vertex_count() / 2;
}

std::vector<MDiagonal> all_m_diagonals(const PolygonParams& p) {
  std::vector<MDiagonal> out;
  const int V = p.vertex_count();
  for (int i = 1; i <= V; ++i)
    for (int j = i + 1; j <= V; ++j)
      if (is_m_diagonal(p, i, j)) out.emplace_back(i, j);
  return out;
}

Angulation::Angulation(PolygonParams params, std::vector<MDiagonal> diagonals)
    : params_(params), diagonals_(std::move(diagonals)) {
  if (static_cast<int>(diagonals_.size()) != params_.N - 1) {
    throw GeometryError("an angulation of P(" + std::to_string(params_.N) + ", " +
                        std::to_string(params_.m) + ") has exactly " + std::to_string(params_.N - 1) +
                        " diagonals, got " + std::to_string(diagonals_.size()));
  }
  for (std::size_t a = 0; a < diagonals_.size(); ++a) {
    const auto& d = diagonals_[a];
    if (!is_m_diagonal(params_, d.i, d.j)) {
      throw GeometryError(chord_text(d) + " is not an m-diagonal");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (diagonals_[b] == d) throw GeometryError("duplicate diagonal " + chord_text(d));
      if (crosses(diagonals_[b], d)) {
        throw GeometryError("diagonals " + chord_text(diagonals_[b]) + " and " + chord_text(d) +
                            " cross");
      }
    }
  }
}

std::vector<MDiagonal> Angulation::sorted_diagonals() const {
  auto out = diagonals_;
  std::sort(out.begin(), out.end());
  return out;
}

int Angulation::slot_of(const MDiagonal& d) const {
  auto it = std::find(diagonals_.begin(), diagonals_.end(), d);
  return it == diagonals_.end() ? -1 : static_cast<int>(it - diagonals_.begin());
}

bool operator==(const Angulation& a, const Angulation& b) {
  return a.params_ == b.params_ && a.sorted_diagonals() == b.sorted_diagonals();
}

std::vector<Cell> Angulation::cells() const {
  const int V = params_.vertex_count();
  std::vector<Cell> out;
  std::vector<int> all(V);
  for (int v = 0; v < V; ++v) all[v] = v + 1;

  std::vector<std::vector<int>> pending{std::move(all)};
  std::vector<char> member(V + 1, 0);
  while (!pending.empty()) {
    auto poly = std::move(pending.back());
    pending.pop_back();
    for (int v : poly) member[v] = 1;
    const MDiagonal* split = nullptr;
    for (const auto& d : diagonals_) {
      if (!member[d.i] || !member[d.j]) continue;
      // A diagonal that is a side of this sub-polygon does not split it.
      auto pi = std::find(poly.begin(), poly.end(), d.i) - poly.begin();
      auto pj = std::find(poly.begin(), poly.end(), d.j) - poly.begin();
      auto dist = std::abs(pi - pj);
      if (dist == 1 || dist == static_cast<long>(poly.size()) - 1) continue;
      split = &d;
      break;
    }
    for (int v : poly) member[v] = 0;
    if (split) {
      std::vector<int> inside, outside;
      for (int v : poly) {
        if (v >= split->i && v <= split->j) inside.push_back(v);
        if (v <= split->i || v >= split->j) outside.push_back(v);
      }
      pending.push_back(std::move(inside));
      pending.push_back(std::move(outside));
      continue;
    }
    Cell cell;
    cell.vertices = std::move(poly);
    const auto k = cell.vertices.size();
    for (std::size_t t = 0; t < k; ++t) {
      const int a = cell.vertices[t];
      const int b = cell.vertices[(t + 1) % k];
      cell.sides.push_back({MDiagonal(a, b), !is_border_chord(V, a, b)});
    }
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(),
            [](const Cell& x, const Cell& y) { return x.vertices < y.vertices; });
  return out;
}

Angulation rotate(const Angulation& a) {
  const int V = a.params().vertex_count();
  std::vector<MDiagonal> out;
  out.reserve(a.diagonals().size());
  for (const auto& d : a.diagonals()) {
    auto shift = [V](int v) { return v == 1 ? V : v - 1; };
    out.emplace_back(shift(d.i), shift(d.j));
  }
  return Angulation(a.params(), std::move(out));
}

RotationClassKey rotation_class_key(const Angulation& a) {
  const int V = a.params().vertex_count();
  std::vector<MDiagonal> rotated;
  std::string best;
  for (int r = 0; r < V; ++r) {
    rotated.clear();
    for (const auto& d : a.diagonals()) {
      rotated.emplace_back((d.i - 1 - r + V) % V + 1, (d.j - 1 - r + V) % V + 1);
    }
    std::sort(rotated.begin(), rotated.end());
    std::string enc;
    enc.reserve(4 * rotated.size());
    for (const auto& d : rotated) {
      for (int v : {d.i, d.j}) {
        enc.push_back(static_cast<char>(v >> 8));
        enc.push_back(static_cast<char>(v & 0xff));
      }
    }
    if (r == 0 || enc < best) best = std::move(enc);
  }
  std::string header;
  header.push_back(static_cast<char>(a.params().N >> 8));
  header.push_back(static_cast<char>(a.params().N & 0xff));
  header.push_back(static_cast<char>(a.params().m >> 8));
  header.push_back(static_cast<char>(a.params().m & 0xff));
  return RotationClassKey{header + best};
}

Angulation mutate_at(const Angulation& a, const MDiagonal& d) {
  const int slot = a.slot_of(d);
  if (slot < 0) throw GeometryError("diagonal " + chord_text(d) + " is not in the angulation");
  const int m = a.params().m;
  const int V = a.params().vertex_count();

  // The two cells on d together are the vertices not cut off by any other
  // diagonal, seen from d.
  std::vector<char> keep(V + 1, 1);
  keep[0] = 0;
  for (const auto& e : a.diagonals()) {
    if (e == d) continue;
    const bool inside = d.i <= e.i && e.j <= d.j;
    const bool around = e.i <= d.i && d.j <= e.j;
    if (inside || !around) {
      for (int v = e.i + 1; v < e.j; ++v) keep[v] = 0;
    } else {
      for (int v = 1; v < e.i; ++v) keep[v] = 0;
      for (int v = e.j + 1; v <= V; ++v) keep[v] = 0;
    }
  }
  std::vector<int> hull;
  for (int v = 1; v <= V; ++v)
    if (keep[v]) hull.push_back(v);
  const int size = 2 * m + 2;
  if (static_cast<int>(hull.size()) != size) {
    throw InternalInvariantError("cells around a diagonal do not form a (2m+2)-gon");
  }
  const int p = static_cast<int>(std::find(hull.begin(), hull.end(), d.i) - hull.begin());
  if (hull[(p + m + 1) % size] != d.j) {
    throw InternalInvariantError("diagonal is not a diameter of its (2m+2)-gon");
  }
  auto diagonals = a.diagonals();
  diagonals[slot] = MDiagonal(hull[(p + 1) % size], hull[(p + m + 2) % size]);
  return Angulation(a.params(), std::move(diagonals));
}

ColouredQuiver quiver_of(const Angulation& a) {
  const int m = a.params().m;
  const int count = static_cast<int>(a.diagonals().size());
  if (count == 0) throw GeometryError("quiver_of needs at least one diagonal (N >= 2)");
  ColouredQuiver q(m, count);
  const int sides = m + 2;
  for (const auto& cell : a.cells()) {
    std::vector<std::pair<int, int>> on_cell;  // (side position, slot)
    for (int t = 0; t < sides; ++t) {
      if (cell.sides[t].is_diagonal) on_cell.emplace_back(t, a.slot_of(cell.sides[t].chord));
    }
    for (auto [pa, va] : on_cell) {
      for (auto [pb, vb] : on_cell) {
        if (va == vb) continue;
        // sides strictly between, walking against increasing side index
        const int colour = ((pa - pb - 1) % sides + sides) % sides;
        q.set_arrow(va, vb, colour, 1);
      }
    }
  }
  return q;
}

bool is_close_to_border(const Angulation& a, const MDiagonal& d) {
  if (a.slot_of(d) < 0) throw GeometryError("diagonal " + chord_text(d) + " is not in the angulation");
  const int V = a.params().vertex_count();
  const int m = a.params().m;
  return d.j - d.i == m + 1 || V - (d.j - d.i) == m + 1;
}

Angulation factor_out(const Angulation& a, const MDiagonal& d) {
  if (!is_close_to_border(a, d)) {
    throw GeometryError("diagonal " + chord_text(d) + " is not close to the border");
  }
  const int V = a.params().vertex_count();
  const int m = a.params().m;
  const bool inner = d.j - d.i == m + 1;
  auto removed = [&](int v) { return inner ? (v > d.i && v < d.j) : (v > d.j || v < d.i); };

  std::vector<int> relabel(V + 1, 0);
  int next = 1;
  for (int v = 1; v <= V; ++v)
    if (!removed(v)) relabel[v] = next++;

  std::vector<MDiagonal> out;
  for (const auto& e : a.diagonals()) {
    if (e == d) continue;
    out.emplace_back(relabel[e.i], relabel[e.j]);
  }
  return Angulation(PolygonParams(a.params().N - 1, m), std::move(out));
}

std::vector<BorderEdge> border_edges(const PolygonParams& p) {
  const int V = p.vertex_count();
  std::vector<BorderEdge> out;
  for (int k = 1; k < V; ++k) out.emplace_back(k, k + 1);
  out.emplace_back(1, V);
  return out;
}

Extension extend_at(const Angulation& a, const BorderEdge& e) {
  const int V = a.params().vertex_count();
  const int m = a.params().m;
  check_label(a.params(), e.i);
  check_label(a.params(), e.j);
  if (!is_border_chord(V, e.i, e.j)) throw GeometryError(chord_text(e) + " is not a border edge");

  const bool wrap = e.i == 1 && e.j == V && V > 2;
  // New vertices go right after e.i (or after V for the closing edge).
  const int after = wrap ? V : e.i;
  auto shift = [&](int v) { return v <= after ? v : v + m; };

  std::vector<MDiagonal> out;
  for (const auto& d : a.diagonals()) out.emplace_back(shift(d.i), shift(d.j));
  MDiagonal fresh = wrap ? MDiagonal(1, V) : MDiagonal(e.i, e.i + m + 1);
  out.push_back(fresh);
  return Extension{Angulation(PolygonParams(a.params().N + 1, m), std::move(out)), fresh};
}

std::set<ZeroPath> relations_of(const Angulation& a) {
  std::set<ZeroPath> out;
  if (a.diagonals().empty()) return out;
  const auto q = quiver_of(a);
  auto zero = [&](int x, int y) {
    const auto& arrow = q.arrow(x, y);
    return arrow && arrow->colour == 0;
  };
  for (const auto& cell : a.cells()) {
    std::vector<int> slots;
    for (const auto& s : cell.sides)
      if (s.is_diagonal) slots.push_back(a.slot_of(s.chord));
    for (int x : slots)
      for (int y : slots)
        for (int z : slots)
          if (x != y && y != z && x != z && zero(x, y) && zero(y, z)) out.insert({x, y, z});
  }
  return out;
}

std::string to_compact(const Angulation& a) {
  std::string out;
  for (const auto& d : a.diagonals()) {
    if (!out.empty()) out += ',';
    out += chord_text(d);
  }
  return out;
}

Angulation parse_compact(const PolygonParams& p, const std::string& text) {
  std::vector<MDiagonal> diagonals;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw GeometryError("expected i-j, got '" + item + "'");
    try {
      std::size_t used_a = 0, used_b = 0;
      const int a = std::stoi(item.substr(0, dash), &used_a);
      const int b = std::stoi(item.substr(dash + 1), &used_b);
      if (used_a != dash || used_b != item.size() - dash - 1) throw std::invalid_argument(item);
      check_label(p, a);
      check_label(p, b);
      diagonals.emplace_back(a, b);
    } catch (const GeometryError&) {
      throw;
    } catch (const std::exception&) {
      throw GeometryError("expected i-j, got '" + item + "'");
    }
  }
  return Angulation(p, std::move(diagonals));
}

}  // namespace cquiver
