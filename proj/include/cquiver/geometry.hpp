#pragma once

#include <compare>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cquiver/counting.hpp"
#include "cquiver/quiver.hpp"

namespace cquiver {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The polygon with V = N*m + 2 boundary vertices labelled 1..V clockwise.
/// N is the number of cells of any (m+2)-angulation of it.
struct PolygonParams {
  int N;
  int m;

  PolygonParams(int cells, int m);
  int vertex_count() const { return N * m + 2; }

  friend bool operator==(const PolygonParams&, const PolygonParams&) = default;
};

/// Unordered chord {i, j}, stored with i < j. Whether it is an m-diagonal
/// depends on the polygon; see is_m_diagonal.
struct MDiagonal {
  int i;
  int j;

  MDiagonal(int a, int b);

  friend auto operator<=>(const MDiagonal&, const MDiagonal&) = default;
};

/// Border edge {k, k+1} or {V, 1}, normalised with lo < hi like MDiagonal.
using BorderEdge = MDiagonal;

bool is_m_diagonal(const PolygonParams& p, int i, int j);

/// Interior crossing; shared endpoints do not cross.
bool crosses(const MDiagonal& a, const MDiagonal& b);

Count count_m_diagonals(const PolygonParams& p);
std::vector<MDiagonal> all_m_diagonals(const PolygonParams& p);

/// One side of a cell: either a border edge or a diagonal of the angulation.
struct CellSide {
  MDiagonal chord;
  bool is_diagonal;
};

/// Cell vertices in clockwise (increasing label) order; side t joins
/// vertices t and t+1 (cyclically).
struct Cell {
  std::vector<int> vertices;
  std::vector<CellSide> sides;
};

/// An (m+2)-angulation.
///
/// Diagonals are kept in slot order: the order they were supplied in, which
/// is also the vertex order of quiver_of. mutate_at replaces a diagonal in
/// place, so slot k of the result is the image of slot k of the input.
/// Equality compares diagonal sets and ignores slot order.
class Angulation {
 public:
  /// Validates: N-1 distinct pairwise non-crossing m-diagonals.
  Angulation(PolygonParams params, std::vector<MDiagonal> diagonals);

  const PolygonParams& params() const { return params_; }
  const std::vector<MDiagonal>& diagonals() const { return diagonals_; }
  std::vector<MDiagonal> sorted_diagonals() const;

  /// Slot of d, or -1.
  int slot_of(const MDiagonal& d) const;

  /// Computed on demand; N cells of m+2 sides each.
  std::vector<Cell> cells() const;

  friend bool operator==(const Angulation& a, const Angulation& b);

 private:
  PolygonParams params_;
  std::vector<MDiagonal> diagonals_;
};

/// Calls `visit` once for every (m+2)-angulation of the polygon. Diagonal
/// slot order within each yielded angulation is the generation order.
void for_each_angulation(const PolygonParams& p, const std::function<void(const Angulation&)>& visit);

std::vector<Angulation> enumerate_angulations(const PolygonParams& p);

/// Number of angulations generated, without materialising cells; runs the
/// enumeration itself (this is not the closed formula).
std::uint64_t enumerate_count(const PolygonParams& p, int threads = 1);

/// One step v -> v-1 (1 -> V). Slot order is preserved.
Angulation rotate(const Angulation& a);

struct RotationClassKey {
  std::string bytes;

  friend auto operator<=>(const RotationClassKey&, const RotationClassKey&) = default;
};

RotationClassKey rotation_class_key(const Angulation& a);

/// Number of distinct rotation_class_key values over all angulations.
std::size_t count_rotation_classes(const PolygonParams& p);

/// Replaces d by the diameter one step clockwise in the (2m+2)-gon formed by
/// the two cells on d. The new diagonal occupies d's slot.
Angulation mutate_at(const Angulation& a, const MDiagonal& d);

/// One vertex per diagonal (in slot order). For diagonals alpha, beta on a
/// common cell, alpha -> beta has colour = number of cell sides strictly
/// between them walking counterclockwise from alpha.
ColouredQuiver quiver_of(const Angulation& a);

/// True if one of d's two cells has every side other than d on the border.
bool is_close_to_border(const Angulation& a, const MDiagonal& d);

/// Removes the m boundary vertices cut off by d (d must be close to the
/// border) and renumbers the remaining labels 1..V-m in increasing order.
/// d's slot is dropped; the rest keep their relative order. When both sides
/// of d qualify (N = 2) the side between i and j is removed.
Angulation factor_out(const Angulation& a, const MDiagonal& d);

struct Extension {
  Angulation angulation;
  MDiagonal new_diagonal;
};

/// Inserts m new vertices along border edge e, turning e into a diagonal
/// close to the border (appended as the last slot).
Extension extend_at(const Angulation& a, const BorderEdge& e);

std::vector<BorderEdge> border_edges(const PolygonParams& p);

/// A zero relation v_from -> v_mid -> v_to between quiver vertices (slots).
struct ZeroPath {
  int from;
  int mid;
  int to;

  friend auto operator<=>(const ZeroPath&, const ZeroPath&) = default;
};

/// Length-2 colour-0 paths in quiver_of(a) whose three diagonals lie on one
/// common cell.
std::set<ZeroPath> relations_of(const Angulation& a);

std::string to_compact(const Angulation& a);
Angulation parse_compact(const PolygonParams& p, const std::string& text);

}  // namespace cquiver

template <>
struct std::hash<cquiver::RotationClassKey> {
  std::size_t operator()(const cquiver::RotationClassKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
