#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cquiver {

/// Thrown when an operation's output breaks an invariant that valid input
/// should have preserved. Indicates a bug, not bad input.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidQuiverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ArrowBundle {
  int colour = 0;
  int mult = 1;

  friend bool operator==(const ArrowBundle&, const ArrowBundle&) = default;
};

/// Coloured quiver on vertices 0..n-1 with colours in 0..m.
///
/// Arrows are kept in a full n x n table: the entry (i, j) describes the
/// bundle of parallel arrows from i to j, if any. Both halves of every
/// opposite pair are stored explicitly, so a table can be built that
/// violates the colour-symmetry rule; `validate` reports such violations.
class ColouredQuiver {
 public:
  ColouredQuiver(int m, int vertex_count);

  int m() const { return m_; }
  int vertex_count() const { return n_; }

  const std::optional<ArrowBundle>& arrow(int from, int to) const {
    return table_[index(from, to)];
  }

  /// Sets one direction only.
  void set_arrow(int from, int to, int colour, int mult = 1);
  void clear_arrow(int from, int to);

  /// Sets from->to with `colour` and to->from with m - colour.
  void connect(int from, int to, int colour, int mult = 1);

  /// Copy of this quiver with vertex v removed; higher vertices shift down.
  ColouredQuiver without_vertex(int v) const;

  /// Copy relabelled so that old vertex v becomes perm[v].
  ColouredQuiver relabel(const std::vector<int>& perm) const;

  friend bool operator==(const ColouredQuiver&, const ColouredQuiver&) = default;

 private:
  std::size_t index(int from, int to) const;

  int m_;
  int n_;
  std::vector<std::optional<ArrowBundle>> table_;
};

struct Violation {
  std::string kind;  // "loop", "colour range", "multiplicity", "colour symmetry"
  int from;
  int to;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const ColouredQuiver& q);

/// Throws InvalidQuiverError carrying the report text unless q is valid.
void require_valid(const ColouredQuiver& q);

/// Coloured quiver mutation at vertex j.
///
/// (1) For each arrow i->j of colour c and arrow j->k of colour m with
///     i != k, add an arrow i->k of colour c and k->i of colour m - c
///     (multiplicities multiply).
/// (2) On every ordered pair, cancel arrows of distinct colours pairwise
///     until a single colour remains.
/// (3) Subtract one (mod m+1) from the colour of every arrow into j and add
///     one to every arrow out of j.
///
/// This orientation is the one under which quiver_of commutes with clockwise
/// diagonal mutation for colours counted counterclockwise; applied m+1 times
/// at one vertex it is the identity.
ColouredQuiver mutate(const ColouredQuiver& q, int j);

/// Two-sided inverse of `mutate`: step (1) pairs i->j with j->k of colour 0,
/// step (3) adds one into j and subtracts one out of j.
ColouredQuiver mutate_inverse(const ColouredQuiver& q, int j);

/// Canonical form up to colour-preserving vertex relabelling. Two valid
/// quivers have equal keys iff they are isomorphic.
struct CanonicalQuiverKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalQuiverKey&, const CanonicalQuiverKey&) = default;
};

CanonicalQuiverKey canonical_key(const ColouredQuiver& q);

/// Relabelling that realises canonical_key: old vertex v goes to result[v].
std::vector<int> canonical_labelling(const ColouredQuiver& q);

struct PlainArrow {
  int from;
  int to;
  int mult;

  friend auto operator<=>(const PlainArrow&, const PlainArrow&) = default;
};

struct GabrielQuiver {
  int vertex_count = 0;
  std::vector<PlainArrow> arrows;  // sorted by (from, to)

  friend bool operator==(const GabrielQuiver&, const GabrielQuiver&) = default;
};

/// The colour-0 subquiver.
GabrielQuiver gabriel_quiver(const ColouredQuiver& q);

}  // namespace cquiver

template <>
struct std::hash<cquiver::CanonicalQuiverKey> {
  std::size_t operator()(const cquiver::CanonicalQuiverKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
