#include "cquiver/quiver.hpp"

#include <sstream>

namespace cquiver {

ColouredQuiver::ColouredQuiver(int m, int vertex_count)
    : m_(m), n_(vertex_count) {
  if (m < 0) throw InvalidQuiverError("colour modulus m must be non-negative");
  if (vertex_count < 1) throw InvalidQuiverError("a quiver needs at least one vertex");
  table_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
}

std::size_t ColouredQuiver::index(int from, int to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) {
    throw std::out_of_range("vertex index out of range: (" + std::to_string(from) + ", " +
                            std::to_string(to) + ")");
  }
  return static_cast<std::size_t>(from) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(to);
}

void ColouredQuiver::set_arrow(int from, int to, int colour, int mult) {
  table_[index(from, to)] = ArrowBundle{colour, mult};
}

void ColouredQuiver::clear_arrow(int from, int to) { table_[index(from, to)].reset(); }

void ColouredQuiver::connect(int from, int to, int colour, int mult) {
  set_arrow(from, to, colour, mult);
  set_arrow(to, from, m_ - colour, mult);
}

ColouredQuiver ColouredQuiver::without_vertex(int v) const {
  if (n_ == 1) throw InvalidQuiverError("cannot remove the only vertex");
  ColouredQuiver out(m_, n_ - 1);
  for (int i = 0; i < n_; ++i) {
    if (i == v) continue;
    for (int j = 0; j < n_; ++j) {
      if (j == v) continue;
      out.table_[out.index(i - (i > v), j - (j > v))] = table_[index(i, j)];
    }
  }
  return out;
}

ColouredQuiver ColouredQuiver::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  ColouredQuiver out(m_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.table_[out.index(perm[i], perm[j])] = table_[index(i, j)];
  return out;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    const auto& v = violations[k];
    if (k) os << "; ";
    os << v.kind << " at (" << v.from << ", " << v.to << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
  }
  return os.str();
}

ValidationReport validate(const ColouredQuiver& q) {
  ValidationReport report;
  const int n = q.vertex_count();
  const int m = q.m();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& a = q.arrow(i, j);
      if (!a) {
        if (i != j && q.arrow(j, i)) {
          report.violations.push_back(
              {"colour symmetry", i, j, "opposite arrows present but this direction is empty"});
        }
        continue;
      }
      if (i == j) {
        report.violations.push_back({"loop", i, j, ""});
        continue;
      }
      if (a->colour < 0 || a->colour > m) {
        report.violations.push_back(
            {"colour range", i, j, "colour " + std::to_string(a->colour) + " outside 0.." + std::to_string(m)});
      }
      if (a->mult < 1) {
        report.violations.push_back({"multiplicity", i, j, "multiplicity " + std::to_string(a->mult)});
      }
      // Check each unordered pair once from its lower end.
      if (i < j) {
        const auto& b = q.arrow(j, i);
        if (!b) continue;  // reported when visiting (j, i)
        if (a->colour + b->colour != m || a->mult != b->mult) {
          std::ostringstream os;
          os << "colours " << a->colour << "/" << b->colour << ", multiplicities " << a->mult
             << "/" << b->mult;
          report.violations.push_back({"colour symmetry", i, j, os.str()});
        }
      }
    }
  }
  return report;
}

void require_valid(const ColouredQuiver& q) {
  auto report = validate(q);
  if (!report.ok()) throw InvalidQuiverError("invalid coloured quiver: " + report.to_string());
}

namespace {

// Shared body of mutate / mutate_inverse. `pivot_colour` is the colour of
// the j->k arrows that compose in step (1); `step` is added to arrows into j.
ColouredQuiver mutate_impl(const ColouredQuiver& q, int j, int pivot_colour, int step) {
  require_valid(q);
  const int n = q.vertex_count();
  const int m = q.m();
  if (j < 0 || j >= n) {
    throw std::out_of_range("mutation vertex " + std::to_string(j) + " out of range");
  }
  const int colours = m + 1;

  // counts[(i*n + k) * colours + c] = number of arrows i->k of colour c
  std::vector<long long> counts(static_cast<std::size_t>(n) * n * colours, 0);
  auto at = [&](int i, int k, int c) -> long long& {
    return counts[(static_cast<std::size_t>(i) * n + k) * colours + c];
  };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (const auto& a = q.arrow(i, k)) at(i, k, a->colour) += a->mult;

  for (int i = 0; i < n; ++i) {
    const auto& in = q.arrow(i, j);
    if (!in) continue;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const auto& out = q.arrow(j, k);
      if (!out || out->colour != pivot_colour) continue;
      const long long r = static_cast<long long>(in->mult) * out->mult;
      at(i, k, in->colour) += r;
      at(k, i, m - in->colour) += r;
    }
  }

  ColouredQuiver result(m, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (i == k) continue;
      int present[2];
      int distinct = 0;
      for (int c = 0; c < colours; ++c) {
        if (at(i, k, c) == 0) continue;
        if (distinct == 2) {
          throw InternalInvariantError("mutation produced three or more colours on arrow pair (" +
                                       std::to_string(i) + ", " + std::to_string(k) + ")");
        }
        present[distinct++] = c;
      }
      if (distinct == 0) continue;
      int colour = present[0];
      long long mult = at(i, k, colour);
      if (distinct == 2) {
        const long long a = at(i, k, present[0]);
        const long long b = at(i, k, present[1]);
        if (a == b) continue;
        colour = a > b ? present[0] : present[1];
        mult = a > b ? a - b : b - a;
      }
      if (k == j) colour = (colour + step + colours) % colours;
      if (i == j) colour = (colour - step + colours) % colours;
      result.set_arrow(i, k, colour, static_cast<int>(mult));
    }
  }

  auto report = validate(result);
  if (!report.ok()) {
    throw InternalInvariantError("mutation output failed validation: " + report.to_string());
  }
  return result;
}

}  // namespace

ColouredQuiver mutate(const ColouredQuiver& q, int j) { return mutate_impl(q, j, q.m(), -1); }

ColouredQuiver mutate_inverse(const ColouredQuiver& q, int j) { return mutate_impl(q, j, 0, +1); }

GabrielQuiver gabriel_quiver(const ColouredQuiver& q) {
  require_valid(q);
  GabrielQuiver g;
  g.vertex_count = q.vertex_count();
  for (int i = 0; i < q.vertex_count(); ++i)
    for (int j = 0; j < q.vertex_count(); ++j)
      if (const auto& a = q.arrow(i, j); a && a->colour == 0) g.arrows.push_back({i, j, a->mult});
  return g;
}

}  // namespace cquiver
