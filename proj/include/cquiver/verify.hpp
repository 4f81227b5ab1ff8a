#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cquiver/counting.hpp"
#include "cquiver/geometry.hpp"
#include "cquiver/quiver.hpp"

namespace cquiver {

/// Linear A_n: i -> i+1 colour 0 and i+1 -> i colour m.
ColouredQuiver seed_quiver(int n, int m);

using MutationFn = std::function<ColouredQuiver(const ColouredQuiver&, int)>;

class BfsLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MutationClass {
  std::unordered_set<CanonicalQuiverKey> keys;
  /// One representative per class, in discovery order.
  std::vector<ColouredQuiver> representatives;
};

struct BfsOptions {
  /// Abort once more than this many classes are found.
  std::optional<std::size_t> limit;
  MutationFn mutation = mutate;
  /// Expand the most recently found quiver first instead of the oldest.
  bool depth_first = false;
};

/// Closure of q0 under mutation at every vertex, deduplicated up to
/// isomorphism. Throws BfsLimitExceeded when the limit is passed.
MutationClass bfs_mutation_class(const ColouredQuiver& q0, const BfsOptions& options = {});

struct CheckResult {
  std::string name;
  int n = 0;  // rank (geometric checks use N = n + 1)
  int m = 0;
  std::string expected;
  std::string observed;
  bool passed = false;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

struct VerifyOptions {
  /// Quiver mutation used by the BFS and commutation checks. Tests swap in
  /// a broken rule here as a negative control.
  MutationFn mutation = mutate;
};

/// Runs every cross-check for 1 <= n <= n_max, 1 <= m <= m_max.
VerificationReport verify_all(int n_max, int m_max, const VerifyOptions& options = {});

/// Breaks step (3) by leaving colours of arrows at j unchanged.
ColouredQuiver corrupted_mutate(const ColouredQuiver& q, int j);

}  // namespace cquiver
