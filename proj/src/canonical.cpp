#include <algorithm>
#include <map>
#include <tuple>

#include "cquiver/quiver.hpp"

namespace cquiver {

namespace {

int cell_code(const std::optional<ArrowBundle>& a) {
  if (!a) return 0;
  return (a->colour + 1) * 256 + a->mult;
}

// Colour refinement: returns an isomorphism-invariant class id per vertex.
std::vector<int> refine_classes(const ColouredQuiver& q) {
  const int n = q.vertex_count();
  std::vector<int> label(n, 0);
  int classes = 1;
  using Edge = std::tuple<int, int, int>;
  using Signature = std::tuple<int, std::vector<Edge>, std::vector<Edge>>;
  while (true) {
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<Edge> out, in;
      for (int u = 0; u < n; ++u) {
        if (const auto& a = q.arrow(v, u)) out.emplace_back(a->colour, a->mult, label[u]);
        if (const auto& a = q.arrow(u, v)) in.emplace_back(a->colour, a->mult, label[u]);
      }
      std::sort(out.begin(), out.end());
      std::sort(in.begin(), in.end());
      sig[v] = Signature{label[v], std::move(out), std::move(in)};
    }
    std::map<Signature, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) label[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return label;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ColouredQuiver& q)
      : q_(q), n_(q.vertex_count()), cls_(refine_classes(q)), used_(n_, false) {
    slot_class_ = cls_;
    std::sort(slot_class_.begin(), slot_class_.end());
    order_.reserve(n_);
  }

  void run() { descend(0); }

  const std::vector<int>& best_order() const { return best_order_; }
  const std::vector<int>& best_code() const { return best_code_; }

 private:
  // Code entries contributed when vertex at position p joins positions 0..p-1.
  void append_segment(std::vector<int>& code, int p) const {
    const int v = order_[p];
    for (int s = 0; s < p; ++s) {
      const int u = order_[s];
      code.push_back(cell_code(q_.arrow(v, u)));
      code.push_back(cell_code(q_.arrow(u, v)));
    }
  }

  void descend(int p) {
    if (p == n_) {
      if (best_code_.empty() || code_ < best_code_) {
        best_code_ = code_;
        best_order_ = order_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v] || cls_[v] != slot_class_[p]) continue;
      used_[v] = true;
      order_.push_back(v);
      const std::size_t mark = code_.size();
      append_segment(code_, p);
      bool prune = false;
      if (!best_code_.empty()) {
        // best_code_ is complete; compare only the shared prefix.
        prune = std::lexicographical_compare(best_code_.begin(), best_code_.begin() + code_.size(),
                                             code_.begin(), code_.end());
      }
      if (!prune) descend(p + 1);
      code_.resize(mark);
      order_.pop_back();
      used_[v] = false;
    }
  }

  const ColouredQuiver& q_;
  int n_;
  std::vector<int> cls_;
  std::vector<int> slot_class_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> code_;
  std::vector<int> best_order_;
  std::vector<int> best_code_;
};

}  // namespace

std::vector<int> canonical_labelling(const ColouredQuiver& q) {
  require_valid(q);
  CanonicalSearch search(q);
  search.run();
  const auto& order = search.best_order();
  std::vector<int> perm(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) perm[order[p]] = static_cast<int>(p);
  return perm;
}

CanonicalQuiverKey canonical_key(const ColouredQuiver& q) {
  require_valid(q);
  if (q.m() > 254) throw InvalidQuiverError("canonical_key supports m <= 254");
  for (int i = 0; i < q.vertex_count(); ++i)
    for (int j = 0; j < q.vertex_count(); ++j)
      if (const auto& a = q.arrow(i, j); a && a->mult > 255)
        throw InvalidQuiverError("canonical_key supports multiplicities <= 255");

  CanonicalSearch search(q);
  search.run();
  CanonicalQuiverKey key;
  auto& b = key.bytes;
  b.reserve(4 + 2 * search.best_code().size());
  b.push_back(static_cast<char>(q.vertex_count() >> 8));
  b.push_back(static_cast<char>(q.vertex_count() & 0xff));
  b.push_back(static_cast<char>(q.m()));
  for (int c : search.best_code()) {
    b.push_back(static_cast<char>(c >> 8));
    b.push_back(static_cast<char>(c & 0xff));
  }
  return key;
}

}  // namespace cquiver
