#include "cquiver/verify.hpp"

#include <chrono>
#include <deque>
#include "json.hpp"
#include <sstream>

namespace cquiver {

ColouredQuiver seed_quiver(int n, int m) {
  ColouredQuiver q(m, n);
  for (int i = 0; i + 1 < n; ++i) q.connect(i, i + 1, 0);
  return q;
}

MutationClass bfs_mutation_class(const ColouredQuiver& q0, const BfsOptions& options) {
  require_valid(q0);
  MutationClass out;
  std::deque<std::size_t> frontier;  // indices into representatives

  out.keys.insert(canonical_key(q0));
  out.representatives.push_back(q0);
  frontier.push_back(0);

  while (!frontier.empty()) {
    std::size_t idx;
    if (options.depth_first) {
      idx = frontier.back();
      frontier.pop_back();
    } else {
      idx = frontier.front();
      frontier.pop_front();
    }
    for (int j = 0; j < q0.vertex_count(); ++j) {
      auto next = options.mutation(out.representatives[idx], j);
      if (!out.keys.insert(canonical_key(next)).second) continue;
      if (options.limit && out.keys.size() > *options.limit) {
        throw BfsLimitExceeded("mutation class exceeded " + std::to_string(*options.limit) +
                               " members; expected size is wrong or mutation is broken");
      }
      out.representatives.push_back(std::move(next));
      frontier.push_back(out.representatives.size() - 1);
    }
  }
  return out;
}

ColouredQuiver corrupted_mutate(const ColouredQuiver& q, int j) {
  auto r = mutate(q, j);
  const int colours = q.m() + 1;
  ColouredQuiver out = r;
  for (int i = 0; i < q.vertex_count(); ++i) {
    if (i == j) continue;
    if (const auto& a = r.arrow(i, j)) out.set_arrow(i, j, (a->colour + 1) % colours, a->mult);
    if (const auto& a = r.arrow(j, i)) out.set_arrow(j, i, (a->colour - 1 + colours) % colours, a->mult);
  }
  return out;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  n=" << c.n << " m=" << c.m
       << "  expected=" << c.expected << "  observed=" << c.observed << "  (" << c.seconds << " s)\n";
  }
  os << (passed() ? "PASS" : "FAIL") << " overall (" << checks.size() << " checks)\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"n", c.n},
                             {"m", c.m},
                             {"expected", c.expected},
                             {"observed", c.observed},
                             {"passed", c.passed},
                             {"seconds", c.seconds}});
  }
  return doc.dump(2);
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string to_string(const Count& c) { return c.str(); }

std::size_t bfs_limit(const Count& predicted) {
  const Count limit = 10 * predicted;
  return limit.convert_to<std::size_t>();
}

// Tallies failures and keeps the first one as a witness.
struct FailureLog {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = describe();
  }

  void fill(CheckResult& r) const {
    r.expected = "0 failures";
    r.observed = std::to_string(failures) + " failures in " + std::to_string(cases) + " cases";
    if (failures) r.observed += "; first: " + first;
    r.passed = failures == 0;
  }
};

void check_rank(int n, int m, const VerifyOptions& options, VerificationReport& report) {
  const PolygonParams poly(n + 1, m);

  {
    Stopwatch clock;
    CheckResult r{"triple agreement", n, m};
    const Count formula = count_coloured_quivers(n, m);
    const std::size_t classes = count_rotation_classes(poly);
    std::string bfs_size;
    bool bfs_ok = false;
    try {
      BfsOptions bfs;
      bfs.limit = bfs_limit(formula);
      bfs.mutation = options.mutation;
      const auto cls = bfs_mutation_class(seed_quiver(n, m), bfs);
      bfs_size = std::to_string(cls.keys.size());
      bfs_ok = Count(cls.keys.size()) == formula;
    } catch (const std::exception& e) {
      bfs_size = std::string("error: ") + e.what();
    }
    r.expected = to_string(formula);
    r.observed = "geometry=" + std::to_string(classes) + " bfs=" + bfs_size;
    r.passed = Count(classes) == formula && bfs_ok;
    r.seconds = clock.seconds();
    report.checks.push_back(r);
  }

  const auto angulations = enumerate_angulations(poly);

  {
    Stopwatch clock;
    CheckResult r{"commutation", n, m};
    FailureLog log;
    for (const auto& a : angulations) {
      const auto q = quiver_of(a);
      for (std::size_t s = 0; s < a.diagonals().size(); ++s) {
        const auto& d = a.diagonals()[s];
        bool ok = false;
        try {
          ok = quiver_of(mutate_at(a, d)) == options.mutation(q, static_cast<int>(s));
        } catch (const std::exception&) {
        }
        log.record(ok, [&] { return to_compact(a) + " at " + std::to_string(d.i) + "-" + std::to_string(d.j); });
      }
    }
    log.fill(r);
    r.seconds = clock.seconds();
    report.checks.push_back(r);
  }

  {
    Stopwatch clock;
    CheckResult r{"periodicity", n, m};
    FailureLog log;
    for (const auto& a : angulations) {
      for (std::size_t s = 0; s < a.diagonals().size(); ++s) {
        Angulation b = a;
        for (int k = 0; k <= m; ++k) b = mutate_at(b, b.diagonals()[s]);
        log.record(b == a && b.diagonals() == a.diagonals(),
                   [&] { return "angulation " + to_compact(a) + " slot " + std::to_string(s); });
      }
    }
    try {
      BfsOptions bfs;
      bfs.mutation = options.mutation;
      bfs.limit = bfs_limit(count_coloured_quivers(n, m));
      for (const auto& q : bfs_mutation_class(seed_quiver(n, m), bfs).representatives) {
        for (int j = 0; j < n; ++j) {
          ColouredQuiver p = q;
          for (int k = 0; k <= m; ++k) p = options.mutation(p, j);
          log.record(p == q, [&] { return "quiver vertex " + std::to_string(j); });
        }
      }
    } catch (const std::exception& e) {
      log.record(false, [&] { return std::string("bfs error: ") + e.what(); });
    }
    log.fill(r);
    r.seconds = clock.seconds();
    report.checks.push_back(r);
  }

  {
    Stopwatch clock;
    CheckResult r{"validity and colour sum", n, m};
    FailureLog log;
    for (const auto& a : angulations) {
      const auto q = quiver_of(a);
      bool ok = validate(q).ok();
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (const auto& x = q.arrow(i, j)) ok = q.arrow(j, i) && x->colour + q.arrow(j, i)->colour == m;
      for (const auto& c : a.cells()) ok = ok && static_cast<int>(c.sides.size()) == m + 2;
      log.record(ok, [&] { return to_compact(a); });
    }
    log.fill(r);
    r.seconds = clock.seconds();
    report.checks.push_back(r);
  }

  {
    Stopwatch clock;
    CheckResult r{"factor-out lemma", n, m};
    FailureLog log;
    for (const auto& a : angulations) {
      const auto q = quiver_of(a);
      for (std::size_t s = 0; s < a.diagonals().size(); ++s) {
        const auto& d = a.diagonals()[s];
        if (!is_close_to_border(a, d)) continue;
        const auto reduced = factor_out(a, d);
        bool ok = reduced.diagonals().empty()
                      ? n == 1
                      : quiver_of(reduced) == q.without_vertex(static_cast<int>(s));
        log.record(ok, [&] { return to_compact(a) + " without " + std::to_string(d.i) + "-" + std::to_string(d.j); });
      }
      for (const auto& e : border_edges(poly)) {
        const auto ext = extend_at(a, e);
        const auto back = factor_out(ext.angulation, ext.new_diagonal);
        log.record(back == a && back.diagonals() == a.diagonals(),
                   [&] { return to_compact(a) + " extended at " + std::to_string(e.i) + "-" + std::to_string(e.j); });
      }
    }
    log.fill(r);
    r.seconds = clock.seconds();
    report.checks.push_back(r);
  }

  {
    Stopwatch clock;
    CheckResult r{"indecomposables", n, m};
    const Count formula = num_indecomposables(n, m);
    const auto enumerated = all_m_diagonals(poly).size();
    r.expected = to_string(formula);
    r.observed = std::to_string(enumerated);
    r.passed = formula == enumerated && count_m_diagonals(poly) == formula;
    r.seconds = clock.seconds();
    report.checks.push_back(r);
  }
}

}  // namespace

VerificationReport verify_all(int n_max, int m_max, const VerifyOptions& options) {
  VerificationReport report;
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= m_max; ++m) check_rank(n, m, options, report);
  return report;
}

}  // namespace cquiver
