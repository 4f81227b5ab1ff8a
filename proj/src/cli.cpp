#include "cquiver/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_set>

#include "CLI11.hpp"
#include "cquiver/counting.hpp"
#include "cquiver/geometry.hpp"
#include "cquiver/io.hpp"
#include "cquiver/verify.hpp"
#include "json.hpp"

namespace cquiver {

namespace {

// Largest instances the enumerating routes accept.
constexpr long long kGeometryLimit = 20'000'000;  // labelled angulations
constexpr long long kBfsLimit = 2'000'000;        // predicted class size

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = -1;
};

Range parse_range(const std::string& text, const char* what) {
  Range r;
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      const auto tail = text.substr(dots + 2);
      r.hi = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": expected a..b or a single integer, got '" + text + "'");
  }
  if (r.lo > r.hi) throw UsageError(std::string(what) + ": empty range '" + text + "'");
  return r;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Count count_by(const std::string& method, int n, int m) {
  if (method == "formula") return count_coloured_quivers(n, m);
  if (method == "geometry") {
    if (fuss_catalan_tilting(n, m) > kGeometryLimit) {
      throw UsageError("instance too large for --method geometry");
    }
    return count_rotation_classes(PolygonParams(n + 1, m));
  }
  if (method == "bfs") {
    const Count predicted = count_coloured_quivers(n, m);
    if (predicted > kBfsLimit) throw UsageError("instance too large for --method bfs");
    BfsOptions options;
    options.limit = static_cast<std::size_t>(10 * predicted.convert_to<long long>());
    return bfs_mutation_class(seed_quiver(n, m), options).keys.size();
  }
  throw UsageError("unknown method '" + method + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coloured quivers of type A: mutation, (m+2)-angulations and mutation-class counts"};
  app.require_subcommand(1);

  int n = 0;
  int m = 0;
  std::string method = "formula";
  std::string format;
  std::string input;
  std::string output;
  std::string expect;
  std::string n_range = "2..20";
  std::string m_range = "1..4";
  std::string diagonals;
  std::vector<int> at;
  int max_n = 4;
  int max_m = 2;
  bool classes_only = false;
  bool negative_control = false;

  auto* count = app.add_subcommand("count", "size of the mutation class of A_n");
  count->add_option("-n,--n", n, "rank of A_n")->required()->check(CLI::PositiveNumber);
  count->add_option("-m,--m", m, "colour parameter")->required()->check(CLI::PositiveNumber);
  count->add_option("--method", method, "formula | geometry | bfs")
      ->check(CLI::IsMember({"formula", "geometry", "bfs"}));
  count->add_option("--expect", expect, "exit 2 unless the count equals this value");
  count->add_option("--output", output);

  auto* table = app.add_subcommand("table", "grid of closed-form class sizes");
  table->add_option("--n", n_range, "rank range a..b")->capture_default_str();
  table->add_option("--m", m_range, "colour range a..b")->capture_default_str();
  table->add_option("--format", format, "csv | json | text")->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_option("--output", output);

  auto* enumerate = app.add_subcommand("enumerate", "angulations of P(n+1, m) as JSON lines");
  enumerate->add_option("-n,--n", n, "rank; the polygon has n+1 cells")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("-m,--m", m)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--classes", classes_only, "one representative per rotation class");
  enumerate->add_option("--output", output);

  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a quiver JSON document");
  mutate_cmd->add_option("--input", input, "quiver JSON file, - for stdin")->required();
  mutate_cmd->add_option("--at", at, "0-based vertices, applied left to right")
      ->required()
      ->delimiter(',');
  mutate_cmd->add_option("--output", output);

  auto add_angulation_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "angulation JSON file, - for stdin");
    sub->add_option("--diagonals", diagonals, "compact form i-j,i-j,... (needs -n and -m)");
    sub->add_option("-n,--n", n, "rank; the polygon has n+1 cells");
    sub->add_option("-m,--m", m);
    sub->add_option("--output", output);
  };
  auto* quiver_cmd = app.add_subcommand("quiver-of", "coloured quiver of an angulation");
  add_angulation_input(quiver_cmd);
  auto* relations_cmd = app.add_subcommand("relations", "zero relations of an angulation");
  add_angulation_input(relations_cmd);

  auto* tilting = app.add_subcommand("tilting-count", "number of m-cluster tilting objects of A_n");
  tilting->add_option("-n,--n", n)->required()->check(CLI::PositiveNumber);
  tilting->add_option("-m,--m", m)->required()->check(CLI::PositiveNumber);
  tilting->add_option("--output", output);

  auto* verify = app.add_subcommand("verify", "run every cross-check up to the given bounds");
  verify->add_option("--max-n", max_n)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--max-m", max_m)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--negative-control", negative_control, "use a deliberately broken mutation rule")
      ->group("");
  verify->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto load_angulation = [&]() -> Angulation {
    if (!diagonals.empty() || (input.empty() && n > 0)) {
      if (n < 1 || m < 1) throw UsageError("--diagonals needs -n and -m");
      return parse_compact(PolygonParams(n + 1, m), diagonals);
    }
    return angulation_from_json(read_input(input, in));
  };

  try {
    if (*count) {
      const Count c = count_by(method, n, m);
      Output o(output, out);
      *o << c.str() << "\n";
      if (!expect.empty() && expect != c.str()) {
        err << "expected " << expect << ", computed " << c.str() << "\n";
        return 2;
      }
      return 0;
    }

    if (*table) {
      const Range nr = parse_range(n_range, "--n");
      const Range mr = parse_range(m_range, "--m");
      if (nr.lo < 1 || mr.lo < 1) throw UsageError("ranges must start at 1 or above");
      Output o(output, out);
      if (format.empty() || format == "csv") {
        *o << "n,m,count\n";
        for (int i = nr.lo; i <= nr.hi; ++i)
          for (int j = mr.lo; j <= mr.hi; ++j) *o << i << "," << j << "," << count_coloured_quivers(i, j) << "\n";
      } else if (format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (int i = nr.lo; i <= nr.hi; ++i)
          for (int j = mr.lo; j <= mr.hi; ++j)
            doc.push_back({{"n", i}, {"m", j}, {"count", count_coloured_quivers(i, j).str()}});
        *o << doc.dump(2) << "\n";
      } else {
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{""};
        for (int j = mr.lo; j <= mr.hi; ++j) header.push_back("m=" + std::to_string(j));
        cells.push_back(header);
        for (int i = nr.lo; i <= nr.hi; ++i) {
          std::vector<std::string> row{"n=" + std::to_string(i)};
          for (int j = mr.lo; j <= mr.hi; ++j) row.push_back(count_coloured_quivers(i, j).str());
          cells.push_back(row);
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& row : cells)
          for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        for (const auto& row : cells) {
          for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) *o << "  ";
            *o << std::string(width[c] - row[c].size(), ' ') << row[c];
          }
          *o << "\n";
        }
      }
      return 0;
    }

    if (*enumerate) {
      const PolygonParams p(n + 1, m);
      if (fuss_catalan_tilting(n, m) > kGeometryLimit) throw UsageError("instance too large to enumerate");
      Output o(output, out);
      std::unordered_set<RotationClassKey> seen;
      for_each_angulation(p, [&](const Angulation& a) {
        if (classes_only && !seen.insert(rotation_class_key(a)).second) return;
        *o << angulation_to_json(a) << "\n";
      });
      return 0;
    }

    if (*mutate_cmd) {
      ColouredQuiver q = quiver_from_json(read_input(input, in));
      for (int j : at) {
        if (j < 0 || j >= q.vertex_count()) {
          throw UsageError("--at " + std::to_string(j) + " outside 0.." + std::to_string(q.vertex_count() - 1));
        }
        q = mutate(q, j);
      }
      Output o(output, out);
      *o << quiver_to_json(q) << "\n";
      return 0;
    }

    if (*quiver_cmd) {
      const auto a = load_angulation();
      Output o(output, out);
      *o << quiver_to_json(quiver_of(a)) << "\n";
      return 0;
    }

    if (*relations_cmd) {
      const auto a = load_angulation();
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& z : relations_of(a)) doc.push_back({z.from, z.mid, z.to});
      Output o(output, out);
      *o << doc.dump() << "\n";
      return 0;
    }

    if (*tilting) {
      Output o(output, out);
      *o << fuss_catalan_tilting(n, m) << "\n";
      return 0;
    }

    if (*verify) {
      VerifyOptions options;
      if (negative_control) options.mutation = corrupted_mutate;
      const auto report = verify_all(max_n, max_m, options);
      Output o(output, out);
      *o << (format == "json" ? report.to_json() + "\n" : report.to_text());
      return report.passed() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cquiver
