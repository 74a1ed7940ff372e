#include "tkem/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <numeric>
#include <ostream>
#include <thread>

#include "tkem/code.hpp"
#include "tkem/errors.hpp"
#include "tkem/kemeny.hpp"
#include "tkem/oracle.hpp"
#include "tkem/resistance.hpp"
#include "tkem/search.hpp"
#include "tkem/spectral.hpp"

namespace tkem {

namespace {

using Json = nlohmann::ordered_json;

struct Output {
  Json input = Json::object();
  Json payload = Json::object();
  std::string text;
  std::string csv;
  int status = 0;  // 1 when a verification failed
};

std::string fmt(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

Json rational_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"float", q.get_d()}};
}

double gap(const Rational& a, const Rational& b) { return std::abs(Rational(a - b).get_d()); }

std::string rational_text(const Rational& q) { return to_fraction_string(q) + " (" + fmt(q.get_d()) + ")"; }

ConstructionCode code_from(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return parse_code(joined);
}

Json code_input(const ConstructionCode& code) { return Json{{"code", code.str()}, {"blocks", render_blocks(code)}}; }

unsigned default_threads() {
  if (const char* env = std::getenv("THREADS")) {
    unsigned t = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
    if (ec == std::errc{} && ptr == s.data() + s.size() && t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) line += ',';
    line += cells[k];
  }
  return line + '\n';
}

std::string matrix_header(std::size_t n) {
  std::vector<std::string> cells{"vertex"};
  for (std::size_t v = 1; v <= n; ++v) cells.push_back(std::to_string(v));
  return csv_row(cells);
}

// ---- compute -------------------------------------------------------------

Output cmd_compute(const ConstructionCode& code, const std::string& method) {
  Output o;
  o.input = code_input(code);
  o.input["method"] = method;
  const bool all = method == "all";

  std::optional<KemenyResult> exact;
  Json methods = Json::object();
  if (all || method == "codevec") {
    exact = kemeny_from_code(code);
    methods["codevec"] = rational_json(*exact->exact);
  }
  std::optional<Rational> degree;
  if (all || method == "degree") {
    auto d = kemeny_degree_form(code);
    degree = *d.exact;
    methods["degree"] = rational_json(*degree);
    if (!exact) exact = d;
  }
  std::optional<double> spectral;
  if (all || method == "spectral") {
    spectral = kemeny_spectral_form(code).value;
    methods["spectral"] = Json{{"float", *spectral}};
  }

  const auto profile = degree_profile(code);
  o.payload["n"] = code.size();
  o.payload["m"] = profile.edges;
  if (exact) {
    o.payload["kemeny"] = rational_json(*exact->exact);
  } else {
    o.payload["kemeny"] = Json{{"float", *spectral}};
  }
  if (all) {
    const Rational& k = *exact->exact;
    const bool agree = *degree == k && std::abs(*spectral - k.get_d()) < 1e-9;
    o.payload["methods"] = methods;
    o.payload["agree"] = agree;
  }

  std::optional<UpperBounds> bounds;
  if (code.size() >= 3) {
    bounds = exact ? upper_bounds(code, *exact->exact) : upper_bounds(code);
    o.payload["bounds"] = Json{{"linear", to_fraction_string(bounds->linear)},
                               {"sparse", bounds->sparse},
                               {"hold", bounds->both_hold}};
  } else {
    o.payload["bounds"] = nullptr;
  }

  if (exact)
    o.text = "K = " + rational_text(*exact->exact) + "\n";
  else
    o.text = "K ~ " + fmt(*spectral) + "\n";
  o.text += "n = " + std::to_string(code.size()) + ", m = " + std::to_string(profile.edges) + "\n";
  if (all) {
    o.text += "degree form:   " + to_fraction_string(*degree) + "\n";
    o.text += "spectral form: " + fmt(*spectral) + "\n";
    o.text += std::string("routes agree: ") + (o.payload["agree"].get<bool>() ? "yes" : "no") + "\n";
  }
  if (bounds)
    o.text += "K < " + to_fraction_string(bounds->linear) + ": " + (bounds->linear_holds ? "yes" : "no") +
              ", K < " + fmt(bounds->sparse) + ": " + (bounds->sparse_holds ? "yes" : "no") + "\n";

  o.csv = csv_row({"code", "n", "m", "method", "num", "den", "float"});
  if (exact)
    o.csv += csv_row({code.str(), std::to_string(code.size()), std::to_string(profile.edges),
                      std::string(method_name(exact->method)), exact->exact->get_num().get_str(),
                      exact->exact->get_den().get_str(), fmt(exact->value)});
  if (spectral)
    o.csv += csv_row({code.str(), std::to_string(code.size()), std::to_string(profile.edges), "spectral-form", "",
                      "", fmt(*spectral)});
  return o;
}

// ---- spectrum ------------------------------------------------------------

Output cmd_spectrum(const ConstructionCode& code) {
  Output o;
  o.input = code_input(code);
  const auto s = laplacian_spectrum(code);
  const std::string tau = code.connected() ? spanning_tree_count(code).get_str() : "0";
  o.payload["n"] = code.size();
  o.payload["lambda"] = s.eigenvalues;
  o.payload["sorted"] = s.sorted();
  o.payload["tau"] = tau;

  auto join = [](const std::vector<std::int64_t>& v) {
    std::string line;
    for (auto x : v) line += (line.empty() ? "" : " ") + std::to_string(x);
    return line;
  };
  o.text = "lambda: " + join(s.eigenvalues) + "\nsorted: " + join(s.sorted()) + "\ntau: " + tau + "\n";
  o.csv = csv_row({"column", "lambda"});
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j)
    o.csv += csv_row({std::to_string(j + 1), std::to_string(s.eigenvalues[j])});
  return o;
}

// ---- resistance / forest -------------------------------------------------

Output cmd_resistance(const ConstructionCode& code, const std::vector<std::size_t>& pair) {
  Output o;
  o.input = code_input(code);
  if (!pair.empty()) {
    if (pair[0] < 1 || pair[1] < 1) throw Error(ErrorKind::IndexOutOfRange, "vertices are numbered from 1");
    o.input["pair"] = pair;
    const auto r = resistance_closed_form(code, pair[0] - 1, pair[1] - 1);
    o.payload["pair"] = pair;
    o.payload["r"] = to_fraction_string(r);
    o.payload["float"] = r.get_d();
    o.text = "r(" + std::to_string(pair[0]) + ", " + std::to_string(pair[1]) + ") = " + rational_text(r) + "\n";
    o.csv = csv_row({"j", "v", "r", "float"}) +
            csv_row({std::to_string(pair[0]), std::to_string(pair[1]), to_fraction_string(r), fmt(r.get_d())});
    return o;
  }
  const auto p = resistance_matrix(code);
  Json rows = Json::array();
  o.csv = matrix_header(p.n);
  for (std::size_t a = 0; a < p.n; ++a) {
    Json row = Json::array();
    std::vector<std::string> cells{std::to_string(a + 1)};
    std::string line;
    for (std::size_t b = 0; b < p.n; ++b) {
      const auto s = to_fraction_string(p.resistance(a, b));
      row.push_back(s);
      cells.push_back(s);
      line += (b ? " " : "") + s;
    }
    rows.push_back(std::move(row));
    o.csv += csv_row(cells);
    o.text += line + "\n";
  }
  o.payload["n"] = p.n;
  o.payload["matrix"] = std::move(rows);
  return o;
}

Output cmd_forest(const ConstructionCode& code) {
  Output o;
  o.input = code_input(code);
  const auto p = resistance_profile(code);
  Json rows = Json::array();
  o.csv = matrix_header(p.n);
  for (std::size_t a = 0; a < p.n; ++a) {
    Json row = Json::array();
    std::vector<std::string> cells{std::to_string(a + 1)};
    for (std::size_t b = 0; b < p.n; ++b) {
      row.push_back(p.forest(a, b).get_str());
      cells.push_back(p.forest(a, b).get_str());
    }
    rows.push_back(std::move(row));
    o.csv += csv_row(cells);
  }
  o.csv += "tau," + p.tau.get_str() + "\n";
  o.text = o.csv;
  o.payload["n"] = p.n;
  o.payload["tau"] = p.tau.get_str();
  o.payload["forest"] = std::move(rows);
  return o;
}

// ---- access --------------------------------------------------------------

Output cmd_access(const ConstructionCode& code) {
  Output o;
  o.input = code_input(code);
  const auto p = resistance_profile(code);
  const auto degrees = degree_profile(code).degrees;
  const bool ordering_ok = verify_orderings(code, p).all_passed();
  Json mu = Json::array(), alpha = Json::array();
  o.csv = csv_row({"vertex", "degree", "mu", "alpha"});
  o.text = "K = " + rational_text(p.kemeny) + "\n";
  for (std::size_t v = 0; v < p.n; ++v) {
    mu.push_back(to_fraction_string(p.moment[v]));
    alpha.push_back(to_fraction_string(p.accessibility[v]));
    o.csv += csv_row({std::to_string(v + 1), std::to_string(degrees[v]), to_fraction_string(p.moment[v]),
                      to_fraction_string(p.accessibility[v])});
    o.text += std::to_string(v + 1) + ": d = " + std::to_string(degrees[v]) + ", mu = " +
              to_fraction_string(p.moment[v]) + ", alpha = " + rational_text(p.accessibility[v]) + "\n";
  }
  o.text += std::string("orderings: ") + (ordering_ok ? "ok" : "FAILED") + "\n";
  o.payload["kemeny"] = rational_json(p.kemeny);
  o.payload["mu"] = std::move(mu);
  o.payload["alpha"] = std::move(alpha);
  o.payload["degrees"] = degrees;
  o.payload["ordering_ok"] = ordering_ok;
  return o;
}

// ---- pineapple -----------------------------------------------------------

Output cmd_pineapple(std::size_t n, std::optional<std::size_t> r) {
  Output o;
  o.input["n"] = n;
  if (r) o.input["r"] = *r;
  std::vector<std::size_t> rs;
  if (r) {
    rs.push_back(*r);
  } else {
    if (n < 3) throw Error(ErrorKind::OrderTooSmall, "pineapple needs n >= 3");
    for (std::size_t x = 0; x + 2 <= n; ++x) rs.push_back(x);
  }
  Json rows = Json::array();
  o.csv = csv_row({"n", "r", "num", "den", "float"});
  for (auto x : rs) {
    const auto k = pineapple_kemeny(n, x);
    Json row{{"r", x}};
    row.update(rational_json(k));
    rows.push_back(std::move(row));
    o.csv += csv_row({std::to_string(n), std::to_string(x), k.get_num().get_str(), k.get_den().get_str(),
                      fmt(k.get_d())});
    o.text += "r = " + std::to_string(x) + ": K = " + rational_text(k) + "\n";
  }
  o.payload["n"] = n;
  o.payload["rows"] = std::move(rows);
  if (!r) {
    const auto arg = pineapple_argmax(n);
    o.payload["argmax"] = Json{{"r_star", arg.r_star},
                               {"tied", arg.tied_rs},
                               {"kemeny", rational_json(arg.k_star)},
                               {"predicted", std::vector<std::size_t>(arg.predicted.begin(), arg.predicted.end())}};
    std::string tied;
    for (auto x : arg.tied_rs) tied += (tied.empty() ? "" : ", ") + std::to_string(x);
    o.text += "argmax r: {" + tied + "}\n";
  }
  return o;
}

// ---- search --------------------------------------------------------------

Output cmd_search(std::size_t n, unsigned threads, const std::string& checkpoint, bool exact_only) {
  Output o;
  SearchOptions options;
  options.threads = threads;
  options.exact_only = exact_only;
  if (!checkpoint.empty()) {
    options.checkpoint = checkpoint;
  } else if (const char* dir = std::getenv("CHECKPOINT_DIR"); dir && *dir) {
    options.checkpoint = std::filesystem::path(dir) / ("search-n" + std::to_string(n) + ".ckpt");
  }
  o.input["n"] = n;
  o.input["exact"] = exact_only;
  const auto rep = max_kemeny_search(n, options);

  Json ties = Json::array();
  for (const auto& t : rep.ties) ties.push_back(t.str());
  o.payload["n"] = n;
  o.payload["argmax_code"] = rep.argmax.str();
  o.payload["argmax_blocks"] = render_blocks(rep.argmax);
  o.payload["kemeny"] = rational_json(rep.max_k);
  o.payload["is_pineapple"] = rep.is_pineapple;
  o.payload["r"] = rep.is_pineapple ? Json(rep.r) : Json(nullptr);
  o.payload["ties"] = std::move(ties);
  o.payload["codes_examined"] = rep.codes_examined;
  o.payload["asymptote"] = rep.asymptote;
  o.payload["remainder"] = rep.remainder;

  o.csv = csv_row({"n", "argmax_code", "k_num", "k_den", "k_float", "is_pineapple", "r", "seconds"}) +
          csv_row({std::to_string(n), rep.argmax.str(), rep.max_k.get_num().get_str(), rep.max_k.get_den().get_str(),
                   fmt(rep.max_k_float), rep.is_pineapple ? "true" : "false",
                   rep.is_pineapple ? std::to_string(rep.r) : "", fmt(rep.seconds)});
  o.text = "argmax: " + rep.argmax.str() + " (" + render_blocks(rep.argmax) + ")\nK = " + rational_text(rep.max_k) +
           "\npineapple: " + (rep.is_pineapple ? "yes, r = " + std::to_string(rep.r) : std::string("no")) +
           "\ncodes examined: " + std::to_string(rep.codes_examined) + "\nK - (n + sqrt(n)/2) = " +
           fmt(rep.remainder) + "\n";
  return o;
}

// ---- verify --------------------------------------------------------------

struct Check {
  std::string name;
  bool passed = true;
  std::optional<double> deviation;
  std::optional<std::size_t> comparisons;
  bool skipped = false;
};

std::vector<Check> suite_kemeny(const ConstructionCode& code) {
  std::vector<Check> out;
  const auto graph = build_graph(code);
  const Rational k = *kemeny_from_code(code).exact;
  const double kd = k.get_d();
  const Rational degree = *kemeny_degree_form(code).exact;
  const Rational direct = *kemeny_from_code_direct(code).exact;
  out.push_back({"codevec_vs_degree", degree == k, gap(degree, k), {}, false});
  out.push_back({"codevec_vs_direct", direct == k, gap(direct, k), {}, false});
  const double spectral = std::abs(kemeny_spectral_form(code).value - kd);
  out.push_back({"spectral_form", spectral < 1e-9, spectral, {}, false});
  const double eig = std::abs(kemeny_eigen_oracle(graph) - kd);
  out.push_back({"eigen_oracle", eig < 1e-8, eig, {}, false});
  const auto walk = mfpt_matrix(graph);
  double kappa = 0.0;
  for (double x : walk.kappa) kappa = std::max(kappa, std::abs(x - kd));
  out.push_back({"mfpt_row_sums", kappa < 1e-8, kappa, {}, false});
  const auto r = resistance_oracle(graph);
  double quad = 0.0;
  for (std::size_t a = 0; a < graph.n; ++a)
    for (std::size_t b = 0; b < graph.n; ++b)
      quad += static_cast<double>(graph.degree(a) * graph.degree(b)) * r[a * graph.n + b];
  const double rs = std::abs(quad / (4.0 * static_cast<double>(graph.edges.size())) - kd);
  out.push_back({"resistance_quadratic_form", rs < 1e-8, rs, {}, false});
  return out;
}

std::vector<Check> suite_resistance(const ConstructionCode& code) {
  std::vector<Check> out;
  const auto graph = build_graph(code);
  const auto p = resistance_profile(code);
  const auto pinv = pseudo_inverse(code);
  const std::size_t n = p.n;
  bool same = true;
  double exact_dev = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Rational r = a == b ? Rational(0) : Rational(pinv(a, a) + pinv(b, b) - 2 * pinv(a, b));
      if (r != p.resistance(a, b)) {
        same = false;
        exact_dev = std::max(exact_dev, gap(r, p.resistance(a, b)));
      }
    }
  out.push_back({"closed_form_vs_pseudo_inverse", same, exact_dev, {}, false});
  const auto rn = resistance_oracle(graph);
  double dev = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) dev = std::max(dev, std::abs(rn[a * n + b] - p.resistance(a, b).get_d()));
  out.push_back({"numeric_resistance", dev < 1e-8, dev, {}, false});
  const auto alpha = accessibility_oracle(graph);
  double adev = 0.0;
  for (std::size_t v = 0; v < n; ++v) adev = std::max(adev, std::abs(alpha[v] - p.accessibility[v].get_d()));
  out.push_back({"mfpt_accessibility", adev < 1e-8, adev, {}, false});
  const auto degrees = degree_profile(code);
  Rational weighted(0);
  for (std::size_t v = 0; v < n; ++v) weighted += p.accessibility[v] * degrees.degrees[v];
  weighted /= 2 * degrees.edges;
  out.push_back({"stationary_accessibility_sum", weighted == p.kemeny, gap(weighted, p.kemeny), {},
                 false});
  return out;
}

std::vector<Check> suite_forest(const ConstructionCode& code) {
  std::vector<Check> out;
  const auto graph = build_graph(code);
  const BigInt tau = spanning_tree_count(code);
  const BigInt det = spanning_tree_oracle(graph);
  out.push_back({"tau_vs_determinant", tau == det, std::abs(BigInt(tau - det).get_d()), {}, false});
  BigIntMatrix forest;
  bool integral = true;
  try {
    forest = forest_matrix(code);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonIntegralEntry) throw;
    integral = false;
  }
  out.push_back({"forest_integral", integral, {}, {}, false});
  if (graph.n > TwoForestCensus::max_order || !integral) {
    out.push_back({"forest_enumeration", true, {}, {}, true});
    return out;
  }
  const TwoForestCensus census(graph);
  Check c{"forest_enumeration", true, 0.0, 0, false};
  for (std::size_t a = 0; a < graph.n; ++a)
    for (std::size_t b = 0; b < graph.n; ++b) {
      if (a == b) continue;
      const BigInt counted = static_cast<unsigned long>(census.separating(a, b));
      ++*c.comparisons;
      if (counted != forest(a, b)) {
        c.passed = false;
        *c.deviation = std::max(*c.deviation, std::abs(BigInt(counted - forest(a, b)).get_d()));
      }
    }
  out.push_back(c);
  return out;
}

std::vector<Check> suite_ordering(const ConstructionCode& code) {
  std::vector<Check> out;
  const auto rep = verify_orderings(code);
  for (const auto& [name, check] : rep.entries()) out.push_back({name, check->passed, {}, check->comparisons, false});
  return out;
}

Output cmd_verify(const ConstructionCode& code, const std::string& suite) {
  Output o;
  o.input = code_input(code);
  o.input["suite"] = suite;
  require_connected(code);

  using Suite = std::vector<Check> (*)(const ConstructionCode&);
  std::vector<std::pair<std::string, Suite>> plan;
  if (suite == "kemeny" || suite == "all") plan.emplace_back("kemeny", suite_kemeny);
  if (suite == "resistance" || suite == "all") plan.emplace_back("resistance", suite_resistance);
  if (suite == "forest" || suite == "all") plan.emplace_back("forest", suite_forest);
  if (suite == "ordering" || suite == "all") plan.emplace_back("ordering", suite_ordering);

  std::vector<std::future<std::vector<Check>>> jobs;
  const auto policy = plan.size() > 1 ? std::launch::async : std::launch::deferred;
  for (const auto& [name, fn] : plan) jobs.push_back(std::async(policy, fn, std::cref(code)));

  bool all_passed = true;
  Json suites = Json::object();
  o.csv = csv_row({"suite", "check", "passed", "max_deviation", "comparisons"});
  for (std::size_t s = 0; s < plan.size(); ++s) {
    Json checks = Json::array();
    for (const auto& c : jobs[s].get()) {
      all_passed = all_passed && c.passed;
      Json j{{"name", c.name}, {"passed", c.passed}};
      j["max_deviation"] = c.deviation ? Json(*c.deviation) : Json(nullptr);
      if (c.comparisons) j["comparisons"] = *c.comparisons;
      if (c.skipped) j["skipped"] = true;
      checks.push_back(std::move(j));
      o.csv += csv_row({plan[s].first, c.name, c.passed ? "true" : "false", c.deviation ? fmt(*c.deviation) : "",
                        c.comparisons ? std::to_string(*c.comparisons) : ""});
      o.text += std::string(c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") + plan[s].first + "/" + c.name;
      if (c.deviation) o.text += "  max deviation " + fmt(*c.deviation);
      o.text += "\n";
    }
    suites[plan[s].first] = std::move(checks);
  }
  o.payload["passed"] = all_passed;
  o.payload["suites"] = std::move(suites);
  o.status = all_passed ? 0 : 1;
  return o;
}

// ---- enumerate -----------------------------------------------------------

Output cmd_enumerate(std::size_t n, bool with_kemeny) {
  Output o;
  o.input["n"] = n;
  o.input["kemeny"] = with_kemeny;
  if (n > 26) throw Error(ErrorKind::OrderOutOfRange, "enumeration output is limited to n <= 26");
  const auto range = enumerate_codes(n);
  Json codes = Json::array();
  o.csv = with_kemeny ? csv_row({"code", "blocks", "num", "den", "float"}) : csv_row({"code", "blocks"});
  for (const auto& code : range) {
    Json row{{"code", code.str()}, {"blocks", render_blocks(code)}};
    std::vector<std::string> cells{code.str(), render_blocks(code)};
    std::string line = code.str();
    if (with_kemeny) {
      const auto k = *kemeny_from_code(code).exact;
      row["kemeny"] = rational_json(k);
      cells.insert(cells.end(), {k.get_num().get_str(), k.get_den().get_str(), fmt(k.get_d())});
      line += "  " + rational_text(k);
    }
    codes.push_back(std::move(row));
    o.csv += csv_row(cells);
    o.text += line + "\n";
  }
  o.payload["n"] = n;
  o.payload["count"] = range.size();
  o.payload["codes"] = std::move(codes);
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact random-walk analytics for threshold graphs", "tkem"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, csv = false, quiet = false;
  auto* json_flag = app.add_flag("--json", json, "Emit one JSON object");
  auto* csv_flag = app.add_flag("--csv", csv, "Emit CSV with a header row");
  json_flag->excludes(csv_flag);
  app.add_flag("--quiet,-q", quiet, "Suppress standard output; rely on the exit code");

  std::string command;
  std::function<Output()> action;
  std::vector<std::string> tokens;
  auto code_arg = [&tokens](CLI::App* sub) {
    sub->add_option("code", tokens, "Construction code, as bits (0101) or blocks (0 1^2 0 1)")->required();
  };

  auto* compute = app.add_subcommand("compute", "Kemeny's constant and the upper bounds");
  code_arg(compute);
  std::string method = "codevec";
  compute->add_option("--method", method, "codevec, degree, spectral or all")
      ->check(CLI::IsMember({"all", "codevec", "degree", "spectral"}))
      ->capture_default_str();
  compute->callback([&] { action = [&] { return cmd_compute(code_from(tokens), method); }; });

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues in basis-column order and tau");
  code_arg(spectrum);
  spectrum->callback([&] { action = [&] { return cmd_spectrum(code_from(tokens)); }; });

  auto* resistance = app.add_subcommand("resistance", "Effective resistances");
  code_arg(resistance);
  std::vector<std::size_t> pair;
  auto* pair_opt = resistance->add_option("--pair", pair, "One pair j v (1-based)")->expected(2);
  resistance->add_flag("--matrix", "Full matrix (default)")->excludes(pair_opt);
  resistance->callback([&] { action = [&] { return cmd_resistance(code_from(tokens), pair); }; });

  auto* forest = app.add_subcommand("forest", "Spanning 2-forest counts tau * R");
  code_arg(forest);
  forest->callback([&] { action = [&] { return cmd_forest(code_from(tokens)); }; });

  auto* access = app.add_subcommand("access", "Moments and accessibility indices");
  code_arg(access);
  access->callback([&] { action = [&] { return cmd_access(code_from(tokens)); }; });

  auto* pineapple = app.add_subcommand("pineapple", "Kemeny's constant of the pineapple family");
  std::size_t pn = 0;
  std::optional<std::size_t> pr;
  pineapple->add_option("--n", pn, "Order")->required();
  auto* r_opt = pineapple->add_option("--r", pr, "Clique parameter");
  pineapple->add_flag("--sweep", "Every r with the maximizing set (default)")->excludes(r_opt);
  pineapple->callback([&] { action = [&] { return cmd_pineapple(pn, pr); }; });

  auto* search = app.add_subcommand("search", "Exhaustive maximization over all connected codes of order n");
  std::size_t sn = 0;
  unsigned threads = default_threads();
  std::string checkpoint;
  bool exact_only = false;
  search->add_option("--n", sn, "Order")->required();
  search->add_option("--threads", threads, "Worker threads (default: THREADS or hardware)")->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", checkpoint, "Progress file (default: $CHECKPOINT_DIR/search-nN.ckpt if set)");
  search->add_flag("--exact", exact_only, "Evaluate every code in exact arithmetic");
  search->callback([&] { action = [&] { return cmd_search(sn, threads, checkpoint, exact_only); }; });

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the brute-force oracles");
  code_arg(verify);
  std::string suite = "all";
  verify->add_option("--suite", suite, "kemeny, resistance, forest, ordering or all")
      ->check(CLI::IsMember({"kemeny", "resistance", "forest", "ordering", "all"}))
      ->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(code_from(tokens), suite); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List the connected codes of order n");
  std::size_t en = 0;
  bool with_kemeny = false;
  enumerate->add_option("--n", en, "Order")->required();
  enumerate->add_flag("--kemeny", with_kemeny, "Include Kemeny's constant");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(en, with_kemeny); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  const auto start = std::chrono::steady_clock::now();
  Output result;
  try {
    result = action();
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    if (json && !quiet) {
      Json envelope{{"schema_version", "1"},
                    {"command", command},
                    {"error", Json{{"kind", std::string(e.name())}, {"message", e.what()}}}};
      out << envelope.dump(2) << "\n";
    }
    return 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (quiet) return result.status;
  if (json) {
    Json envelope{{"schema_version", "1"},
                  {"command", command},
                  {"input", result.input},
                  {"payload", result.payload},
                  {"timing", Json{{"seconds", seconds}}}};
    out << envelope.dump(2) << "\n";
  } else if (csv) {
    out << result.csv;
  } else {
    out << result.text;
  }
  return result.status;
}

}  // namespace tkem
