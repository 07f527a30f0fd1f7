// Copyright 2026 The ellnb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: params, bounds, exact, multiply, sweep.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ellnb/enb.hpp"
#include "ellnb/errors.hpp"
#include "ellnb/report_table.hpp"
#include "ellnb/serialize.hpp"
#include "ellnb/tensor.hpp"

namespace {

using ellnb::Error;
using ellnb::ErrorKind;
using ellnb::Json;

enum Exit { kOk = 0, kUsage = 1, kExhausted = 2, kConsistency = 3 };

struct RunConfig {
  std::optional<std::uint64_t> q, n;
  std::string overrides_path;
  std::string format = "json";
  std::uint64_t budget_curves = 1000000;
  std::uint64_t budget_points = 10000;
  std::uint64_t seed = 1;
  std::string out_path;
};

struct Resolved {
  std::uint64_t q = 0, n = 0;
  ellnb::OverridesFile file;
  ellnb::SearchConfig search;
};

Resolved resolve(const RunConfig& cfg) {
  Resolved r;
  if (!cfg.overrides_path.empty()) r.file = ellnb::load_overrides(cfg.overrides_path);
  const auto q = cfg.q ? cfg.q : r.file.q;
  const auto n = cfg.n ? cfg.n : r.file.n;
  if (!q || !n) ellnb::fail(ErrorKind::kInvalidArgument, "--q and --n are required");
  if (!ellnb::prime_power(*q)) ellnb::fail(ErrorKind::kInvalidArgument, "q must be a prime power");
  if (*n < 2) ellnb::fail(ErrorKind::kInvalidArgument, "n must be at least 2");
  if (r.file.q && *r.file.q != *q) ellnb::fail(ErrorKind::kInvalidArgument, "--q disagrees with overrides file");
  if (r.file.n && *r.file.n != *n) ellnb::fail(ErrorKind::kInvalidArgument, "--n disagrees with overrides file");
  if (cfg.budget_curves == 0 || cfg.budget_points == 0) {
    ellnb::fail(ErrorKind::kInvalidArgument, "budgets must be positive");
  }
  r.q = *q;
  r.n = *n;
  r.search.budget_curves = cfg.budget_curves;
  r.search.budget_points = cfg.budget_points;
  return r;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) ellnb::fail(ErrorKind::kInvalidArgument, "cannot write " + cfg.out_path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void cmd_params(const RunConfig& cfg) {
  const Resolved r = resolve(cfg);
  const ellnb::EnbParams p = ellnb::params_computation(r.q, r.n, r.file.overrides, r.search);
  emit(cfg, cfg.format == "table" ? ellnb::render_params_table(p) : dump(ellnb::to_json(p)));
}

void cmd_report(const RunConfig& cfg, bool exact) {
  const Resolved r = resolve(cfg);
  const ellnb::EnbParams p = ellnb::params_computation(r.q, r.n, r.file.overrides, r.search);
  const ellnb::ComplexityReport rep = exact ? ellnb::exact_complexity(p) : ellnb::bounds_report(p);
  const auto disc = ellnb::compare_expected(r.file.expected, rep, p);
  if (cfg.format == "table") {
    std::string text = ellnb::render_table(rep, p);
    for (const auto& d : disc) {
      text += "note: " + d.quantity + " computed " + d.computed.dump() + ", expected " +
              d.expected.dump() + "\n";
    }
    emit(cfg, text);
    return;
  }
  Json j = ellnb::to_json(rep, p);
  if (!exact) {
    j.erase("exact");
    j.erase("iota");
  }
  j["discrepancies"] = ellnb::to_json(disc);
  emit(cfg, dump(j));
}

ellnb::CyclicVector parse_vector(const std::string& text, const ellnb::FieldPtr& fq, std::size_t n) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception&) {
    ellnb::fail(ErrorKind::kInvalidArgument, "vector must be a JSON array: " + text);
  }
  if (!j.is_array()) ellnb::fail(ErrorKind::kInvalidArgument, "vector must be a JSON array");
  if (j.size() != n) {
    ellnb::fail(ErrorKind::kLengthMismatch,
                "vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
  }
  std::vector<ellnb::Element> v;
  for (const auto& e : j) v.push_back(ellnb::element_from_raw(fq, ellnb::raw_element_from_json(e)));
  return ellnb::CyclicVector(fq, std::move(v));
}

void cmd_multiply(const RunConfig& cfg, const std::string& xs, const std::string& ys, int random_pairs) {
  const Resolved r = resolve(cfg);
  const ellnb::EnbParams p = ellnb::params_computation(r.q, r.n, r.file.overrides, r.search);
  const ellnb::SpecialVectors sv = ellnb::special_vectors(p);
  std::vector<std::pair<ellnb::CyclicVector, ellnb::CyclicVector>> pairs;
  if (!xs.empty() || !ys.empty()) {
    if (xs.empty() || ys.empty()) ellnb::fail(ErrorKind::kInvalidArgument, "--x and --y go together");
    pairs.emplace_back(parse_vector(xs, p.fq, p.n), parse_vector(ys, p.fq, p.n));
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, *p.fq->order() - 1);
  auto random_vector = [&] {
    std::vector<ellnb::Element> v;
    for (std::uint64_t i = 0; i < p.n; ++i) v.push_back(p.fq->from_index(dist(rng)));
    return ellnb::CyclicVector(p.fq, std::move(v));
  };
  for (int i = 0; i < random_pairs; ++i) {
    auto x = random_vector();
    auto y = random_vector();
    pairs.emplace_back(std::move(x), std::move(y));
  }
  if (pairs.empty()) ellnb::fail(ErrorKind::kInvalidArgument, "give --x/--y or --random");

  Json results = Json::array();
  std::string table;
  for (const auto& [x, y] : pairs) {
    const ellnb::CyclicVector prod = ellnb::tensor_multiply(x, y, sv, p.scalar_a);
    const bool verified = ellnb::uncoords(prod, p) == ellnb::uncoords(x, p) * ellnb::uncoords(y, p);
    if (!verified) {
      ellnb::fail(ErrorKind::kConsistencyFailure, "tensor product disagrees with field multiplication");
    }
    results.push_back({{"x", ellnb::to_json(x)},
                       {"y", ellnb::to_json(y)},
                       {"product", ellnb::to_json(prod)},
                       {"verified", verified}});
    table += x.to_string() + " * " + y.to_string() + " = " + prod.to_string() + "  verified\n";
  }
  if (cfg.format == "table") {
    emit(cfg, table);
  } else {
    emit(cfg, dump(results.size() == 1 ? results[0] : results));
  }
}

std::uint64_t hasse_upper(std::uint64_t q) {
  std::uint64_t s = 0;
  while ((s + 1) * (s + 1) <= 4 * q) ++s;
  return q + 1 + s;
}

std::string csv_element(const ellnb::Element& e) {
  return std::to_string(*e.index());
}

void cmd_sweep(const RunConfig& cfg, const std::vector<std::uint64_t>& qs, const std::vector<std::uint64_t>& ns,
               unsigned threads) {
  ellnb::SearchConfig search;
  search.budget_curves = cfg.budget_curves;
  search.budget_points = cfg.budget_points;
  if (search.budget_curves == 0 || search.budget_points == 0) {
    ellnb::fail(ErrorKind::kInvalidArgument, "budgets must be positive");
  }
  struct Task {
    std::uint64_t q, n;
    std::string row;
    std::string error;
    bool consistency = false;
  };
  std::vector<Task> tasks;
  for (auto q : qs) {
    if (!ellnb::prime_power(q)) ellnb::fail(ErrorKind::kInvalidArgument, "q must be a prime power");
    if (!ns.empty()) {
      for (auto n : ns) tasks.push_back({q, n, {}, {}, false});
    } else {
      for (std::uint64_t n = 2; 2 * n <= hasse_upper(q); ++n) tasks.push_back({q, n, {}, {}, false});
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Task& t = tasks[i];
      try {
        const ellnb::EnbParams p = ellnb::params_computation(t.q, t.n, {}, search);
        const ellnb::ComplexityReport rep = ellnb::exact_complexity(p);
        std::ostringstream os;
        os << t.q << "," << t.n;
        for (const auto& c : p.curve.coeffs()) os << "," << csv_element(c);
        os << "," << csv_element(p.t.x()) << "," << csv_element(p.t.y()) << "," << csv_element(p.R.x())
           << "," << csv_element(p.R.y()) << "," << rep.lower << "," << rep.upper << "," << rep.exact
           << "," << rep.middle_sum << "\n";
        t.row = os.str();
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::kConsistencyFailure) {
          t.consistency = true;
          t.error = err.what();
        } else if (err.kind() != ErrorKind::kParameterSearchExhausted) {
          t.error = err.what();
        }
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::string csv = "q,n,a1,a2,a3,a4,a6,tx,ty,Rx,Ry,lower,upper,exact,middle_sum\n";
  for (const auto& t : tasks) {
    if (t.consistency) ellnb::fail(ErrorKind::kConsistencyFailure, t.error);
    if (!t.error.empty()) std::cerr << "q=" << t.q << " n=" << t.n << ": " << t.error << "\n";
    csv += t.row;
  }
  emit(cfg, csv);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_qn) {
  if (needs_qn) {
    sub->add_option("--q", cfg.q, "Base field order (prime power)");
    sub->add_option("--n", cfg.n, "Extension degree");
    sub->add_option("--overrides", cfg.overrides_path, "Parameter overrides (JSON)")->check(CLI::ExistingFile);
  }
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--budget-curves", cfg.budget_curves, "Maximum number of curves tried");
  sub->add_option("--budget-points", cfg.budget_points, "Maximum number of points a tried per curve");
  sub->add_option("--seed", cfg.seed, "Seed for random inputs");
  sub->add_option("--out", cfg.out_path, "Write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic normal bases: parameters, special vectors and complexity"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* params = app.add_subcommand("params", "Compute a full parameter set");
  add_common(params, cfg, true);
  auto* bounds = app.add_subcommand("bounds", "Special vectors and complexity bounds");
  add_common(bounds, cfg, true);
  auto* exact = app.add_subcommand("exact", "Full report including rows and exact complexity");
  add_common(exact, cfg, true);

  auto* multiply = app.add_subcommand("multiply", "Multiply coordinate vectors with the tensor formula");
  add_common(multiply, cfg, true);
  std::string xs, ys;
  int random_pairs = 0;
  multiply->add_option("--x", xs, "Coordinates of x (JSON array)");
  multiply->add_option("--y", ys, "Coordinates of y (JSON array)");
  multiply->add_option("--random", random_pairs, "Number of random pairs")->check(CLI::NonNegativeNumber);

  auto* sweep = app.add_subcommand("sweep", "CSV of parameter sets over several (q, n)");
  add_common(sweep, cfg, false);
  std::vector<std::uint64_t> qs{7, 11, 13};
  std::vector<std::uint64_t> ns;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  sweep->add_option("--qs", qs, "Base field orders")->delimiter(',');
  sweep->add_option("--ns", ns, "Extension degrees (default: every n with 2n in the Hasse range)")
      ->delimiter(',');
  sweep->add_option("--threads", threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*params) cmd_params(cfg);
    if (*bounds) cmd_report(cfg, false);
    if (*exact) cmd_report(cfg, true);
    if (*multiply) cmd_multiply(cfg, xs, ys, random_pairs);
    if (*sweep) cmd_sweep(cfg, qs, ns, threads);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kParameterSearchExhausted:
        return kExhausted;
      case ErrorKind::kConsistencyFailure:
        return kConsistency;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
