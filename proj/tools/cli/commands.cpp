// Copyright 2026 The cliffinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "pool.hpp"
#include "problem.hpp"
#include "run.hpp"
#include "svg.hpp"

namespace cli {
namespace {

namespace fs = std::filesystem;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeError("cannot write " + path);
  out << text;
  if (!out) throw RuntimeError("failed writing " + path);
}

template <typename T>
T single(const std::vector<T>& values, const std::string& flag) {
  if (values.size() != 1) throw UsageError(flag + " takes a single value for this command");
  return values.front();
}

// Everything about the problem except the numeric axes.
ProblemSpec base_spec(const Flags& f, bool require_source = true) {
  ProblemSpec spec;
  if (!f.model.empty() && !f.hamiltonian.empty()) throw UsageError("--model and --hamiltonian are mutually exclusive");
  if (f.model.empty() && f.hamiltonian.empty()) {
    if (require_source) throw UsageError("one of --model or --hamiltonian is required");
  } else if (!f.hamiltonian.empty()) {
    spec.model = "file";
    spec.path = f.hamiltonian;
  } else {
    spec.model = f.model;
  }
  if (spec.model == "tfim" && f.n.empty()) throw UsageError("--model tfim requires --n");
  if (spec.model == "maxcut") {
    if (f.edges.empty() == f.graph.empty()) throw UsageError("--model maxcut requires exactly one of --edges or --graph");
    spec.edges = f.edges.empty() ? read_graph_file(f.graph) : parse_edges(f.edges);
    size_t n = 0;
    for (const auto& e : spec.edges) n = std::max<size_t>(n, std::max(e.u, e.v) + size_t{1});
    spec.n = f.n.empty() ? n : single(parse_count_axis(f.n, "--n"), "--n");
  }
  if (f.ansatz.rfind("custom:", 0) == 0) {
    spec.ansatz = "custom";
    spec.custom_path = f.ansatz.substr(7);
    if (spec.custom_path.empty()) throw UsageError("--ansatz custom:<file> needs a file name");
  } else if (f.ansatz == "real" || f.ansatz == "trotter" || f.ansatz == "qaoa") {
    spec.ansatz = f.ansatz;
  } else {
    throw UsageError("--ansatz must be real, trotter, qaoa or custom:<file>");
  }
  return spec;
}

ProblemSpec single_spec(const Flags& f) {
  ProblemSpec spec = base_spec(f);
  if (spec.model == "tfim") {
    spec.n = single(parse_count_axis(f.n, "--n"), "--n");
    spec.J = single(parse_axis(f.J, "--J"), "--J");
    spec.gx = single(parse_axis(f.gx, "--gx"), "--gx");
    spec.gz = single(parse_axis(f.gz, "--gz"), "--gz");
  }
  spec.depth = single(parse_count_axis(f.depth, "--depth"), "--depth");
  return spec;
}

AnnealSettings settings_from(const Flags& f) {
  AnnealSettings s;
  s.iterations = f.iters;
  s.beta = parse_beta(f.beta);
  s.reset_k = f.reset_k;
  if (s.reset_k == 0) throw UsageError("--reset-k must be positive");
  return s;
}

RunOptions options_from(const Flags& f) {
  RunOptions o;
  o.trajectory = !f.trajectory.empty();
  if (f.spsa_given) o.spsa_rounds = f.spsa_rounds;
  o.exact = !f.no_exact;
  o.timing = f.timing;
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt_double(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

std::vector<std::string> expand_fixtures(const std::vector<std::string>& args) {
  std::vector<std::string> files;
  for (const auto& arg : args) {
    std::error_code ec;
    if (fs::is_directory(arg, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(arg)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ham") found.push_back(entry.path().string());
      }
      std::sort(found.begin(), found.end(), [](const std::string& a, const std::string& b) {
        const auto key = [](const std::string& p) {
          const std::string stem = fs::path(p).stem().string();
          const auto digit = stem.find_first_of("0123456789");
          char* end = nullptr;
          const double v = digit == std::string::npos ? 0 : std::strtod(stem.c_str() + digit, &end);
          return std::make_pair(v, p);
        };
        return key(a) < key(b);
      });
      if (found.empty()) throw UsageError("no .ham files in " + arg);
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(arg, ec)) {
      files.push_back(arg);
    } else {
      throw UsageError("fixture path not found: " + arg);
    }
  }
  return files;
}

double fixture_coordinate(const std::string& path, size_t index) {
  const std::string stem = fs::path(path).stem().string();
  const auto digit = stem.find_first_of("0123456789");
  if (digit != std::string::npos) {
    char* end = nullptr;
    const double v = std::strtod(stem.c_str() + digit, &end);
    if (end != stem.c_str() + digit) return v;
  }
  return static_cast<double>(index);
}

struct SweepPoint {
  ProblemSpec spec;
  std::optional<double> exact;
  std::optional<double> extrapolated;
};

// Least-squares line through the exact TFIM ground energies of the largest
// dense chains, evaluated at spec.n.
double extrapolate_tfim_ground(const ProblemSpec& spec) {
  const size_t cap = cliffinit_dense_qubit_cap();
  std::vector<double> xs, ys;
  for (size_t n = cap - 4; n <= cap; ++n) {
    ProblemSpec small = spec;
    small.n = n;
    xs.push_back(static_cast<double>(n));
    ys.push_back(*exact_ground_energy(build_hamiltonian(small).get()));
  }
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / k;
  return intercept + slope * static_cast<double>(spec.n);
}

struct SweepRow {
  size_t point = 0;
  uint64_t seed = 0;
  double best = 0;
  std::optional<double> refined;
  uint64_t evaluations = 0;
  size_t n_qubits = 0;
  size_t n_params = 0;
  std::string trajectory;
};

void write_sweep_svg(const Flags& f, const std::vector<SweepPoint>& points, const std::vector<SweepRow>& rows) {
  struct Axis {
    std::string name;
    std::function<double(size_t)> value;
  };
  std::vector<std::string> fixture_order;
  for (const auto& p : points) {
    if (std::find(fixture_order.begin(), fixture_order.end(), p.spec.path) == fixture_order.end()) {
      fixture_order.push_back(p.spec.path);
    }
  }
  std::vector<Axis> all = {
      {"n", [&](size_t i) { return static_cast<double>(points[i].spec.n); }},
      {"depth", [&](size_t i) { return static_cast<double>(points[i].spec.depth); }},
      {"J", [&](size_t i) { return points[i].spec.J; }},
      {"gx", [&](size_t i) { return points[i].spec.gx; }},
      {"gz", [&](size_t i) { return points[i].spec.gz; }},
  };
  std::vector<Axis> varying;
  for (auto& axis : all) {
    std::set<double> distinct;
    for (size_t i = 0; i < points.size(); ++i) distinct.insert(axis.value(i));
    if (distinct.size() > 1) varying.push_back(axis);
  }
  std::vector<double> best(points.size(), std::numeric_limits<double>::infinity());
  std::vector<double> refined(points.size(), std::numeric_limits<double>::infinity());
  for (const auto& r : rows) {
    best[r.point] = std::min(best[r.point], r.best);
    if (r.refined) refined[r.point] = std::min(refined[r.point], *r.refined);
  }
  const bool fixtures_vary = fixture_order.size() > 1;
  std::string svg;
  if (!fixtures_vary && varying.size() == 2) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < points.size(); ++i) {
      const double x = varying[0].value(i), y = varying[1].value(i);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
      if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
    }
    std::vector<std::vector<double>> grid(ys.size(), std::vector<double>(xs.size(), std::nan("")));
    for (size_t i = 0; i < points.size(); ++i) {
      const size_t ix = std::find(xs.begin(), xs.end(), varying[0].value(i)) - xs.begin();
      const size_t iy = std::find(ys.begin(), ys.end(), varying[1].value(i)) - ys.begin();
      grid[iy][ix] = best[i];
    }
    svg = heat_map_svg(xs, ys, grid, varying[0].name, varying[1].name);
  } else {
    std::string x_name = "point";
    std::function<double(size_t)> x_of = [](size_t i) { return static_cast<double>(i); };
    std::vector<Axis> keys = varying;
    if (fixtures_vary) {
      x_name = "fixture coordinate";
      x_of = [&](size_t i) {
        const auto it = std::find(fixture_order.begin(), fixture_order.end(), points[i].spec.path);
        return fixture_coordinate(points[i].spec.path, static_cast<size_t>(it - fixture_order.begin()));
      };
    } else if (!varying.empty()) {
      x_name = varying.front().name;
      x_of = varying.front().value;
      keys.erase(keys.begin());
    }
    std::map<std::string, std::vector<size_t>> groups;
    std::vector<std::string> group_order;
    for (size_t i = 0; i < points.size(); ++i) {
      std::string key;
      if (fixtures_vary) key = fs::path(points[i].spec.path).parent_path().filename().string();
      for (const auto& axis : keys) key += (key.empty() ? "" : " ") + axis.name + "=" + format_double(axis.value(i));
      if (!groups.count(key)) group_order.push_back(key);
      groups[key].push_back(i);
    }
    std::vector<Series> series;
    for (const auto& key : group_order) {
      const std::string suffix = key.empty() ? "" : " " + key;
      Series clifford{"clifford" + suffix, {}, {}}, exact{"exact" + suffix, {}, {}}, spsa{"spsa" + suffix, {}, {}};
      for (size_t i : groups[key]) {
        clifford.x.push_back(x_of(i));
        clifford.y.push_back(best[i]);
        if (points[i].exact) {
          exact.x.push_back(x_of(i));
          exact.y.push_back(*points[i].exact);
        }
        if (std::isfinite(refined[i])) {
          spsa.x.push_back(x_of(i));
          spsa.y.push_back(refined[i]);
        }
      }
      series.push_back(clifford);
      if (!exact.x.empty()) series.push_back(exact);
      if (!spsa.x.empty()) series.push_back(spsa);
    }
    svg = line_plot_svg(series, x_name, "energy");
  }
  emit(svg, f.svg);
}

}  // namespace

int cmd_anneal(const Flags& f) {
  const ProblemSpec spec = single_spec(f);
  const AnnealSettings settings = settings_from(f);
  const RunOptions options = options_from(f);
  if (f.seeds == 0) throw UsageError("--seeds must be at least 1");
  std::vector<RunOutcome> runs(f.seeds);
  // The exact ground energy is shared by every seed.
  std::optional<std::optional<double>> exact;
  if (options.exact) exact = exact_ground_energy(build_hamiltonian(spec).get());
  parallel_for(f.seeds, f.threads, [&](size_t i) { runs[i] = execute_run(spec, settings, f.seed + i, options, exact); });
  std::string out;
  std::string traj;
  for (size_t i = 0; i < runs.size(); ++i) {
    out += runs[i].record.dump() + "\n";
    for (const auto& e : runs[i].trajectory) traj += trajectory_line(f.seed + i, e) + "\n";
  }
  emit(out, f.out);
  if (!f.trajectory.empty()) emit(traj, f.trajectory);
  return 0;
}

int cmd_sweep(const Flags& f) {
  if (f.seeds == 0) throw UsageError("--seeds must be at least 1");
  std::vector<std::string> fixtures = expand_fixtures(f.fixtures);
  if (!fixtures.empty() && (!f.model.empty() || !f.hamiltonian.empty())) {
    throw UsageError("--fixtures cannot be combined with --model or --hamiltonian");
  }
  Flags base_flags = f;
  if (!fixtures.empty()) base_flags.hamiltonian = fixtures.front();
  const ProblemSpec base = base_spec(base_flags);
  if (fixtures.empty()) fixtures.push_back(base.path);
  const auto depths = parse_count_axis(f.depth, "--depth");
  const bool tfim = base.model == "tfim";
  const auto ns = tfim ? parse_count_axis(f.n, "--n") : std::vector<size_t>{base.n};
  const auto Js = tfim ? parse_axis(f.J, "--J") : std::vector<double>{base.J};
  const auto gxs = tfim ? parse_axis(f.gx, "--gx") : std::vector<double>{base.gx};
  const auto gzs = tfim ? parse_axis(f.gz, "--gz") : std::vector<double>{base.gz};
  const AnnealSettings settings = settings_from(f);
  RunOptions options = options_from(f);

  std::vector<SweepPoint> points;
  for (const auto& fixture : fixtures) {
    for (size_t n : ns) {
      for (size_t depth : depths) {
        for (double J : Js) {
          for (double gx : gxs) {
            for (double gz : gzs) {
              ProblemSpec spec = base;
              if (base.model == "file") spec.path = fixture;
              if (tfim) spec.n = n, spec.J = J, spec.gx = gx, spec.gz = gz;
              spec.depth = depth;
              points.push_back({spec, std::nullopt, std::nullopt});
            }
          }
        }
      }
    }
  }
  // Exact energies depend only on the Hamiltonian.
  if (options.exact) {
    std::map<std::string, std::optional<double>> cache;
    std::vector<std::string> keys(points.size());
    std::vector<size_t> unique;
    for (size_t i = 0; i < points.size(); ++i) {
      ProblemSpec h_only = points[i].spec;
      h_only.depth = 0;
      keys[i] = problem_to_json(h_only)["hamiltonian"].dump();
      if (!cache.count(keys[i])) {
        cache[keys[i]] = std::nullopt;
        unique.push_back(i);
      }
    }
    std::vector<std::optional<double>> values(unique.size());
    parallel_for(unique.size(), f.threads, [&](size_t u) {
      values[u] = exact_ground_energy(build_hamiltonian(points[unique[u]].spec).get());
    });
    for (size_t u = 0; u < unique.size(); ++u) cache[keys[unique[u]]] = values[u];
    for (size_t i = 0; i < points.size(); ++i) points[i].exact = cache[keys[i]];
  }

  if (f.extrapolate && tfim) {
    std::map<std::string, double> cache;
    for (auto& point : points) {
      if (point.spec.n <= cliffinit_dense_qubit_cap()) continue;
      ProblemSpec h_only = point.spec;
      h_only.depth = 0;
      const std::string key = problem_to_json(h_only)["hamiltonian"].dump();
      if (!cache.count(key)) cache[key] = extrapolate_tfim_ground(point.spec);
      point.extrapolated = cache[key];
    }
  }

  std::vector<SweepRow> rows(points.size() * f.seeds);
  parallel_for(rows.size(), f.threads, [&](size_t r) {
    SweepRow& row = rows[r];
    row.point = r / f.seeds;
    row.seed = f.seed + r;
    const SweepPoint& point = points[row.point];
    const RunOutcome run = execute_run(point.spec, settings, row.seed, options, point.exact);
    row.best = run.best_energy;
    if (run.refinement) row.refined = run.refinement->energy;
    row.evaluations = run.evaluations;
    row.n_qubits = run.record["n_qubits"].get<size_t>();
    row.n_params = run.best_point.size();
    for (const auto& e : run.trajectory) row.trajectory += trajectory_line(row.seed, e) + "\n";
  });

  std::ostringstream csv;
  csv << "row,seed,model,source,n_qubits,depth,J,gx,gz,ansatz,n_params,best_energy,exact_ground,refined_energy,"
         "evaluations"
      << (f.extrapolate ? ",extrapolated_ground\n" : "\n");
  for (size_t r = 0; r < rows.size(); ++r) {
    const SweepRow& row = rows[r];
    const SweepPoint& p = points[row.point];
    const bool field = p.spec.model == "tfim";
    csv << r << ',' << row.seed << ',' << p.spec.model << ',' << csv_field(p.spec.path) << ',' << row.n_qubits << ','
        << p.spec.depth << ',' << (field ? format_double(p.spec.J) : "") << ','
        << (field ? format_double(p.spec.gx) : "") << ',' << (field ? format_double(p.spec.gz) : "") << ','
        << csv_field(p.spec.ansatz == "custom" ? "custom:" + p.spec.custom_path : p.spec.ansatz) << ','
        << row.n_params << ',' << format_double(row.best) << ',' << opt_double(p.exact) << ','
        << opt_double(row.refined) << ',' << row.evaluations;
    if (f.extrapolate) csv << ',' << opt_double(p.extrapolated);
    csv << '\n';
  }
  emit(csv.str(), f.out);
  if (!f.trajectory.empty()) {
    std::string traj;
    for (const auto& row : rows) traj += row.trajectory;
    emit(traj, f.trajectory);
  }
  if (!f.svg.empty()) write_sweep_svg(f, points, rows);
  return 0;
}

int cmd_compare_terms(const Flags& f) {
  const ProblemSpec spec = single_spec(f);
  const Problem p = build_problem(spec);
  const size_t n = cliffinit_hamiltonian_num_qubits(p.hamiltonian.get());
  if (n > cliffinit_dense_qubit_cap()) {
    throw RuntimeError("compare-terms needs the exact ground state; " + std::to_string(n) +
                       " qubits exceeds the dense cap of " + std::to_string(cliffinit_dense_qubit_cap()));
  }
  RunOptions options;
  options.exact = false;
  const RunOutcome run = execute_run(spec, settings_from(f), f.seed, options);
  std::vector<double> coefficients;
  const auto letters = term_letters(p.hamiltonian.get(), &coefficients);
  std::vector<double> stabilizer(letters.size()), exact(letters.size());
  check(cliffinit_clifford_term_expectations(p.ansatz.get(), p.hamiltonian.get(), run.best_point.data(),
                                             run.best_point.size(), stabilizer.data(), stabilizer.size()));
  double ground = 0;
  check(cliffinit_ground_term_expectations(p.hamiltonian.get(), &ground, exact.data(), exact.size()));
  std::ostringstream csv;
  csv << "term_index,coefficient,pauli,stabilizer,exact\n";
  for (size_t i = 0; i < letters.size(); ++i) {
    csv << i << ',' << format_double(coefficients[i]) << ',' << letters[i] << ',' << format_double(stabilizer[i])
        << ',' << format_double(exact[i]) << '\n';
  }
  emit(csv.str(), f.out);
  return 0;
}

int cmd_count(const Flags& f) {
  const bool has_source = !f.model.empty() || !f.hamiltonian.empty();
  if (f.n.empty() && !has_source) throw UsageError("count requires --n or a Hamiltonian");
  Hamiltonian h;
  size_t n = 0;
  if (has_source) {
    ProblemSpec spec = base_spec(f);
    if (spec.model == "tfim") {
      spec.n = single(parse_count_axis(f.n, "--n"), "--n");
      spec.J = single(parse_axis(f.J, "--J"), "--J");
      spec.gx = single(parse_axis(f.gx, "--gx"), "--gx");
      spec.gz = single(parse_axis(f.gz, "--gz"), "--gz");
    }
    h = build_hamiltonian(spec);
    n = cliffinit_hamiltonian_num_qubits(h.get());
    if (!f.n.empty() && single(parse_count_axis(f.n, "--n"), "--n") != n) {
      throw UsageError("--n disagrees with the Hamiltonian's qubit count");
    }
  } else {
    n = single(parse_count_axis(f.n, "--n"), "--n");
  }
  const auto big = [](cliffinit_status (*fn)(size_t, char**), size_t k) {
    char* s = nullptr;
    check(fn(k, &s));
    return take_string(s);
  };
  Json report;
  report["n_qubits"] = n;
  report["total_states"] = big(cliffinit_stabilizer_total, n);
  report["per_pauli"] = n >= 1 ? Json(big(cliffinit_pauli_stabilized_count, n)) : Json(nullptr);
  report["common_pair"] = n >= 2 ? Json(big(cliffinit_common_stabilizer_count, n)) : Json(nullptr);
  if (h) {
    char* num = nullptr;
    char* den = nullptr;
    check(cliffinit_nonzero_bound(h.get(), &num, &den));
    report["term_count"] = cliffinit_hamiltonian_num_non_identity_terms(h.get());
    report["nonzero_bound"] = take_string(num) + "/" + take_string(den);
  } else {
    report["term_count"] = nullptr;
    report["nonzero_bound"] = nullptr;
  }
  emit(report.dump(2) + "\n", f.out);
  return 0;
}

int cmd_refine(const Flags& f) {
  if (!f.spsa_given) throw UsageError("refine requires --spsa-rounds");
  std::istringstream in(read_file(f.record));
  std::vector<Json> records;
  std::string line;
  std::string pending;
  while (std::getline(in, line)) {
    pending += line + "\n";
    if (!Json::accept(pending)) continue;
    records.push_back(Json::parse(pending));
    pending.clear();
  }
  if (pending.find_first_not_of(" \t\r\n") != std::string::npos) {
    throw RuntimeError(f.record + ": trailing content is not a valid RunRecord");
  }
  if (records.empty()) throw RuntimeError(f.record + " holds no RunRecords");
  std::vector<std::string> outputs(records.size());
  parallel_for(records.size(), f.threads, [&](size_t i) {
    Json record = records[i];
    try {
      const ProblemSpec spec = problem_from_json(record.at("config"));
      const Problem p = build_problem(spec);
      const auto point = record.at("best_point").get<std::vector<uint8_t>>();
      const uint64_t seed = f.seed_given ? f.seed : record.at("config").at("seed").get<uint64_t>();
      const Refinement r = refine(p, point, f.spsa_rounds, seed);
      record["spsa"] = Json{{"rounds", f.spsa_rounds},
                            {"seed", seed},
                            {"start_energy", r.start_energy},
                            {"refined_energy", r.energy},
                            {"theta", r.theta}};
    } catch (const Json::exception& e) {
      throw RuntimeError(f.record + ": malformed RunRecord (" + e.what() + ")");
    }
    outputs[i] = record.dump() + "\n";
  });
  std::string out;
  for (const auto& s : outputs) out += s;
  emit(out, f.out);
  return 0;
}

}  // namespace cli
