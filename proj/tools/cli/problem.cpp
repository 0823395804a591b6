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

#include "problem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& raw, double& out) {
  const std::string s = trim(raw);
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

template <typename T>
bool parse_integer(const std::string& raw, T& out) {
  const std::string s = trim(raw);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) v = 0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_axis(const std::string& text, const std::string& flag) {
  const auto bad = [&] { return UsageError("malformed value for " + flag + ": '" + text + "'"); };
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    double lo = 0, hi = 0;
    size_t count = 0;
    if (parts.size() != 3 || !parse_number(parts[0], lo) || !parse_number(parts[1], hi) ||
        !parse_integer(parts[2], count) || count == 0) {
      throw bad();
    }
    if (count == 1 && lo != hi) throw bad();
    for (size_t i = 0; i < count; ++i) {
      values.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return values;
  }
  for (const auto& part : split(text, ',')) {
    double v = 0;
    if (!parse_number(part, v)) throw bad();
    values.push_back(v);
  }
  if (values.empty()) throw bad();
  return values;
}

std::vector<size_t> parse_count_axis(const std::string& text, const std::string& flag) {
  std::vector<size_t> out;
  for (double v : parse_axis(text, flag)) {
    if (v < 0 || v != std::floor(v) || v > 1e6) {
      throw UsageError(flag + " expects non-negative integers, got '" + text + "'");
    }
    out.push_back(static_cast<size_t>(v));
  }
  return out;
}

double parse_beta(const std::string& text) {
  const std::string s = trim(text);
  if (s == "inf" || s == "infinity" || s == "+inf") return std::numeric_limits<double>::infinity();
  double v = 0;
  if (!parse_number(s, v) || !(v > 0)) throw UsageError("--beta expects a positive number or 'inf'");
  return v;
}

std::vector<EdgeSpec> parse_edges(const std::string& text) {
  std::vector<EdgeSpec> edges;
  for (const auto& raw : split(text, ',')) {
    const std::string item = trim(raw);
    EdgeSpec e;
    const auto dash = item.find('-');
    const auto colon = item.find(':');
    const std::string u = item.substr(0, dash);
    const std::string v = dash == std::string::npos ? "" : item.substr(dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1);
    if (dash == std::string::npos || !parse_integer(u, e.u) || !parse_integer(v, e.v) ||
        (colon != std::string::npos && !parse_integer(item.substr(colon + 1), e.weight))) {
      throw UsageError("malformed edge '" + item + "' (expected u-v or u-v:w)");
    }
    edges.push_back(e);
  }
  return edges;
}

std::vector<EdgeSpec> read_graph_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<EdgeSpec> edges;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::istringstream fields(line);
    EdgeSpec e;
    if (!(fields >> e.u >> e.v)) throw RuntimeError(path + ":" + std::to_string(line_no) + ": expected 'u v [w]'");
    if (!(fields >> e.weight)) e.weight = 1;
    edges.push_back(e);
  }
  return edges;
}

Hamiltonian build_hamiltonian(const ProblemSpec& spec) {
  if (spec.model == "tfim") {
    return make<Hamiltonian>([&](auto** out) { return cliffinit_hamiltonian_tfim(spec.n, spec.J, spec.gx, spec.gz, out); });
  }
  if (spec.model == "maxcut") {
    std::vector<uint32_t> ends;
    std::vector<int64_t> weights;
    for (const auto& e : spec.edges) {
      ends.push_back(e.u);
      ends.push_back(e.v);
      weights.push_back(e.weight);
    }
    return make<Hamiltonian>([&](auto** out) {
      return cliffinit_hamiltonian_maxcut(spec.n, ends.data(), weights.data(), spec.edges.size(), out);
    });
  }
  return make<Hamiltonian>([&](auto** out) { return cliffinit_hamiltonian_load(spec.path.c_str(), out); });
}

Problem build_problem(const ProblemSpec& spec) {
  Problem p{build_hamiltonian(spec), nullptr};
  const size_t n = cliffinit_hamiltonian_num_qubits(p.hamiltonian.get());
  if (spec.ansatz == "real") {
    p.ansatz = make<Ansatz>([&](auto** out) { return cliffinit_ansatz_real(n, spec.depth, out); });
  } else if (spec.ansatz == "trotter") {
    p.ansatz = make<Ansatz>([&](auto** out) { return cliffinit_ansatz_trotter(n, spec.depth, out); });
  } else if (spec.ansatz == "qaoa") {
    p.ansatz = make<Ansatz>([&](auto** out) { return cliffinit_ansatz_qaoa(p.hamiltonian.get(), spec.depth, out); });
  } else {
    const std::string text = read_file(spec.custom_path);
    p.ansatz = make<Ansatz>([&](auto** out) { return cliffinit_ansatz_custom(text.c_str(), out); });
    if (cliffinit_ansatz_num_qubits(p.ansatz.get()) != n) {
      throw RuntimeError("custom ansatz acts on " + std::to_string(cliffinit_ansatz_num_qubits(p.ansatz.get())) +
                         " qubits but the Hamiltonian has " + std::to_string(n));
    }
  }
  return p;
}

Json problem_to_json(const ProblemSpec& spec) {
  Json h;
  h["model"] = spec.model;
  if (spec.model == "tfim") {
    h["n"] = spec.n;
    h["J"] = spec.J;
    h["gx"] = spec.gx;
    h["gz"] = spec.gz;
  } else if (spec.model == "maxcut") {
    h["n"] = spec.n;
    Json edges = Json::array();
    for (const auto& e : spec.edges) edges.push_back({e.u, e.v, e.weight});
    h["edges"] = edges;
  } else {
    h["path"] = spec.path;
  }
  Json a;
  a["family"] = spec.ansatz;
  if (spec.ansatz == "custom") {
    a["path"] = spec.custom_path;
  } else {
    a["depth"] = spec.depth;
  }
  return Json{{"hamiltonian", h}, {"ansatz", a}};
}

ProblemSpec problem_from_json(const Json& j) {
  ProblemSpec spec;
  const Json& h = j.at("hamiltonian");
  spec.model = h.at("model").get<std::string>();
  if (spec.model == "tfim") {
    spec.n = h.at("n").get<size_t>();
    spec.J = h.at("J").get<double>();
    spec.gx = h.at("gx").get<double>();
    spec.gz = h.at("gz").get<double>();
  } else if (spec.model == "maxcut") {
    spec.n = h.at("n").get<size_t>();
    for (const auto& e : h.at("edges")) {
      spec.edges.push_back({e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>(), e.at(2).get<int64_t>()});
    }
  } else if (spec.model == "file") {
    spec.path = h.at("path").get<std::string>();
  } else {
    throw RuntimeError("record has unknown Hamiltonian model '" + spec.model + "'");
  }
  const Json& a = j.at("ansatz");
  spec.ansatz = a.at("family").get<std::string>();
  if (spec.ansatz == "custom") {
    spec.custom_path = a.at("path").get<std::string>();
  } else if (spec.ansatz == "real" || spec.ansatz == "trotter" || spec.ansatz == "qaoa") {
    spec.depth = a.at("depth").get<size_t>();
  } else {
    throw RuntimeError("record has unknown ansatz family '" + spec.ansatz + "'");
  }
  return spec;
}

}  // namespace cli
