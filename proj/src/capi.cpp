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

#include "cliffinit/cliffinit.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "cliffinit/anneal.hpp"
#include "cliffinit/ansatz.hpp"
#include "cliffinit/counting.hpp"
#include "cliffinit/error.hpp"
#include "cliffinit/models.hpp"
#include "cliffinit/oracle.hpp"
#include "cliffinit/pauli.hpp"

struct cliffinit_hamiltonian {
  cliffinit::Hamiltonian value;
  std::vector<std::pair<std::string, std::string>> metadata;
};

struct cliffinit_ansatz {
  cliffinit::Ansatz value;
};

struct cliffinit_anneal_result {
  cliffinit::AnnealResult value;
};

namespace {

thread_local std::string g_last_error;

cliffinit_status record(cliffinit_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename F>
cliffinit_status guarded(F&& body) {
  try {
    body();
    return CLIFFINIT_OK;
  } catch (const cliffinit::Error& e) {
    return record(static_cast<cliffinit_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(CLIFFINIT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(CLIFFINIT_ERR_INTERNAL, e.what());
  }
}

template <typename... Ptrs>
void require(Ptrs... ptrs) {
  if (((ptrs == nullptr) || ...)) cliffinit::fail(cliffinit::ErrorCode::kInvalidArgument, "null argument");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cliffinit::QuarterTurns point(const uint8_t* q, size_t len) {
  if (len > 0) require(q);
  return cliffinit::QuarterTurns(std::vector<std::uint8_t>(q, q + len));
}

void require_len(size_t got, size_t want, const char* what) {
  if (got != want) {
    cliffinit::fail(cliffinit::ErrorCode::kSizeMismatch, std::string(what) + " buffer has " + std::to_string(got) +
                                                             " entries, expected " + std::to_string(want));
  }
}

cliffinit_status make_ansatz(cliffinit_ansatz** out, auto&& build) {
  return guarded([&] {
    require(out);
    *out = new cliffinit_ansatz{build()};
  });
}

}  // namespace

extern "C" {

const char* cliffinit_version(void) { return "1.0.0"; }

const char* cliffinit_last_error(void) { return g_last_error.c_str(); }

void cliffinit_string_free(char* s) { std::free(s); }

cliffinit_status cliffinit_hamiltonian_parse(const char* text, cliffinit_hamiltonian** out) {
  return guarded([&] {
    require(text, out);
    *out = new cliffinit_hamiltonian{cliffinit::parse_hamiltonian(std::string_view(text)), {}};
  });
}

cliffinit_status cliffinit_hamiltonian_load(const char* path, cliffinit_hamiltonian** out) {
  return guarded([&] {
    require(path, out);
    auto fixture = cliffinit::load_chemistry_fixture(path);
    *out = new cliffinit_hamiltonian{std::move(fixture.hamiltonian), std::move(fixture.metadata)};
  });
}

cliffinit_status cliffinit_hamiltonian_tfim(size_t n, double J, double gx, double gz, cliffinit_hamiltonian** out) {
  return guarded([&] {
    require(out);
    *out = new cliffinit_hamiltonian{cliffinit::tfim_hamiltonian({n, J, gx, gz}), {}};
  });
}

cliffinit_status cliffinit_hamiltonian_maxcut(size_t n_vertices, const uint32_t* endpoints, const int64_t* weights,
                                              size_t n_edges, cliffinit_hamiltonian** out) {
  return guarded([&] {
    require(out);
    if (n_edges > 0) require(endpoints);
    cliffinit::Graph g{n_vertices, {}};
    for (size_t e = 0; e < n_edges; ++e) {
      g.edges.push_back({endpoints[2 * e], endpoints[2 * e + 1], weights ? weights[e] : 1});
    }
    *out = new cliffinit_hamiltonian{cliffinit::maxcut_hamiltonian(g), {}};
  });
}

void cliffinit_hamiltonian_free(cliffinit_hamiltonian* h) { delete h; }

size_t cliffinit_hamiltonian_num_qubits(const cliffinit_hamiltonian* h) { return h ? h->value.num_qubits() : 0; }

size_t cliffinit_hamiltonian_num_terms(const cliffinit_hamiltonian* h) { return h ? h->value.num_terms() : 0; }

size_t cliffinit_hamiltonian_num_non_identity_terms(const cliffinit_hamiltonian* h) {
  return h ? h->value.num_non_identity_terms() : 0;
}

cliffinit_status cliffinit_hamiltonian_term(const cliffinit_hamiltonian* h, size_t index, double* coefficient,
                                            char** letters) {
  return guarded([&] {
    require(h);
    if (index >= h->value.num_terms()) cliffinit::fail(cliffinit::ErrorCode::kInvalidArgument, "term index out of range");
    const auto& term = h->value.term(index);
    if (coefficient) *coefficient = term.coefficient;
    if (letters) *letters = dup_string(term.pauli.letters());
  });
}

cliffinit_status cliffinit_hamiltonian_to_text(const cliffinit_hamiltonian* h, char** text) {
  return guarded([&] {
    require(h, text);
    *text = dup_string(h->value.to_text());
  });
}

size_t cliffinit_hamiltonian_num_metadata(const cliffinit_hamiltonian* h) { return h ? h->metadata.size() : 0; }

cliffinit_status cliffinit_hamiltonian_metadata(const cliffinit_hamiltonian* h, size_t index, const char** key,
                                                const char** value) {
  return guarded([&] {
    require(h, key, value);
    if (index >= h->metadata.size()) cliffinit::fail(cliffinit::ErrorCode::kInvalidArgument, "metadata index out of range");
    *key = h->metadata[index].first.c_str();
    *value = h->metadata[index].second.c_str();
  });
}

cliffinit_status cliffinit_ansatz_real(size_t n_qubits, size_t depth, cliffinit_ansatz** out) {
  return make_ansatz(out, [&] { return cliffinit::build_real_ansatz(n_qubits, depth); });
}

cliffinit_status cliffinit_ansatz_trotter(size_t n_qubits, size_t depth, cliffinit_ansatz** out) {
  return make_ansatz(out, [&] { return cliffinit::build_trotter_ansatz(n_qubits, depth); });
}

cliffinit_status cliffinit_ansatz_qaoa(const cliffinit_hamiltonian* h, size_t depth, cliffinit_ansatz** out) {
  return make_ansatz(out, [&] {
    require(h);
    return cliffinit::build_qaoa_ansatz(h->value, depth);
  });
}

cliffinit_status cliffinit_ansatz_custom(const char* json, cliffinit_ansatz** out) {
  return make_ansatz(out, [&] {
    require(json);
    return cliffinit::parse_custom_ansatz(json);
  });
}

void cliffinit_ansatz_free(cliffinit_ansatz* a) { delete a; }

size_t cliffinit_ansatz_num_qubits(const cliffinit_ansatz* a) { return a ? a->value.num_qubits() : 0; }

size_t cliffinit_ansatz_num_params(const cliffinit_ansatz* a) { return a ? a->value.num_params() : 0; }

cliffinit_family cliffinit_ansatz_family(const cliffinit_ansatz* a) {
  return a ? static_cast<cliffinit_family>(a->value.family()) : CLIFFINIT_FAMILY_CUSTOM;
}

cliffinit_status cliffinit_compile_clifford(const cliffinit_ansatz* a, const uint8_t* q, size_t len, char** gates) {
  return guarded([&] {
    require(a, gates);
    std::string text;
    for (const auto& g : cliffinit::compile_clifford(a->value, point(q, len))) text += cliffinit::to_string(g) + '\n';
    *gates = dup_string(text);
  });
}

cliffinit_status cliffinit_clifford_energy(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                           const uint8_t* q, size_t len, double* energy) {
  return guarded([&] {
    require(a, h, energy);
    *energy = cliffinit::clifford_energy(a->value, point(q, len), h->value);
  });
}

cliffinit_status cliffinit_clifford_gradient(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                             const uint8_t* q, size_t len, double* gradient, size_t gradient_len) {
  return guarded([&] {
    require(a, h, gradient);
    require_len(gradient_len, a->value.num_params(), "gradient");
    const auto g = cliffinit::clifford_gradient(a->value, point(q, len), h->value);
    std::copy(g.begin(), g.end(), gradient);
  });
}

cliffinit_status cliffinit_clifford_term_expectations(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                                      const uint8_t* q, size_t len, double* values,
                                                      size_t values_len) {
  return guarded([&] {
    require(a, h, values);
    require_len(values_len, h->value.num_terms(), "expectation");
    cliffinit::Tableau t(a->value.num_qubits());
    t.apply_all(cliffinit::compile_clifford(a->value, point(q, len)));
    const auto e = cliffinit::term_expectations(t, h->value);
    std::copy(e.begin(), e.end(), values);
  });
}

void cliffinit_anneal_config_init(cliffinit_anneal_config* cfg) {
  if (!cfg) return;
  const cliffinit::AnnealConfig d;
  *cfg = {d.max_iterations, d.beta, d.reset_threshold_k, d.seed, d.record_trajectory ? 1 : 0};
}

cliffinit_status cliffinit_anneal(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                  const cliffinit_anneal_config* cfg, cliffinit_anneal_result** out) {
  return guarded([&] {
    require(a, h, cfg, out);
    const cliffinit::AnnealConfig config{cfg->max_iterations, cfg->beta, cfg->reset_threshold_k, cfg->seed,
                                         cfg->record_trajectory != 0};
    *out = new cliffinit_anneal_result{cliffinit::anneal_run(a->value, h->value, config)};
  });
}

void cliffinit_anneal_result_free(cliffinit_anneal_result* r) { delete r; }

double cliffinit_anneal_result_best_energy(const cliffinit_anneal_result* r) {
  return r ? r->value.best_energy : std::numeric_limits<double>::quiet_NaN();
}

size_t cliffinit_anneal_result_num_params(const cliffinit_anneal_result* r) {
  return r ? r->value.best_point.size() : 0;
}

cliffinit_status cliffinit_anneal_result_best_point(const cliffinit_anneal_result* r, uint8_t* q, size_t len) {
  return guarded([&] {
    require(r, q);
    require_len(len, r->value.best_point.size(), "best point");
    const auto v = r->value.best_point.values();
    std::copy(v.begin(), v.end(), q);
  });
}

uint64_t cliffinit_anneal_result_iterations(const cliffinit_anneal_result* r) { return r ? r->value.iterations_run : 0; }

uint64_t cliffinit_anneal_result_resets(const cliffinit_anneal_result* r) { return r ? r->value.n_resets : 0; }

uint64_t cliffinit_anneal_result_evaluations(const cliffinit_anneal_result* r) {
  return r ? r->value.n_evaluations : 0;
}

size_t cliffinit_anneal_result_trajectory_length(const cliffinit_anneal_result* r) {
  return r ? r->value.trajectory.size() : 0;
}

cliffinit_status cliffinit_anneal_result_trajectory_entry(const cliffinit_anneal_result* r, size_t index,
                                                          cliffinit_trajectory_entry* entry) {
  return guarded([&] {
    require(r, entry);
    if (index >= r->value.trajectory.size()) {
      cliffinit::fail(cliffinit::ErrorCode::kInvalidArgument, "trajectory index out of range");
    }
    const auto& t = r->value.trajectory[index];
    *entry = {t.iteration, t.candidate_energy, t.accepted ? 1 : 0, t.reset ? 1 : 0, t.best_so_far};
  });
}

size_t cliffinit_dense_qubit_cap(void) { return cliffinit::kDenseQubitCap; }

cliffinit_status cliffinit_statevector_energy(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                              const double* theta, size_t len, double* energy) {
  return guarded([&] {
    require(a, h, energy);
    if (len > 0) require(theta);
    *energy = cliffinit::exact_energy(cliffinit::simulate_statevector(a->value, std::span(theta, len)), h->value);
  });
}

cliffinit_status cliffinit_exact_diagonalize(const cliffinit_hamiltonian* h, size_t n_lowest, double* eigenvalues) {
  return guarded([&] {
    require(h, eigenvalues);
    const auto values = cliffinit::exact_diagonalize(h->value, n_lowest);
    std::copy(values.begin(), values.end(), eigenvalues);
  });
}

cliffinit_status cliffinit_ground_term_expectations(const cliffinit_hamiltonian* h, double* energy, double* values,
                                                    size_t values_len) {
  return guarded([&] {
    require(h, values);
    require_len(values_len, h->value.num_terms(), "expectation");
    const auto ground = cliffinit::exact_ground_state(h->value);
    const auto e = cliffinit::term_expectations(ground.state, h->value);
    std::copy(e.begin(), e.end(), values);
    if (energy) *energy = ground.energy;
  });
}

void cliffinit_spsa_config_init(cliffinit_spsa_config* cfg) {
  if (!cfg) return;
  const cliffinit::SpsaConfig d;
  *cfg = {d.rounds, 0.0, d.c, 0.0, d.alpha, d.gamma, d.seed};
}

cliffinit_status cliffinit_spsa_refine(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                       const uint8_t* start, size_t len, const cliffinit_spsa_config* cfg,
                                       double* theta, size_t theta_len, double* energy, double* start_energy) {
  return guarded([&] {
    require(a, h, cfg, energy);
    cliffinit::SpsaConfig config;
    config.rounds = cfg->rounds;
    if (cfg->a > 0) config.a = cfg->a;
    config.c = cfg->c;
    if (cfg->stability > 0) config.stability = cfg->stability;
    config.alpha = cfg->alpha;
    config.gamma = cfg->gamma;
    config.seed = cfg->seed;
    const auto result = cliffinit::spsa_refine(a->value, point(start, len), h->value, config);
    if (theta) {
      require_len(theta_len, result.theta.size(), "theta");
      std::copy(result.theta.begin(), result.theta.end(), theta);
    }
    *energy = result.energy;
    if (start_energy) *start_energy = result.start_energy;
  });
}

cliffinit_status cliffinit_stabilizer_total(size_t n, char** decimal) {
  return guarded([&] {
    require(decimal);
    *decimal = dup_string(cliffinit::stabilizer_total(n).str());
  });
}

cliffinit_status cliffinit_pauli_stabilized_count(size_t n, char** decimal) {
  return guarded([&] {
    require(decimal);
    *decimal = dup_string(cliffinit::pauli_stabilized_count(n).str());
  });
}

cliffinit_status cliffinit_common_stabilizer_count(size_t n, char** decimal) {
  return guarded([&] {
    require(decimal);
    *decimal = dup_string(cliffinit::common_stabilizer_count(n).str());
  });
}

cliffinit_status cliffinit_nonzero_bound(const cliffinit_hamiltonian* h, char** numerator, char** denominator) {
  return guarded([&] {
    require(h, numerator, denominator);
    const auto bound = cliffinit::nonzero_bound(h->value);
    char* num = dup_string(boost::multiprecision::numerator(bound).str());
    try {
      *denominator = dup_string(boost::multiprecision::denominator(bound).str());
    } catch (...) {
      std::free(num);
      throw;
    }
    *numerator = num;
  });
}

}  // extern "C"
