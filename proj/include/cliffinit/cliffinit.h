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

/* C interface to the cliffinit library.
 *
 * Objects are opaque handles created by a cliffinit_*_<constructor> call and
 * released with the matching *_free. Fallible calls return a
 * cliffinit_status; on failure cliffinit_last_error() describes the problem
 * (the message is thread-local and valid until the next failing call on the
 * same thread). Strings returned through char** are heap-allocated and must
 * be released with cliffinit_string_free.
 *
 * Handles are immutable after construction and may be shared between threads.
 */
#ifndef CLIFFINIT_CLIFFINIT_H_
#define CLIFFINIT_CLIFFINIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CLIFFINIT_API __declspec(dllexport)
#else
#define CLIFFINIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cliffinit_status {
  CLIFFINIT_OK = 0,
  CLIFFINIT_ERR_INVALID_ARGUMENT = 1,
  CLIFFINIT_ERR_PARSE = 2,
  CLIFFINIT_ERR_SIZE_MISMATCH = 3,
  CLIFFINIT_ERR_CAPACITY = 4,
  CLIFFINIT_ERR_IO = 5,
  CLIFFINIT_ERR_INTERNAL = 99
} cliffinit_status;

typedef enum cliffinit_family {
  CLIFFINIT_FAMILY_REAL = 0,
  CLIFFINIT_FAMILY_TROTTER = 1,
  CLIFFINIT_FAMILY_QAOA = 2,
  CLIFFINIT_FAMILY_CUSTOM = 3
} cliffinit_family;

typedef struct cliffinit_hamiltonian cliffinit_hamiltonian;
typedef struct cliffinit_ansatz cliffinit_ansatz;
typedef struct cliffinit_anneal_result cliffinit_anneal_result;

CLIFFINIT_API const char* cliffinit_version(void);
CLIFFINIT_API const char* cliffinit_last_error(void);
CLIFFINIT_API void cliffinit_string_free(char* s);

/* ---- Hamiltonians ------------------------------------------------------ */

CLIFFINIT_API cliffinit_status cliffinit_hamiltonian_parse(const char* text, cliffinit_hamiltonian** out);
/* Reads a Hamiltonian file, keeping its "# key=value" header lines. */
CLIFFINIT_API cliffinit_status cliffinit_hamiltonian_load(const char* path, cliffinit_hamiltonian** out);
CLIFFINIT_API cliffinit_status cliffinit_hamiltonian_tfim(size_t n, double J, double gx, double gz,
                                                          cliffinit_hamiltonian** out);
/* endpoints holds 2 * n_edges vertex indices; weights may be NULL for unit weights. */
CLIFFINIT_API cliffinit_status cliffinit_hamiltonian_maxcut(size_t n_vertices, const uint32_t* endpoints,
                                                            const int64_t* weights, size_t n_edges,
                                                            cliffinit_hamiltonian** out);
CLIFFINIT_API void cliffinit_hamiltonian_free(cliffinit_hamiltonian* h);

CLIFFINIT_API size_t cliffinit_hamiltonian_num_qubits(const cliffinit_hamiltonian* h);
CLIFFINIT_API size_t cliffinit_hamiltonian_num_terms(const cliffinit_hamiltonian* h);
CLIFFINIT_API size_t cliffinit_hamiltonian_num_non_identity_terms(const cliffinit_hamiltonian* h);
CLIFFINIT_API cliffinit_status cliffinit_hamiltonian_term(const cliffinit_hamiltonian* h, size_t index,
                                                          double* coefficient, char** letters);
CLIFFINIT_API cliffinit_status cliffinit_hamiltonian_to_text(const cliffinit_hamiltonian* h, char** text);
CLIFFINIT_API size_t cliffinit_hamiltonian_num_metadata(const cliffinit_hamiltonian* h);
/* key/value stay valid while h is alive. */
CLIFFINIT_API cliffinit_status cliffinit_hamiltonian_metadata(const cliffinit_hamiltonian* h, size_t index,
                                                              const char** key, const char** value);

/* ---- Ansatz circuits --------------------------------------------------- */

CLIFFINIT_API cliffinit_status cliffinit_ansatz_real(size_t n_qubits, size_t depth, cliffinit_ansatz** out);
CLIFFINIT_API cliffinit_status cliffinit_ansatz_trotter(size_t n_qubits, size_t depth, cliffinit_ansatz** out);
CLIFFINIT_API cliffinit_status cliffinit_ansatz_qaoa(const cliffinit_hamiltonian* h, size_t depth,
                                                     cliffinit_ansatz** out);
CLIFFINIT_API cliffinit_status cliffinit_ansatz_custom(const char* json, cliffinit_ansatz** out);
CLIFFINIT_API void cliffinit_ansatz_free(cliffinit_ansatz* a);

CLIFFINIT_API size_t cliffinit_ansatz_num_qubits(const cliffinit_ansatz* a);
CLIFFINIT_API size_t cliffinit_ansatz_num_params(const cliffinit_ansatz* a);
CLIFFINIT_API cliffinit_family cliffinit_ansatz_family(const cliffinit_ansatz* a);

/* Quarter-turn vectors: entry m in {0,1,2,3} is the angle m*pi/2. */
CLIFFINIT_API cliffinit_status cliffinit_compile_clifford(const cliffinit_ansatz* a, const uint8_t* q, size_t len,
                                                          char** gates);
CLIFFINIT_API cliffinit_status cliffinit_clifford_energy(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                                         const uint8_t* q, size_t len, double* energy);
CLIFFINIT_API cliffinit_status cliffinit_clifford_gradient(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                                           const uint8_t* q, size_t len, double* gradient,
                                                           size_t gradient_len);
CLIFFINIT_API cliffinit_status cliffinit_clifford_term_expectations(const cliffinit_ansatz* a,
                                                                    const cliffinit_hamiltonian* h,
                                                                    const uint8_t* q, size_t len, double* values,
                                                                    size_t values_len);

/* ---- Annealing --------------------------------------------------------- */

typedef struct cliffinit_anneal_config {
  uint64_t max_iterations;
  double beta; /* INFINITY for zero temperature */
  uint64_t reset_threshold_k;
  uint64_t seed;
  int record_trajectory;
} cliffinit_anneal_config;

typedef struct cliffinit_trajectory_entry {
  uint64_t iteration;
  double candidate_energy;
  int accepted;
  int reset;
  double best_so_far;
} cliffinit_trajectory_entry;

CLIFFINIT_API void cliffinit_anneal_config_init(cliffinit_anneal_config* cfg);
CLIFFINIT_API cliffinit_status cliffinit_anneal(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                                const cliffinit_anneal_config* cfg, cliffinit_anneal_result** out);
CLIFFINIT_API void cliffinit_anneal_result_free(cliffinit_anneal_result* r);

CLIFFINIT_API double cliffinit_anneal_result_best_energy(const cliffinit_anneal_result* r);
CLIFFINIT_API size_t cliffinit_anneal_result_num_params(const cliffinit_anneal_result* r);
CLIFFINIT_API cliffinit_status cliffinit_anneal_result_best_point(const cliffinit_anneal_result* r, uint8_t* q,
                                                                  size_t len);
CLIFFINIT_API uint64_t cliffinit_anneal_result_iterations(const cliffinit_anneal_result* r);
CLIFFINIT_API uint64_t cliffinit_anneal_result_resets(const cliffinit_anneal_result* r);
CLIFFINIT_API uint64_t cliffinit_anneal_result_evaluations(const cliffinit_anneal_result* r);
CLIFFINIT_API size_t cliffinit_anneal_result_trajectory_length(const cliffinit_anneal_result* r);
CLIFFINIT_API cliffinit_status cliffinit_anneal_result_trajectory_entry(const cliffinit_anneal_result* r,
                                                                        size_t index,
                                                                        cliffinit_trajectory_entry* entry);

/* ---- Dense oracles ----------------------------------------------------- */

CLIFFINIT_API size_t cliffinit_dense_qubit_cap(void);
CLIFFINIT_API cliffinit_status cliffinit_statevector_energy(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                                            const double* theta, size_t len, double* energy);
CLIFFINIT_API cliffinit_status cliffinit_exact_diagonalize(const cliffinit_hamiltonian* h, size_t n_lowest,
                                                           double* eigenvalues);
/* Per-term expectations in the exact ground state; energy may be NULL. */
CLIFFINIT_API cliffinit_status cliffinit_ground_term_expectations(const cliffinit_hamiltonian* h, double* energy,
                                                                  double* values, size_t values_len);

typedef struct cliffinit_spsa_config {
  size_t rounds;
  double a;         /* <= 0: calibrate from the initial gradient scale */
  double c;
  double stability; /* <= 0: rounds / 10 */
  double alpha;
  double gamma;
  uint64_t seed;
} cliffinit_spsa_config;

CLIFFINIT_API void cliffinit_spsa_config_init(cliffinit_spsa_config* cfg);
CLIFFINIT_API cliffinit_status cliffinit_spsa_refine(const cliffinit_ansatz* a, const cliffinit_hamiltonian* h,
                                                     const uint8_t* start, size_t len,
                                                     const cliffinit_spsa_config* cfg, double* theta,
                                                     size_t theta_len, double* energy, double* start_energy);

/* ---- Stabilizer counting ----------------------------------------------- */

/* Results are exact decimal strings. */
CLIFFINIT_API cliffinit_status cliffinit_stabilizer_total(size_t n, char** decimal);
CLIFFINIT_API cliffinit_status cliffinit_pauli_stabilized_count(size_t n, char** decimal);
CLIFFINIT_API cliffinit_status cliffinit_common_stabilizer_count(size_t n, char** decimal);
CLIFFINIT_API cliffinit_status cliffinit_nonzero_bound(const cliffinit_hamiltonian* h, char** numerator,
                                                       char** denominator);

#ifdef __cplusplus
}
#endif

#endif /* CLIFFINIT_CLIFFINIT_H_ */
