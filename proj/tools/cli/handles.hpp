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

#ifndef CLIFFINIT_TOOLS_CLI_HANDLES_HPP_
#define CLIFFINIT_TOOLS_CLI_HANDLES_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffinit/cliffinit.h"

namespace cli {

// Failure reported by the library; maps to exit code 1.
class RuntimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flags or malformed specs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check(cliffinit_status status) {
  if (status != CLIFFINIT_OK) throw RuntimeError(cliffinit_last_error());
}

inline std::string take_string(char* s) {
  std::string out = s ? s : "";
  cliffinit_string_free(s);
  return out;
}

struct HamiltonianDeleter {
  void operator()(cliffinit_hamiltonian* h) const { cliffinit_hamiltonian_free(h); }
};
struct AnsatzDeleter {
  void operator()(cliffinit_ansatz* a) const { cliffinit_ansatz_free(a); }
};
struct AnnealResultDeleter {
  void operator()(cliffinit_anneal_result* r) const { cliffinit_anneal_result_free(r); }
};

using Hamiltonian = std::unique_ptr<cliffinit_hamiltonian, HamiltonianDeleter>;
using Ansatz = std::unique_ptr<cliffinit_ansatz, AnsatzDeleter>;
using AnnealResult = std::unique_ptr<cliffinit_anneal_result, AnnealResultDeleter>;

template <typename Handle, typename F>
Handle make(F&& build) {
  typename Handle::pointer raw = nullptr;
  check(build(&raw));
  return Handle(raw);
}

inline std::vector<std::string> term_letters(const cliffinit_hamiltonian* h, std::vector<double>* coefficients) {
  std::vector<std::string> out;
  const size_t count = cliffinit_hamiltonian_num_terms(h);
  for (size_t i = 0; i < count; ++i) {
    double c = 0;
    char* letters = nullptr;
    check(cliffinit_hamiltonian_term(h, i, &c, &letters));
    out.push_back(take_string(letters));
    if (coefficients) coefficients->push_back(c);
  }
  return out;
}

}  // namespace cli

#endif  // CLIFFINIT_TOOLS_CLI_HANDLES_HPP_
