#!/usr/bin/env python3
# Copyright 2026 The cliffinit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the qubit Hamiltonian fixtures under fixtures/.

Molecular integrals come from pyscf (RHF, STO-3G). The fermionic Hamiltonian
is mapped to qubits with the Jordan-Wigner, parity or Bravyi-Kitaev encoding,
written through the generic update/parity/flip-set construction:

    a_j^dag = 1/2 X_U(j) (X_j Z_P(j) - i Y_j Z_{P(j) xor F(j)})

The recorded ground_energy is the lowest eigenvalue of the qubit operator over
the full Fock space, which is what a dense diagonalization of the file yields.

Usage: python3 tools/fixtures/generate_fixtures.py [output_dir]
"""

import itertools
import math
import os
import sys

import numpy as np
import pyscf
import scipy.sparse
import scipy.sparse.linalg
from pyscf import ao2mo, fci, gto, scf

# --- Pauli algebra over strings of I/X/Y/Z -------------------------------

_MUL = {
    ('I', 'I'): (1, 'I'), ('I', 'X'): (1, 'X'), ('I', 'Y'): (1, 'Y'), ('I', 'Z'): (1, 'Z'),
    ('X', 'I'): (1, 'X'), ('X', 'X'): (1, 'I'), ('X', 'Y'): (1j, 'Z'), ('X', 'Z'): (-1j, 'Y'),
    ('Y', 'I'): (1, 'Y'), ('Y', 'X'): (-1j, 'Z'), ('Y', 'Y'): (1, 'I'), ('Y', 'Z'): (1j, 'X'),
    ('Z', 'I'): (1, 'Z'), ('Z', 'X'): (1j, 'Y'), ('Z', 'Y'): (-1j, 'X'), ('Z', 'Z'): (1, 'I'),
}


def pmul(a, b):
    phase = 1
    out = []
    for p, q in zip(a, b):
        f, r = _MUL[(p, q)]
        phase *= f
        out.append(r)
    return phase, ''.join(out)


def op_mul(x, y):
    out = {}
    for sa, ca in x.items():
        for sb, cb in y.items():
            f, s = pmul(sa, sb)
            out[s] = out.get(s, 0) + ca * cb * f
    return {s: c for s, c in out.items() if abs(c) > 1e-15}


def op_add(acc, x, scale=1.0):
    for s, c in x.items():
        acc[s] = acc.get(s, 0) + scale * c


def single(n, assign):
    letters = ['I'] * n
    for q, l in assign.items():
        letters[q] = l
    return ''.join(letters)


# --- Encodings ------------------------------------------------------------

def encoding_matrix(name, n):
    """Binary matrix beta with q = beta n (mod 2)."""
    if name == 'jw':
        return np.eye(n, dtype=np.int64)
    if name == 'parity':
        return np.tril(np.ones((n, n), dtype=np.int64))
    if name == 'bk':
        size = 1
        while size < n:
            size *= 2
        b = np.array([[1]], dtype=np.int64)
        while b.shape[0] < size:
            m = b.shape[0]
            nb = np.zeros((2 * m, 2 * m), dtype=np.int64)
            nb[:m, :m] = b
            nb[m:, m:] = b
            nb[2 * m - 1, :m] = 1
            b = nb
        return b[:n, :n]
    raise ValueError(name)


def gf2_inverse(m):
    n = m.shape[0]
    a = np.concatenate([m % 2, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r, col])
        a[[col, piv]] = a[[piv, col]]
        for r in range(n):
            if r != col and a[r, col]:
                a[r] ^= a[col]
    return a[:, n:]


def creation_operators(name, n):
    beta = encoding_matrix(name, n)
    inv = gf2_inverse(beta)
    ops = []
    for j in range(n):
        update = [i for i in range(n) if i != j and beta[i, j]]
        parity = [i for i in range(n) if sum(inv[k, i] for k in range(j)) % 2]
        flip = [i for i in range(n) if i != j and inv[j, i]]
        rem = sorted(set(parity) ^ set(flip))
        xs = {q: 'X' for q in update}
        t1 = dict(xs)
        t1[j] = 'X'
        for q in parity:
            t1[q] = 'Z'
        t2 = dict(xs)
        t2[j] = 'Y'
        for q in rem:
            t2[q] = 'Z'
        ops.append({single(n, t1): 0.5, single(n, t2): -0.5j})
    return ops


def dagger(op):
    return {s: np.conj(c) for s, c in op.items()}


# --- Molecular Hamiltonian --------------------------------------------------

def molecular_integrals(atoms, frozen=0, active=None):
    mol = gto.M(atom=atoms, basis='sto-3g', unit='Angstrom', verbose=0)
    mf = scf.RHF(mol).run()
    mo = mf.mo_coeff
    h1 = mo.T @ mf.get_hcore() @ mo
    norb = mo.shape[1]
    eri = ao2mo.restore(1, ao2mo.kernel(mol, mo), norb)
    core = list(range(frozen))
    act = list(range(frozen, norb if active is None else frozen + active))
    ecore = mol.energy_nuc()
    for c in core:
        ecore += 2 * h1[c, c]
        for d in core:
            ecore += 2 * eri[c, c, d, d] - eri[c, d, d, c]
    h1a = h1[np.ix_(act, act)].copy()
    for c in core:
        h1a += 2 * eri[np.ix_(act, act, [c], [c])][:, :, 0, 0] - eri[np.ix_(act, [c], [c], act)][:, 0, 0, :]
    eria = eri[np.ix_(act, act, act, act)]
    nelec = mol.nelectron - 2 * frozen
    efci = fci.direct_spin1.kernel(h1a, eria, len(act), nelec)[0] + ecore
    return ecore, h1a, eria, efci


def qubit_hamiltonian(ecore, h1, eri, name):
    norb = h1.shape[0]
    n = 2 * norb
    cre = creation_operators(name, n)
    ann = [dagger(c) for c in cre]
    # spin orbital p = 2*spatial + spin
    ham = {'I' * n: complex(ecore)}
    pairs = {}

    def ada(p, q):
        key = (p, q)
        if key not in pairs:
            pairs[key] = op_mul(cre[p], ann[q])
        return pairs[key]

    for p, q in itertools.product(range(n), repeat=2):
        if p % 2 != q % 2:
            continue
        c = h1[p // 2, q // 2]
        if abs(c) > 1e-14:
            op_add(ham, ada(p, q), c)
    # 1/2 sum (pq|rs) a+_p a+_r a_s a_q  with chemist's notation
    for p, q, r, s in itertools.product(range(n), repeat=4):
        if p % 2 != q % 2 or r % 2 != s % 2:
            continue
        if p == r or q == s:
            continue
        c = 0.5 * eri[p // 2, q // 2, r // 2, s // 2]
        if abs(c) < 1e-14:
            continue
        term = op_mul(op_mul(cre[p], cre[r]), op_mul(ann[s], ann[q]))
        op_add(ham, term, c)
    out = {}
    for s, c in ham.items():
        if abs(c.imag) > 1e-9:
            raise RuntimeError(f'non-Hermitian coefficient on {s}: {c}')
        if abs(c.real) > 1e-12:
            out[s] = float(c.real)
    return n, out


def ground_energy(n, ham):
    dim = 1 << n
    idx = np.arange(dim, dtype=np.int64)
    groups = {}
    for s, c in ham.items():
        xm = zm = 0
        ny = 0
        for q, l in enumerate(s):
            if l in 'XY':
                xm |= 1 << q
            if l in 'ZY':
                zm |= 1 << q
            ny += l == 'Y'
        bits = idx & zm
        parity = np.zeros(dim, dtype=np.int64)
        while bits.any():
            parity ^= bits & 1
            bits = bits >> 1
        diag = c * (1j ** ny) * (1 - 2 * parity)
        groups[xm] = groups.get(xm, 0) + diag
    # <b ^ x| H |b> = diag_x[b]
    items = [(xm, idx ^ xm, d) for xm, d in groups.items()]

    def matvec(v):
        v = np.ravel(v)
        out = np.zeros(dim, dtype=np.complex128)
        for _, perm, d in items:
            out[perm] += d * v
        return out

    if dim <= 1024:
        mat = np.zeros((dim, dim), dtype=np.complex128)
        for _, perm, d in items:
            mat[perm, idx] += d
        return float(np.linalg.eigvalsh(mat)[0])
    op = scipy.sparse.linalg.LinearOperator((dim, dim), matvec=matvec, dtype=np.complex128)
    w = scipy.sparse.linalg.eigsh(op, k=1, which='SA', tol=1e-12, maxiter=100000)[0]
    return float(w[0])


def write_fixture(path, meta, n, ham, egs, efci):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, 'w') as f:
        f.write(f"# molecule={meta['molecule']}\n")
        f.write(f"# transform={meta['transform']}\n")
        f.write(f"# geometry={meta['geometry']}\n")
        f.write(f"# basis=sto-3g\n")
        if meta.get('active'):
            f.write(f"# active_space={meta['active']}\n")
        f.write(f"# n_qubits={n}\n")
        f.write(f"# ground_energy={float(egs)!r}\n")
        f.write(f"# fci_energy={float(efci)!r}\n")
        f.write(f"# generator=tools/fixtures/generate_fixtures.py (pyscf {pyscf.__version__})\n")
        for s in sorted(ham, key=lambda s: (s.count('I') != len(s), s)):
            f.write(f"{float(ham[s])!r} {s}\n")


def chain(n_atoms, intra, inter):
    z = 0.0
    atoms = []
    for k in range(n_atoms):
        atoms.append(f'H 0 0 {z:.6f}')
        z += intra if k % 2 == 0 else inter
    return '; '.join(atoms)


def water(r, angle):
    a = math.radians(angle / 2)
    return f'O 0 0 0; H {r * math.sin(a):.6f} {r * math.cos(a):.6f} 0; H {-r * math.sin(a):.6f} {r * math.cos(a):.6f} 0'


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), '..', '..', 'fixtures')
    jobs = []
    for r in (0.5, 0.735, 1.0, 1.5, 2.0):
        jobs.append(('h2', 'H2', f'{r}', chain(2, r, 0), dict()))
    for r in (0.6, 0.8, 1.0):
        jobs.append(('h4', 'H4', f'r{r}', chain(4, r, 1.5), dict()))
        jobs.append(('h6', 'H6', f'r{r}', chain(6, r, 1.5), dict()))
    for r in (0.5, 0.75, 1.0, 1.25, 1.5):
        jobs.append(('h8', 'H8', f'r{r}', chain(8, r, 1.5), dict()))
    for r, ang in ((0.9, 104.5), (0.96, 104.5), (1.1, 104.5), (0.96, 120.0)):
        jobs.append(('h2o', 'H2O', f'r{r}_a{ang}', water(r, ang), dict(frozen=1, active=5)))
    for folder, molecule, tag, geom, opts in jobs:
        ecore, h1, eri, efci = molecular_integrals(geom, opts.get('frozen', 0), opts.get('active'))
        transforms = ('jw', 'parity') if folder == 'h2o' else ('jw', 'parity', 'bk')
        for t in transforms:
            n, ham = qubit_hamiltonian(ecore, h1, eri, t)
            egs = ground_energy(n, ham)
            meta = dict(molecule=molecule, transform=t, geometry=geom)
            if opts:
                meta['active'] = f"frozen_core={opts.get('frozen', 0)} active_orbitals={opts.get('active')}"
            path = os.path.join(root, folder, t, f'{tag}.ham')
            write_fixture(path, meta, n, ham, egs, efci)
            print(f'{path}: {n} qubits, {len(ham)} terms, E0={egs:.10f}, FCI={efci:.10f}', flush=True)


if __name__ == '__main__':
    main()
