"""Local-unitary invariant polynomials indexed by conjugation classes.

A state on r parties is a complex array ``X`` of shape ``(n_1, ..., n_r)``.
For a class of ``(s_1, ..., s_{r-1})`` in S_m^(r-1) the invariant is

    sum over I_1..I_m of  prod_j X[I_j] * prod_j conj(X)[J_j]

where ``I_j = (i_1^(j), ..., i_r^(j))`` and the conjugated factor of row j
is read at ``(i_1^(s_1(j)), ..., i_{r-1}^(s_{r-1}(j)), i_r^(j))``; the last
party always carries the identity.

Numeric evaluation sums directly over the (prod n_k)^m index tuples in
fixed-size chunks, lexicographic in (I_1, ..., I_m); an einsum contraction of
the same sum is available as ``method="einsum"``.  Exact expansion produces
integer-coefficient monomials, and ranks are computed by integer
(fraction-free) elimination.
"""

import json
from collections import Counter
from math import gcd, prod

import numpy as np

from ._errors import BudgetExceededError
from .permgroup import DEFAULT_BUDGET, OrbitClass, orbits

__all__ = [
    "MonomialVector",
    "as_state",
    "read_state",
    "write_state",
    "evaluate_invariant",
    "expand_invariant",
    "exact_rank",
    "hilbert_coefficient",
    "invariant_space_dimension",
    "random_unitary",
    "random_state",
    "apply_group_element",
    "check_unitary",
]

UNITARY_TOL = 1e-10
_CHUNK = 1 << 16


def as_state(X):
    """Validate and return ``X`` as a complex ndarray with at least one axis."""
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim < 1 or X.size == 0:
        raise ValueError(f"state must have at least one non-empty axis, got shape {X.shape}")
    return X


def read_state(path):
    """Load ``{"shape": [...], "entries": [[re, im], ...]}`` (row-major, last axis fastest)."""
    with open(path) as fh:
        doc = json.load(fh)
    return state_from_json(doc)


def state_from_json(doc):
    shape = tuple(int(n) for n in doc["shape"])
    if not shape or any(n < 1 for n in shape):
        raise ValueError(f"invalid shape {shape}")
    entries = doc["entries"]
    if len(entries) != prod(shape):
        raise ValueError(f"expected {prod(shape)} entries for shape {shape}, got {len(entries)}")
    flat = np.array([complex(float(re), float(im)) for re, im in entries], dtype=np.complex128)
    return flat.reshape(shape)


def state_to_json(X):
    X = as_state(X)
    # float repr round-trips exactly through json
    return {
        "shape": list(X.shape),
        "entries": [[float(z.real), float(z.imag)] for z in X.ravel()],
    }


def write_state(path, X):
    with open(path, "w") as fh:
        json.dump(state_to_json(X), fh)
        fh.write("\n")


def _class_tuple(cls):
    if isinstance(cls, OrbitClass):
        return cls.canonical, cls.m
    perms = tuple(cls)
    if not perms:
        raise ValueError("an empty tuple does not determine m; pass an OrbitClass")
    return perms, perms[0].degree


def _y_sources(perms, m, r):
    """Row of I whose k-th coordinate feeds conj factor j: ``src[j, k]`` (0-based)."""
    src = np.empty((m, r), dtype=np.int64)
    for k, p in enumerate(perms):
        src[:, k] = p.array_form
    src[:, r - 1] = np.arange(m)
    return src


def _check_class(perms, m, shape):
    if m < 1:
        raise ValueError(f"invariant degree m must be >= 1, got {m}")
    if len(perms) != len(shape) - 1:
        raise ValueError(
            f"class has {len(perms)} permutations but the state has {len(shape)} parties"
        )
    if any(p.degree != m for p in perms):
        raise ValueError("class permutations must all have degree m")


def _check_budget(shape, m, budget):
    terms = prod(shape) ** m
    if terms > budget:
        raise BudgetExceededError(f"(prod n_k)^m = {terms} index tuples exceeds budget {budget}")
    return terms


def evaluate_invariant(cls, X, budget=DEFAULT_BUDGET, method="direct"):
    """Value of the invariant for ``cls`` at the state ``X``.

    ``cls`` is an :class:`OrbitClass` or any representative tuple; the value
    does not depend on the representative.
    """
    X = as_state(X)
    perms, m = _class_tuple(cls)
    _check_class(perms, m, X.shape)
    terms = _check_budget(X.shape, m, budget)
    if method == "einsum":
        return _evaluate_einsum(perms, m, X)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")

    r = X.ndim
    n_flat = X.size
    x = X.ravel()
    y = x.conj()
    coords = np.stack(np.unravel_index(np.arange(n_flat), X.shape), axis=1)
    strides = np.array([prod(X.shape[k + 1 :]) for k in range(r)], dtype=np.int64)
    src = _y_sources(perms, m, r)
    place = n_flat ** np.arange(m - 1, -1, -1, dtype=np.int64)

    total = 0j
    for start in range(0, terms, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, terms), dtype=np.int64)
        rows = (codes[:, None] // place) % n_flat  # flat index of I_j
        term = np.prod(x[rows], axis=1)
        row_coords = coords[rows]  # (chunk, m, r)
        for j in range(m):
            picked = row_coords[:, src[j], np.arange(r)]
            term = term * y[picked @ strides]
        total += term.sum()
    return complex(total)


_LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _evaluate_einsum(perms, m, X):
    r = X.ndim
    if m * r > len(_LETTERS):
        raise ValueError("too many indices for an einsum contraction")
    label = [[_LETTERS[j * r + k] for k in range(r)] for j in range(m)]
    src = _y_sources(perms, m, r)
    x_terms = ["".join(label[j]) for j in range(m)]
    y_terms = ["".join(label[src[j, k]][k] for k in range(r)) for j in range(m)]
    spec = ",".join(x_terms + y_terms) + "->"
    Y = X.conj()
    return complex(np.einsum(spec, *([X] * m + [Y] * m), optimize="greedy"))


class MonomialVector:
    """Exact expansion of an invariant polynomial in x and y = conj(x).

    ``terms`` maps ``(x_indices, y_indices)`` to a positive integer, where
    each side is a sorted tuple of m 1-based multi-indices.
    """

    def __init__(self, terms, m, shape):
        self.terms = dict(terms)
        self.m = m
        self.shape = tuple(shape)

    @property
    def degree(self):
        return 2 * self.m

    @property
    def mass(self):
        return sum(self.terms.values())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MonomialVector):
            return NotImplemented
        return self.shape == other.shape and self.m == other.m and self.terms == other.terms

    def __repr__(self):
        return f"MonomialVector(m={self.m}, shape={self.shape}, {len(self.terms)} monomials)"

    def evaluate(self, X):
        X = as_state(X)
        if X.shape != self.shape:
            raise ValueError(f"state shape {X.shape} != {self.shape}")
        Y = X.conj()
        total = 0j
        for (xs, ys), c in sorted(self.terms.items()):
            v = c + 0j
            for idx in xs:
                v *= X[tuple(i - 1 for i in idx)]
            for idx in ys:
                v *= Y[tuple(i - 1 for i in idx)]
            total += v
        return complex(total)


def expand_invariant(cls, shape, budget=DEFAULT_BUDGET):
    """Exact monomial expansion of the invariant for ``cls`` at a fixed shape."""
    shape = tuple(int(n) for n in shape)
    perms, m = _class_tuple(cls)
    _check_class(perms, m, shape)
    terms = _check_budget(shape, m, budget)
    r = len(shape)
    n_flat = prod(shape)
    coords = np.stack(np.unravel_index(np.arange(n_flat), shape), axis=1)
    strides = np.array([prod(shape[k + 1 :]) for k in range(r)], dtype=np.int64)
    src = _y_sources(perms, m, r)
    place = n_flat ** np.arange(m - 1, -1, -1, dtype=np.int64)

    counts = Counter()
    for start in range(0, terms, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, terms), dtype=np.int64)
        rows = (codes[:, None] // place) % n_flat
        row_coords = coords[rows]
        ys = np.stack(
            [row_coords[:, src[j], np.arange(r)] @ strides for j in range(m)], axis=1
        )
        # the product is commutative, so only the multisets of indices matter
        keys = np.concatenate([np.sort(rows, axis=1), np.sort(ys, axis=1)], axis=1)
        uniq, cnt = np.unique(keys, axis=0, return_counts=True)
        for key, c in zip(map(tuple, uniq.tolist()), cnt.tolist()):
            counts[key] += c

    multi = [tuple(int(c) + 1 for c in row) for row in coords]
    out = {
        (tuple(multi[i] for i in key[:m]), tuple(multi[i] for i in key[m:])): c
        for key, c in counts.items()
    }
    return MonomialVector(out, m, shape)


def _integer_rank(rows):
    """Rank over Q of integer row vectors given as ``{column: value}`` dicts.

    Rows are eliminated against earlier pivots with integer cross
    multiplication, dividing out the content after each step so entries stay
    small.  No fractions are ever formed.
    """
    pivots = {}  # pivot column -> reduced row
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[col] = {c: v // g for c, v in row.items()}
                break
            piv = pivots[col]
            a, b = piv[col], row[col]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                new[c] = new.get(c, 0) - b * v
            row = {c: v for c, v in new.items() if v}
            if row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                row = {c: v // g for c, v in row.items()}
    return len(pivots)


def exact_rank(classes, shape, budget=DEFAULT_BUDGET):
    """Dimension of the span of the expanded invariants of ``classes``."""
    classes = list(classes)
    if not classes:
        return 0
    ms = {_class_tuple(c)[1] for c in classes}
    if len(ms) != 1:
        raise ValueError(f"classes mix degrees m = {sorted(ms)}")
    vectors = [expand_invariant(c, shape, budget) for c in classes]
    columns = {}
    for v in vectors:
        for key in sorted(v.terms):
            columns.setdefault(key, len(columns))
    return _integer_rank([{columns[k]: c for k, c in v.terms.items()} for v in vectors])


def hilbert_coefficient(m, shape, budget=DEFAULT_BUDGET):
    """Dimension of the degree-2m local-unitary invariants for ``shape``.

    Computed as the exact rank of all class invariants of degree m, which
    span that space.  Only even degrees are asked for because odd-degree
    invariants vanish (see :func:`invariant_space_dimension`).
    """
    shape = tuple(int(n) for n in shape)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if not shape or any(n < 1 for n in shape):
        raise ValueError(f"invalid shape {shape}")
    if m == 0:
        return 1
    _check_budget(shape, m, budget)
    return exact_rank(orbits(m, len(shape) - 1, budget=budget), shape, budget)


def invariant_space_dimension(degree, shape, budget=DEFAULT_BUDGET):
    """Dimension of the invariants of real polynomial degree ``degree``; zero when odd."""
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    if degree % 2:
        return 0
    return hilbert_coefficient(degree // 2, shape, budget)


def random_unitary(n, seed=None):
    """Haar-distributed n x n unitary.

    QR of a complex Ginibre matrix, with the phases of diag(R) moved into Q
    so the distribution is exactly Haar.  ``seed`` may be an int or a
    ``numpy.random.Generator``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_state(shape, seed=None, normalize=True):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    if normalize:
        X /= np.linalg.norm(X)
    return X


def check_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    residual = np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))
    if residual > tol:
        raise ValueError(f"matrix is not unitary: residual {residual:.3g} > {tol}")
    return u


def apply_group_element(us, X, check=True):
    """Act by ``u_1 (x) ... (x) u_r`` on ``X``: axis k is multiplied by ``us[k]``."""
    X = as_state(X)
    us = list(us)
    if len(us) != X.ndim:
        raise ValueError(f"need {X.ndim} matrices, got {len(us)}")
    out = X
    for k, u in enumerate(us):
        u = check_unitary(u) if check else np.asarray(u, dtype=np.complex128)
        if u.shape[0] != X.shape[k]:
            raise ValueError(f"matrix {k} has size {u.shape[0]}, axis has {X.shape[k]}")
        out = np.moveaxis(np.tensordot(u, out, axes=([1], [k])), 0, k)
    return out

