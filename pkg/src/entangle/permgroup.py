"""Permutations of {1..m} and the S_m actions on tuples of them.

Composition is right-to-left: ``(a * b)(i) == a(b(i))``.  All user-facing
notation is 1-based; internally permutations hold a 0-based array form.

Two actions matter here:

* simultaneous conjugation of a k-tuple, ``g.(s_1..s_k) = (g s_1 g^-1, ...)``;
* left/right diagonal multiplication of an r-tuple,
  ``(a, b).(s_1..s_r) = (a s_1 b^-1, ...)``, whose orbits are double cosets.

Orbit enumeration walks the whole tuple space once, encoded as integers in
base m!, so it is exact but exponential in the tuple length.  It refuses to
start when the space exceeds ``budget``.
"""

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from ._errors import BudgetExceededError, PermutationParseError
from .combinatorics import Partition

__all__ = [
    "DEFAULT_BUDGET",
    "MAX_DEGREE",
    "Permutation",
    "OrbitClass",
    "parse_permutation",
    "parse_tuple",
    "format_tuple",
    "compose",
    "conjugate",
    "cycle_type",
    "centralizer_order",
    "burnside_orbit_count",
    "canonicalize",
    "orbits",
    "theta",
    "double_cosets",
    "is_transitive",
]

MAX_DEGREE = 7
DEFAULT_BUDGET = 10**8


class Permutation:
    """A bijection of {1..m}, given by its images in one-line notation.

    >>> p = Permutation([2, 3, 1])
    >>> p(1), p.inverse().images
    (2, (3, 1, 2))
    >>> str(p)
    '(1 2 3)'
    """

    __slots__ = ("_a",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self._a = tuple(i - 1 for i in images)

    @classmethod
    def _from_array(cls, array_form):
        p = cls.__new__(cls)
        p._a = tuple(int(i) for i in array_form)
        return p

    @classmethod
    def identity(cls, m):
        return cls._from_array(range(m))

    @classmethod
    def from_cycles(cls, text, m=None):
        return parse_permutation(text, m)

    @property
    def degree(self):
        return len(self._a)

    @property
    def images(self):
        return tuple(i + 1 for i in self._a)

    @property
    def array_form(self):
        return self._a

    def __call__(self, i):
        return self._a[i - 1] + 1

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        inv = [0] * len(self._a)
        for i, j in enumerate(self._a):
            inv[j] = i
        return Permutation._from_array(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self._a))

    def cycles(self):
        """Non-trivial cycles, each starting at its smallest point (1-based)."""
        seen = set()
        out = []
        for start in range(len(self._a)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self._a[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self._a[j]
            if len(cyc) > 1:
                out.append(tuple(c + 1 for c in cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._a == other._a

    def __lt__(self, other):
        return self._a < other._a

    def __hash__(self):
        return hash(self._a)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text, m=None):
    """Parse cycle notation such as ``"(1 3 2)(4 5)"``; ``"()"`` is the identity.

    Without ``m`` the degree is the largest point mentioned (at least 1).
    Points may be separated by spaces or commas.
    """
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise PermutationParseError(f"not cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise PermutationParseError(f"non-integer point in {text!r}") from None
        cycles.append(points)
    points = [p for c in cycles for p in c]
    if any(p < 1 for p in points):
        raise PermutationParseError(f"points must be >= 1 in {text!r}")
    if len(set(points)) != len(points):
        raise PermutationParseError(f"repeated point in {text!r}")
    if m is None:
        m = max(points, default=1)
    elif points and max(points) > m:
        raise PermutationParseError(f"point {max(points)} out of range 1..{m} in {text!r}")
    a = list(range(m))
    for c in cycles:
        for x, y in zip(c, c[1:] + c[:1]):
            a[x - 1] = y - 1
    return Permutation._from_array(a)


def parse_tuple(text, m=None):
    """Parse ``"<perm>;<perm>;..."``.  All entries share one degree.

    Without ``m`` the degree is the largest point mentioned anywhere.
    An empty string is the empty tuple.
    """
    parts = [p for p in text.split(";")] if text.strip() else []
    if m is None:
        m = max((parse_permutation(p).degree for p in parts), default=1)
    return tuple(parse_permutation(p, m) for p in parts)


def format_tuple(perms):
    return ";".join(str(p) for p in perms)


def _check_degree(perms, m=None):
    degrees = {p.degree for p in perms}
    if m is not None:
        degrees.add(m)
    if len(degrees) > 1:
        raise ValueError(f"degree mismatch: {sorted(degrees)}")
    return degrees.pop() if degrees else None


def compose(a, b):
    """``a * b``, the permutation ``i -> a(b(i))``."""
    _check_degree((a, b))
    return Permutation._from_array(a._a[j] for j in b._a)


def conjugate(tau, s):
    """Simultaneous conjugation ``tau s_i tau^-1`` of every entry of ``s``."""
    _check_degree(s, tau.degree)
    tau_inv = tau.inverse()
    return tuple(tau * p * tau_inv for p in s)


def cycle_type(sigma):
    lengths = [len(c) for c in sigma.cycles()]
    lengths += [1] * (sigma.degree - sum(lengths))
    return Partition(sorted(lengths, reverse=True))


def _symmetric_group(m):
    return (Permutation._from_array(a) for a in itertools.permutations(range(m)))


def centralizer_order(sigma):
    """Count the g in S_m with g sigma g^-1 == sigma, by brute force."""
    return sum(1 for g in _symmetric_group(sigma.degree) if g * sigma == sigma * g)


def burnside_orbit_count(m, k):
    """Number of simultaneous-conjugation orbits on S_m^k by Burnside's lemma.

    A conjugator fixes a k-tuple iff it centralizes every entry, so the
    fixed-point count of g is |C(g)|**k.
    """
    total = sum(centralizer_order(g) ** k for g in _symmetric_group(m))
    q, rem = divmod(total, factorial(m))
    assert rem == 0
    return q


@dataclass(frozen=True)
class OrbitClass:
    """A simultaneous-conjugation class, stored by its canonical representative."""

    canonical: tuple
    m: int

    @property
    def length(self):
        return len(self.canonical)

    def __str__(self):
        return format_tuple(self.canonical)


class _GroupTables:
    """Lexicographically ranked S_m with vectorised composition helpers."""

    def __init__(self, m):
        self.m = m
        self.order = factorial(m)
        self.perms = np.array(list(itertools.permutations(range(m))), dtype=np.int64).reshape(
            self.order, m
        )
        self.inv = np.argsort(self.perms, axis=1)
        self._weights = m ** np.arange(m - 1, -1, -1, dtype=np.int64)
        self._keys = self.perms @ self._weights
        self.conj_column = lru_cache(maxsize=2048)(self._conj_column)

    def rank(self, arrays):
        """Lex rank of each row of ``arrays`` (shape ``(..., m)``)."""
        return np.searchsorted(self._keys, arrays @ self._weights)

    def rank_one(self, p):
        return int(self.rank(np.asarray(p.array_form, dtype=np.int64)))

    def perm(self, idx):
        return Permutation._from_array(self.perms[idx])

    def _conj_column(self, p):
        # (g p g^-1)(i) = g[p[g^-1[i]]] for every g at once
        inner = self.perms[p][self.inv]
        return self.rank(np.take_along_axis(self.perms, inner, axis=1))

    def conjugates(self, digits):
        """Codes of all conjugates of the tuple with rank digits ``digits``."""
        codes = np.zeros(self.order, dtype=np.int64)
        for d in digits:
            codes = codes * self.order + self.conj_column(int(d))
        return codes

    def decode(self, code, k):
        digits = []
        for _ in range(k):
            code, d = divmod(code, self.order)
            digits.append(d)
        return digits[::-1]


@lru_cache(maxsize=None)
def _tables(m):
    return _GroupTables(m)


def _check_bound(m, max_degree):
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    if m > max_degree:
        raise BudgetExceededError(f"degree {m} exceeds enumeration bound {max_degree}")


def _check_space(m, k, budget):
    size = factorial(m) ** k
    if size > budget:
        raise BudgetExceededError(f"tuple space (m!)^{k} = {size} exceeds budget {budget}")
    return size


def canonicalize(s, m=None, max_degree=MAX_DEGREE):
    """Orbit class of a tuple under simultaneous conjugation.

    The representative is the conjugate whose concatenated one-line
    notation is lexicographically smallest.  ``m`` is only needed for the
    empty tuple.
    """
    s = tuple(s)
    m = _check_degree(s, m)
    if m is None:
        raise ValueError("degree of an empty tuple must be given")
    _check_bound(m, max_degree)
    tables = _tables(m)
    if not s:
        return OrbitClass((), m)
    conj = np.stack([tables.conj_column(tables.rank_one(p)) for p in s], axis=1)
    best = min(map(tuple, conj.tolist()))
    return OrbitClass(tuple(tables.perm(i) for i in best), m)


def orbits(m, k, budget=DEFAULT_BUDGET, max_degree=MAX_DEGREE):
    """All simultaneous-conjugation classes of S_m^k, in increasing canonical order."""
    _check_bound(m, max_degree)
    size = _check_space(m, k, budget)
    tables = _tables(m)
    seen = np.zeros(size, dtype=bool)
    found = []
    # scanning codes upward means the first member met is the orbit minimum
    for code in range(size):
        if seen[code]:
            continue
        seen[tables.conjugates(tables.decode(code, k))] = True
        found.append(code)
    return [
        OrbitClass(tuple(tables.perm(d) for d in tables.decode(code, k)), m) for code in found
    ]


def theta(s, max_degree=MAX_DEGREE):
    """Send ``(s_1, ..., s_r)`` to the class of ``(s_1 s_r^-1, ..., s_{r-1} s_r^-1)``.

    Constant on double cosets, and a bijection from double cosets of S_m^r
    onto conjugation classes of S_m^(r-1).
    """
    s = tuple(s)
    if not s:
        raise ValueError("theta needs at least one permutation")
    m = _check_degree(s)
    last_inv = s[-1].inverse()
    return canonicalize(tuple(p * last_inv for p in s[:-1]), m=m, max_degree=max_degree)


def double_cosets(m, r, budget=DEFAULT_BUDGET, max_degree=MAX_DEGREE):
    """One representative per orbit of (a, b).s = a s b^-1 on S_m^r.

    Each representative is the orbit member with the smallest concatenated
    one-line notation; the list is in increasing order.
    """
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    _check_bound(m, max_degree)
    size = _check_space(m, r, budget)
    tables = _tables(m)
    n = tables.order
    perms = tables.perms
    chunk = max(1, 2_000_000 // (n * m))
    seen = np.zeros(size, dtype=bool)
    found = []
    for code in range(size):
        if seen[code]:
            continue
        found.append(code)
        digits = tables.decode(code, r)
        # p b^-1 for every b, one row per b
        right = [perms[d][tables.inv] for d in digits]
        for start in range(0, n, chunk):
            left = perms[start : start + chunk, None, :]
            codes = np.zeros((left.shape[0], n), dtype=np.int64)
            for rb in right:
                prod_ = np.take_along_axis(
                    np.broadcast_to(left, (left.shape[0], n, m)),
                    np.broadcast_to(rb, (left.shape[0], n, m)),
                    axis=2,
                )
                codes = codes * n + tables.rank(prod_)
            seen[codes.ravel()] = True
    return [tuple(tables.perm(d) for d in tables.decode(code, r)) for code in found]


def is_transitive(perms, m):
    """Whether the group generated by ``perms`` acts transitively on {1..m}."""
    moves = [p.array_form for p in perms] + [p.inverse().array_form for p in perms]
    reached = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for a in moves:
            j = a[i]
            if j not in reached:
                reached.add(j)
                frontier.append(j)
    return len(reached) == m
