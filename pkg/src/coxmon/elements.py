"""Coxeter group elements over a CoxeterGraph, with two exact backends.

The group W acts on the root system of the standard reflection
representation: the generator s_i sends the simple root a_j to
a_j + 2 cos(pi/m_{ij}) a_i for j != i, and a_i to -a_i.

* Spherical graph: the root system is finite, and the action on roots is a
  faithful permutation action.  ``RootPermElement`` stores the image of all
  2P roots as a tuple of indices, where index r < P is a positive root and
  index r + P is its negation.  Composition is tuple indexing; the length
  of w is the number of positive roots sent to negative roots.

* Any graph: ``MatrixElement`` stores the representation matrix with
  ExactScalar entries; column j holds the coordinates of w(a_j).  A
  generator is a descent exactly when its column is nonpositive, and
  lengths come from the descent walk (peeling descents until the identity),
  guarded by a step ceiling against non-group input.

Both classes expose the same surface: ``gen_left``/``gen_right`` (cheap
one-generator products), ``right_descents``/``left_descents``, ``length``,
``inverse``, ``is_identity``, ``order``.  Products use the convention
(u * v)(x) = u(v(x)), matching words read left to right: the element of the
word (i1, ..., ik) is s_{i1} * ... * s_{ik}.
"""

from __future__ import annotations

import dataclasses
import functools
import math

from .exact import CosField, ExactScalar, field_for_modulus
from .graphs import (
    CoxeterGraph,
    classify_spherical,
    is_spherical,
    positive_root_count,
)

DEFAULT_STEP_CEILING = 10_000
DEFAULT_ORDER_BOUND = 10_000

# a block word is a sequence of vertex subsets, each standing for the
# longest element of its (spherical) standard parabolic subgroup
BlockWord = "tuple[tuple[str, ...], ...]"


# -- root systems ----------------------------------------------------------


@dataclasses.dataclass
class RootSystem:
    """Finite root system of a spherical graph, with permutation tables."""

    graph: CoxeterGraph
    field: CosField
    n_positive: int
    roots: tuple          # all 2P roots as coefficient tuples (ExactScalar)
    simple_index: dict    # vertex -> root index of its simple root
    action: tuple         # action[a][r] = index of s_{v_a}(root r)


def _reflect(g: CoxeterGraph, cos_row, a: int, vec):
    """Apply the generator at vertex position a to a coordinate vector."""
    new_a = -vec[a]
    for b, c in cos_row:
        x = vec[b]
        if x:
            new_a = new_a + c * x
    return vec[:a] + (new_a,) + vec[a + 1:]


@functools.lru_cache(maxsize=None)
def root_system(g: CoxeterGraph) -> RootSystem:
    if not is_spherical(g):
        raise ValueError("root_system needs a spherical graph")
    field = field_for_modulus(g.modulus)
    n = g.rank
    cos_rows = []
    for a in range(n):
        row = []
        for b in range(n):
            if b != a:
                c = field.two_cos(g.matrix[a][b])
                if not c.is_zero():
                    row.append((b, c))
        cos_rows.append(tuple(row))
    zero, one = field.zero, field.one
    simples = []
    for a in range(n):
        vec = [zero] * n
        vec[a] = one
        simples.append(tuple(vec))
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for vec in frontier:
            for a in range(n):
                img = _reflect(g, cos_rows[a], a, vec)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    positive = sorted(
        (v for v in seen if all(c.sign() >= 0 for c in v)),
        key=lambda v: tuple(c.coeffs for c in v),
    )
    P = len(positive)
    assert 2 * P == len(seen), "root system is not symmetric"
    expected = positive_root_count(g)
    assert P == expected, f"got {P} positive roots, classification says {expected}"
    roots = tuple(positive) + tuple(tuple(-c for c in v) for v in positive)
    index = {v: r for r, v in enumerate(roots)}
    action = tuple(
        tuple(index[_reflect(g, cos_rows[a], a, v)] for v in roots)
        for a in range(n)
    )
    simple_index = {
        v: index[simples[a]] for a, v in enumerate(g.vertices)
    }
    return RootSystem(g, field, P, roots, simple_index, action)


# -- permutation backend ---------------------------------------------------


@dataclasses.dataclass(frozen=True)
class RootPermElement:
    graph: CoxeterGraph
    perm: tuple[int, ...]
    rs: RootSystem = dataclasses.field(compare=False, repr=False)

    def __mul__(self, other: "RootPermElement") -> "RootPermElement":
        assert other.graph == self.graph
        sp = self.perm
        return RootPermElement(self.graph, tuple(sp[x] for x in other.perm), self.rs)

    def gen_left(self, v: str) -> "RootPermElement":
        row = self.rs.action[self.graph._index[v]]
        return RootPermElement(self.graph, tuple(row[x] for x in self.perm), self.rs)

    def gen_right(self, v: str) -> "RootPermElement":
        row = self.rs.action[self.graph._index[v]]
        return RootPermElement(self.graph, tuple(self.perm[x] for x in row), self.rs)

    @property
    def is_identity(self) -> bool:
        return all(x == r for r, x in enumerate(self.perm))

    @functools.cached_property
    def length(self) -> int:
        P = self.rs.n_positive
        return sum(1 for r in range(P) if self.perm[r] >= P)

    @functools.cached_property
    def inverse(self) -> "RootPermElement":
        inv = [0] * len(self.perm)
        for r, x in enumerate(self.perm):
            inv[x] = r
        return RootPermElement(self.graph, tuple(inv), self.rs)

    @functools.cached_property
    def right_descents(self) -> frozenset:
        P = self.rs.n_positive
        si = self.rs.simple_index
        return frozenset(v for v in self.graph.vertices if self.perm[si[v]] >= P)

    @functools.cached_property
    def left_descents(self) -> frozenset:
        return self.inverse.right_descents

    def order(self, bound: int = DEFAULT_ORDER_BOUND) -> int:
        """Exact order: the action on roots is faithful, so this is the lcm
        of the cycle lengths (returned even when it exceeds the bound)."""
        seen = [False] * len(self.perm)
        out = 1
        for r in range(len(self.perm)):
            if not seen[r]:
                n, x = 0, r
                while not seen[x]:
                    seen[x] = True
                    x = self.perm[x]
                    n += 1
                out = math.lcm(out, n)
        return out


# -- matrix backend --------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _matrix_tables(g: CoxeterGraph):
    """(field, cos rows, generator matrices, identity matrix) for g."""
    field = field_for_modulus(g.modulus)
    n = g.rank
    zero, one = field.zero, field.one
    cos = [
        [field.two_cos(g.matrix[a][b]) if a != b else None for b in range(n)]
        for a in range(n)
    ]
    ident = tuple(
        tuple(one if r == c else zero for c in range(n)) for r in range(n)
    )
    gens = []
    for a in range(n):
        rows = [list(row) for row in ident]
        for j in range(n):
            rows[a][j] = -one if j == a else cos[a][j]
        gens.append(tuple(tuple(r) for r in rows))
    return field, cos, tuple(gens), ident


@dataclasses.dataclass(frozen=True)
class MatrixElement:
    graph: CoxeterGraph
    matrix: tuple  # tuple of rows of ExactScalar; column j = image of a_j

    def __mul__(self, other: "MatrixElement") -> "MatrixElement":
        assert other.graph == self.graph
        n = self.graph.rank
        zero = _matrix_tables(self.graph)[0].zero
        a, b = self.matrix, other.matrix
        out = []
        for r in range(n):
            ar = a[r]
            row = []
            for c in range(n):
                acc = zero
                for k in range(n):
                    x = ar[k]
                    if x and b[k][c]:
                        acc = acc + x * b[k][c]
                row.append(acc)
            out.append(tuple(row))
        return MatrixElement(self.graph, tuple(out))

    def gen_left(self, v: str) -> "MatrixElement":
        """s_v * self: only row a changes."""
        field, cos, _, _ = _matrix_tables(self.graph)
        a = self.graph._index[v]
        n = self.graph.rank
        new_row = []
        for c in range(n):
            acc = -self.matrix[a][c]
            for k in range(n):
                if k != a and cos[a][k] and self.matrix[k][c]:
                    acc = acc + cos[a][k] * self.matrix[k][c]
            new_row.append(acc)
        mat = self.matrix[:a] + (tuple(new_row),) + self.matrix[a + 1:]
        return MatrixElement(self.graph, mat)

    def gen_right(self, v: str) -> "MatrixElement":
        """self * s_v: column a flips sign, and every other column c gains
        cos(a,c) times the old column a."""
        field, cos, _, _ = _matrix_tables(self.graph)
        a = self.graph._index[v]
        n = self.graph.rank
        rows = []
        for r in range(n):
            old = self.matrix[r]
            row = []
            for c in range(n):
                if c == a:
                    row.append(-old[a])
                elif cos[a][c] and old[a]:
                    row.append(old[c] + cos[a][c] * old[a])
                else:
                    row.append(old[c])
            rows.append(tuple(row))
        return MatrixElement(self.graph, tuple(rows))

    @property
    def is_identity(self) -> bool:
        return self.matrix == _matrix_tables(self.graph)[3]

    @functools.cached_property
    def right_descents(self) -> frozenset:
        out = []
        for j, v in enumerate(self.graph.vertices):
            signs = [row[j].sign() for row in self.matrix]
            assert any(signs), "zero column: not a group element"
            if all(s <= 0 for s in signs):
                out.append(v)
            else:
                # a root is never mixed-sign; catch corrupted input early
                assert all(s >= 0 for s in signs), "mixed-sign column"
        return frozenset(out)

    def reduced_word(self, step_ceiling: int | None = None) -> tuple:
        """Some reduced word for self, by peeling least right descents.

        Raises if the walk does not reach the identity within the ceiling
        (which for genuine group elements it always does, in length steps).
        """
        cached = self.__dict__.get("_rword")
        if cached is not None:
            return cached
        ceiling = DEFAULT_STEP_CEILING if step_ceiling is None else step_ceiling
        cur, letters = self, []
        for _ in range(ceiling + 1):
            if cur.is_identity:
                word = tuple(reversed(letters))
                self.__dict__["_rword"] = word
                return word
            j = min(cur.right_descents)
            letters.append(j)
            cur = cur.gen_right(j)
        raise RuntimeError(f"descent walk exceeded {ceiling} steps")

    @property
    def length(self) -> int:
        return len(self.reduced_word())

    @functools.cached_property
    def inverse(self) -> "MatrixElement":
        out = identity_element(self.graph, backend="matrix")
        for v in reversed(self.reduced_word()):
            out = out.gen_right(v)
        return out

    @functools.cached_property
    def left_descents(self) -> frozenset:
        return self.inverse.right_descents

    def order(self, bound: int = DEFAULT_ORDER_BOUND) -> int | None:
        """Smallest n >= 1 with w^n = 1, or None if none exists <= bound."""
        cur = self
        for n in range(1, bound + 1):
            if cur.is_identity:
                return n
            cur = cur * self
        return None


CoxElement = "RootPermElement | MatrixElement"


# -- public operations -----------------------------------------------------


def pick_backend(g: CoxeterGraph, backend: str | None = None) -> str:
    if backend is None:
        return "perm" if is_spherical(g) else "matrix"
    if backend not in ("perm", "matrix"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "perm" and not is_spherical(g):
        raise ValueError("permutation backend needs a spherical graph")
    return backend


@functools.lru_cache(maxsize=None)
def _identity_cached(g: CoxeterGraph, backend: str):
    if backend == "perm":
        rs = root_system(g)
        return RootPermElement(g, tuple(range(2 * rs.n_positive)), rs)
    return MatrixElement(g, _matrix_tables(g)[3])


def identity_element(g: CoxeterGraph, backend: str | None = None):
    return _identity_cached(g, pick_backend(g, backend))


def element_from_word(g: CoxeterGraph, word, backend: str | None = None):
    """The element s_{i1} ... s_{ik} of the word (i1, ..., ik)."""
    w = identity_element(g, backend)
    for v in word:
        if v not in g._index:
            raise ValueError(f"{v!r} is not a vertex")
        w = w.gen_right(v)
    return w


def generator(g: CoxeterGraph, v: str, backend: str | None = None):
    return element_from_word(g, (v,), backend)


def length(w) -> int:
    return w.length


def descents(w, side: str = "right") -> frozenset:
    if side == "right":
        return w.right_descents
    if side == "left":
        return w.left_descents
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def canonical_word(w) -> tuple:
    """The lexicographically least reduced word, by the least-left-descent
    recursion.  Deterministic; used for serialization and hashing words."""
    cached = w.__dict__.get("_canon")
    if cached is not None:
        return cached
    cur, inv = w, w.inverse
    letters = []
    while not cur.is_identity:
        i = min(inv.right_descents)  # left descents of cur, cheaply
        letters.append(i)
        cur = cur.gen_left(i)
        inv = inv.gen_right(i)
    out = tuple(letters)
    w.__dict__["_canon"] = out
    return out


def support(w) -> frozenset:
    """Letters occurring in reduced words of w (independent of the word)."""
    return frozenset(canonical_word(w))


def longest_element(g: CoxeterGraph, subset=None, backend: str | None = None):
    """Longest element r_J of the standard parabolic W_J, J spherical.

    Greedy ascent: repeatedly right-multiply by the least generator of J
    that is not yet a right descent.  Strictly length-increasing, so it
    terminates at r_J in exactly l(r_J) steps.
    """
    J = tuple(sorted(g.vertices if subset is None else set(subset)))
    bound = positive_root_count(g.restrict(J))
    if bound is None:
        raise ValueError("longest element needs a spherical subset")
    w = identity_element(g, backend)
    for _ in range(bound + 1):
        free = [j for j in J if j not in w.right_descents]
        if not free:
            return w
        w = w.gen_right(free[0])
    raise AssertionError("ascent did not stop at the classification bound")


def order_of(w, bound: int = DEFAULT_ORDER_BOUND) -> int | None:
    """Order of w; exact for the permutation backend, power iteration up to
    the bound (then None) for the matrix backend."""
    return w.order(bound)


def is_compatible(g: CoxeterGraph, blocks, backend: str | None = None) -> bool:
    """Whether l(r_{B1} ... r_{Bk}) equals l(r_{B1}) + ... + l(r_{Bk}).

    Each block must span a spherical subgraph.  This is the letter-additivity
    test used throughout the admissibility machinery.
    """
    backend = pick_backend(g, backend)
    total = 0
    w = identity_element(g, backend)
    for block in blocks:
        r = longest_element(g, block, backend)
        total += r.length
        w = w * r
    if isinstance(w, MatrixElement):
        return len(w.reduced_word(step_ceiling=10 * (total + 1))) == total
    return w.length == total


# -- word-level oracle (independent of the backends above) -----------------


def _braid_moves(g: CoxeterGraph):
    # iterate over all vertex pairs, not just the drawn edges: m = 2 is
    # the commutation move, and dropping it leaves the closure incomplete
    moves = []
    for a_i in range(len(g.vertices)):
        for b_i in range(a_i + 1, len(g.vertices)):
            i, j = g.vertices[a_i], g.vertices[b_i]
            m = g.m(i, j)
            if math.isinf(m):
                continue
            a = tuple((i, j)[k % 2] for k in range(m))
            b = tuple((j, i)[k % 2] for k in range(m))
            moves.append((a, b))
            moves.append((b, a))
    return moves


def _braid_closure(g: CoxeterGraph, word, max_states: int):
    moves = _braid_moves(g)
    word = tuple(word)
    seen = {word}
    frontier = [word]
    while frontier:
        new = []
        for w in frontier:
            for pat, rep in moves:
                L = len(pat)
                for k in range(len(w) - L + 1):
                    if w[k:k + L] == pat:
                        img = w[:k] + rep + w[k + L:]
                        if img not in seen:
                            if len(seen) >= max_states:
                                raise RuntimeError(
                                    "braid-move closure exceeded the state ceiling"
                                )
                            seen.add(img)
                            new.append(img)
        frontier = new
    return seen


def word_reduce(g: CoxeterGraph, word, max_states: int = 200_000):
    """A canonical reduced word for the group element of ``word``.

    Tits: repeatedly close under braid moves; if any equivalent word has an
    adjacent equal pair, delete the pair and start over.  The final closure
    is the full set of reduced words; return its lexicographic minimum.
    """
    word = tuple(word)
    while True:
        closure = _braid_closure(g, word, max_states)
        shorter = None
        for w in closure:
            for k in range(len(w) - 1):
                if w[k] == w[k + 1]:
                    shorter = w[:k] + w[k + 2:]
                    break
            if shorter is not None:
                break
        if shorter is None:
            return min(closure)
        word = shorter


def tits_oracle(g: CoxeterGraph, word1, word2, max_states: int = 200_000) -> bool:
    """Word-level equality in W, by rewriting only (no linear algebra)."""
    return word_reduce(g, word1, max_states) == word_reduce(g, word2, max_states)
