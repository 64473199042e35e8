"""Exhaustive and randomised corpora of right Leibniz tables over GF(p)."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .algebra import LeibnizAlgebra, NotLeibnizError
from .catalog import abelian, one_dim_extension
from .field import GF, FieldSpec

# supported exhaustive budget: dimension -> primes
BUDGET = {0: None, 1: None, 2: (2, 3, 5), 3: (2,)}

# counts of right Leibniz structure tables, frozen from the enumerators;
# dim <= 2 values come from the unpruned oracle, (3, 2) from the backtracker
GOLDEN_COUNTS = {
    (0, 2): 1, (0, 3): 1, (0, 5): 1,
    (1, 2): 1, (1, 3): 1, (1, 5): 1,
    (2, 2): 13, (2, 3): 41, (2, 5): 169,
    (3, 2): 806,
}


class BudgetExceeded(ValueError):
    pass


@dataclass
class Corpus:
    field: FieldSpec
    dim: int
    mode: str  # "exhaustive" | "catalog" | "random-extension"
    algebras: list[LeibnizAlgebra]
    params: dict = dc_field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.algebras)

    def __iter__(self):
        return iter(self.algebras)

    @property
    def descriptor(self) -> str:
        extra = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()) if k != "entries")
        return f"{self.mode}:dim={self.dim}:{self.field}" + (f":{extra}" if extra else "")


# -- backtracking enumerator -------------------------------------------------------


def _vectors(p: int, n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(p), repeat=n))


def _triple_defect(T, p, n, a, b, c):
    """None if some needed product is still unassigned, else whether
    [a,[b,c]] - [[a,b],c] + [[a,c],b] vanishes."""
    v = T[b][c]
    u = T[a][b]
    w = T[a][c]
    if v is None or u is None or w is None:
        return None
    acc = [0] * n
    for k in range(n):
        if v[k]:
            r = T[a][k]
            if r is None:
                return None
            for m in range(n):
                acc[m] += v[k] * r[m]
        if u[k]:
            r = T[k][c]
            if r is None:
                return None
            for m in range(n):
                acc[m] -= u[k] * r[m]
        if w[k]:
            r = T[k][b]
            if r is None:
                return None
            for m in range(n):
                acc[m] += w[k] * r[m]
    return all(x % p == 0 for x in acc)


def _order(n: int) -> list[tuple[int, int]]:
    # column by column: all [e_i, e_j] for j = 0, then j = 1, ...
    return [(i, j) for j in range(n) for i in range(n)]


def _search(p: int, n: int, first: tuple | None):
    order = _order(n)
    vecs = _vectors(p, n)
    T = [[None] * n for _ in range(n)]
    triples = list(itertools.product(range(n), repeat=3))
    out = []

    def rec(depth: int, pending: list):
        if depth == len(order):
            out.append(tuple(tuple(row) for row in T))
            return
        i, j = order[depth]
        choices = [first] if depth == 0 and first is not None else vecs
        for v in choices:
            T[i][j] = v
            rest = []
            ok = True
            for t in pending:
                d = _triple_defect(T, p, n, *t)
                if d is None:
                    rest.append(t)
                elif not d:
                    ok = False
                    break
            if ok:
                rec(depth + 1, rest)
        T[i][j] = None

    if n == 0:
        return [()]
    rec(0, triples)
    return out


def enumerate_tables(n: int, p: int, *, jobs: int = 1) -> list[tuple]:
    """All right Leibniz tables (pruned backtracking), in lexicographic order
    of the column-major entry sequence."""
    if n == 0:
        return [()]
    firsts = _vectors(p, n)
    if jobs <= 1:
        return _search(p, n, None)
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_search, [p] * len(firsts), [n] * len(firsts), firsts))
    return [t for part in parts for t in part]


def enumerate_tables_unpruned(n: int, p: int) -> list[tuple]:
    """Reference enumerator: every candidate table, checked in full."""
    vecs = _vectors(p, n)
    order = _order(n)
    triples = list(itertools.product(range(n), repeat=3))
    out = []
    for combo in itertools.product(vecs, repeat=n * n):
        T = [[None] * n for _ in range(n)]
        for (i, j), v in zip(order, combo):
            T[i][j] = v
        if all(_triple_defect(T, p, n, *t) for t in triples):
            out.append(tuple(tuple(row) for row in T))
    return out


def in_budget(n: int, p: int) -> bool:
    if n not in BUDGET:
        return False
    primes = BUDGET[n]
    return primes is None or p in primes


def enumerate_corpus(n: int, F: FieldSpec, *, jobs: int = 1, force: bool = False) -> Corpus:
    """Every right Leibniz structure on F^n (tables, not isomorphism classes).

    ``force`` lifts the budget guard (used for measured runs outside it).
    """
    if not F.is_finite:
        raise ValueError("exhaustive corpora need a finite field")
    p = F.p
    if not force and not in_budget(n, p):
        raise BudgetExceeded(f"dimension {n} over {F} is outside the enumeration budget")
    tables = enumerate_tables(n, p, jobs=jobs)
    algebras = [
        LeibnizAlgebra(F, t, verify=False, name=f"GF{p}-d{n}-{idx}") for idx, t in enumerate(tables)
    ]
    return Corpus(F, n, "exhaustive", algebras, {"count": len(algebras)})


def enumerate_up_to(n: int, F: FieldSpec, *, jobs: int = 1) -> list[Corpus]:
    return [enumerate_corpus(k, F, jobs=jobs) for k in range(n + 1)]


# -- random extensions ---------------------------------------------------------------


def _random_matrix(rng: random.Random, p: int, rows: int, cols: int, density: float):
    return [[rng.randrange(1, p) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]


def _random_step(rng: random.Random, L: LeibnizAlgebra, tries: int) -> LeibnizAlgebra | None:
    p, n = L.field.p, L.dim
    for _ in range(tries):
        density = rng.choice((0.15, 0.3, 0.5))
        right = _random_matrix(rng, p, n, n, density)
        shape = rng.random()
        if shape < 0.3:
            left = [[0] * n for _ in range(n)]
        elif shape < 0.6:
            left = [[-c for c in row] for row in right]
        else:
            left = _random_matrix(rng, p, n, n, density)
        sq = _random_matrix(rng, p, 1, n, density / 2)[0]
        try:
            return one_dim_extension(L, right, left, sq)
        except NotLeibnizError:
            continue
    return None


def random_extension_corpus(seed: int, dim: int, F: FieldSpec, count: int, *, tries: int = 400) -> Corpus:
    """``count`` algebras grown from 0 by random valid one-dimensional extensions.

    Each step rejects candidates that fail the identity; a step that keeps
    failing restarts the chain.  Deterministic for a fixed seed.
    """
    if not F.is_finite:
        raise ValueError("random corpora need a finite field")
    rng = random.Random(seed)
    out: list[LeibnizAlgebra] = []
    while len(out) < count:
        L = abelian(0, F)
        for _ in range(dim):
            L = _random_step(rng, L, tries)
            if L is None:
                break
        if L is not None:
            L.name = f"rand-s{seed}-GF{F.p}-d{dim}-{len(out)}"
            out.append(L)
    return Corpus(F, dim, "random-extension", out, {"seed": seed, "count": count})
