"""Exact matrix models for the sigma relations.

Two entry points matter. check_c12 evaluates the invariance condition
and the commuting condition on a concrete tuple of rational matrices
and asserts that the two verdicts agree. zero_divisor_search draws
seeded tuples from structured families, keeps the ones that satisfy
the relations without being fully commutative, and probes products of
commutators for vanishing or singularity. A vanishing product in such
a model is recorded evidence, never a proof in either direction.

All arithmetic is exact: entries are ints or Fractions, singularity is
decided by exact rank.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

FAMILIES = ("commuting", "conj-cyclic", "block-triangular", "dense")


def identity_matrix(dim: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(dim))
                 for i in range(dim))


def zero_matrix(dim: int) -> tuple:
    return tuple((0,) * dim for _ in range(dim))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_mul(a, b):
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
                 for row in a)


def mat_commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero_matrix(m) -> bool:
    return all(not x for row in m for x in row)


def mat_rank(m) -> int:
    """Rank over the rationals by fraction elimination."""
    rows = [[Fraction(x) for x in row] for row in m]
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / lead
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


@dataclass(frozen=True)
class MatrixTuple:
    """n square rational matrices sharing one dimension."""

    n: int
    dim: int
    mats: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one matrix")
        if self.dim < 1:
            raise ValueError("matrix dimension must be positive")
        if len(self.mats) != self.n:
            raise ValueError(f"expected {self.n} matrices, got {len(self.mats)}")
        frozen = []
        for m in self.mats:
            rows = tuple(tuple(row) for row in m)
            if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
                raise ValueError("matrices must be square of equal dimension")
            for row in rows:
                for x in row:
                    if not isinstance(x, (int, Fraction)):
                        raise ValueError(
                            f"entries must be rational, got {type(x).__name__}")
            frozen.append(rows)
        object.__setattr__(self, "mats", tuple(frozen))

    @classmethod
    def from_mats(cls, mats) -> "MatrixTuple":
        mats = tuple(mats)
        if not mats:
            raise ValueError("need at least one matrix")
        return cls(len(mats), len(mats[0]), mats)

    def rotated(self, r: int = 1) -> "MatrixTuple":
        """Circular shift: entry i of the result is matrix i + r."""
        r %= self.n
        return MatrixTuple(self.n, self.dim, self.mats[r:] + self.mats[:r])


def eval_sigma_matrices(t: MatrixTuple, k: int):
    """Sum of ordered products over strictly increasing index words."""
    if not 0 <= k <= t.n:
        raise ValueError(f"k must lie in 0..{t.n}, got {k}")
    if k == 0:
        return identity_matrix(t.dim)
    total = zero_matrix(t.dim)
    for word in itertools.combinations(range(t.n), k):
        prod = t.mats[word[0]]
        for i in word[1:]:
            prod = mat_mul(prod, t.mats[i])
        total = mat_add(total, prod)
    return total


def eval_sigma_recursive(t: MatrixTuple, k: int):
    """Same value by peeling the first matrix off every word.

    Kept as a second route so the recursion can be checked against the
    combination sum on concrete tuples.
    """
    if not 0 <= k <= t.n:
        raise ValueError(f"k must lie in 0..{t.n}, got {k}")
    table = [identity_matrix(t.dim)] + [zero_matrix(t.dim)] * k
    for m in reversed(t.mats):
        for j in range(k, 0, -1):
            table[j] = mat_add(mat_mul(m, table[j - 1]), table[j])
    return table[k]


def check_c12(t: MatrixTuple) -> tuple:
    """(invariant, commuting) for one tuple; the verdicts must agree.

    invariant: every sigma_k equals its value on every circular shift
    of the tuple. commuting: every sigma_k commutes with every matrix
    of the tuple. Disagreement would falsify the equivalence, so it is
    an assertion failure rather than a return value.
    """
    sigmas = [eval_sigma_matrices(t, k) for k in range(1, t.n + 1)]
    invariant = True
    for r in range(1, t.n):
        rot = t.rotated(r)
        for k in range(1, t.n + 1):
            if eval_sigma_matrices(rot, k) != sigmas[k - 1]:
                invariant = False
                break
        if not invariant:
            break
    commuting = all(mat_mul(s, m) == mat_mul(m, s)
                    for s in sigmas for m in t.mats)
    assert invariant == commuting, (
        f"invariant={invariant} but commuting={commuting}; "
        f"the equivalence failed on {t!r}")
    return invariant, commuting


def cyclic_permutation_matrix(dim: int) -> tuple:
    """Basis shift of order dim; row i carries a one in column i + 1."""
    return tuple(tuple(1 if j == (i + 1) % dim else 0 for j in range(dim))
                 for i in range(dim))


def _rand_matrix(rng: random.Random, rows: int, cols: int) -> tuple:
    return tuple(tuple(rng.randint(-3, 3) for _ in range(cols))
                 for _ in range(rows))


def random_tuple(family: str, n: int, dim: int, rng: random.Random) -> MatrixTuple:
    """Draw one tuple from a named structured family.

    commuting: independent random diagonal matrices.
    conj-cyclic: M_{i+1} = U^-1 M_i U for the basis shift U.
    block-triangular: two diagonal blocks (diagonal matrices) plus a
    random coupling block; needs dim >= 2.
    dense: independent random matrices, the unstructured control.
    """
    if family == "commuting":
        mats = [tuple(tuple(rng.randint(-3, 3) if i == j else 0
                            for j in range(dim)) for i in range(dim))
                for _ in range(n)]
    elif family == "conj-cyclic":
        u = cyclic_permutation_matrix(dim)
        uinv = tuple(zip(*u))
        mats = [_rand_matrix(rng, dim, dim)]
        for _ in range(n - 1):
            mats.append(mat_mul(uinv, mat_mul(mats[-1], u)))
    elif family == "block-triangular":
        if dim < 2:
            raise ValueError("block-triangular tuples need dim >= 2")
        s = dim // 2
        mats = []
        for _ in range(n):
            top = [rng.randint(-3, 3) for _ in range(s)]
            bot = [rng.randint(-3, 3) for _ in range(dim - s)]
            link = _rand_matrix(rng, s, dim - s)
            rows = []
            for i in range(dim):
                row = []
                for j in range(dim):
                    if i < s and j < s:
                        row.append(top[i] if i == j else 0)
                    elif i < s <= j:
                        row.append(link[i][j - s])
                    elif i >= s and j >= s:
                        row.append(bot[i - s] if i == j else 0)
                    else:
                        row.append(0)
                rows.append(tuple(row))
            mats.append(tuple(rows))
    elif family == "dense":
        mats = [_rand_matrix(rng, dim, dim) for _ in range(n)]
    else:
        raise ValueError(
            f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}")
    return MatrixTuple(n, dim, tuple(mats))


def _examine(arg):
    index, t = arg
    return examine_tuple(t, index)


def examine_tuple(t: MatrixTuple, index: int = 0):
    """Filter one tuple; returns (summary, candidate record or None)."""
    invariant, commuting = check_c12(t)
    pairs = []
    comms = {}
    for i, j in itertools.combinations(range(t.n), 2):
        c = mat_commutator(t.mats[i], t.mats[j])
        if not is_zero_matrix(c):
            pairs.append((i + 1, j + 1))
            comms[(i + 1, j + 1)] = c
    summary = {"relations_hold": invariant and commuting,
               "noncommuting": bool(pairs)}
    if not (summary["relations_hold"] and pairs):
        return summary, None
    products = []
    zero_count = singular_count = 0
    for left, right in itertools.product(pairs, repeat=2):
        prod = mat_mul(comms[left], comms[right])
        zero = is_zero_matrix(prod)
        rank = 0 if zero else mat_rank(prod)
        singular = rank < t.dim
        zero_count += zero
        singular_count += singular
        products.append({"left": list(left), "right": list(right),
                         "zero": zero, "rank": rank, "singular": singular})
    candidate = {
        "index": index,
        "mats": [[[str(x) for x in row] for row in m] for m in t.mats],
        "noncommuting_pairs": [list(p) for p in pairs],
        "products": products,
        "zero_products": zero_count,
        "singular_products": singular_count,
    }
    return summary, candidate


def zero_divisor_search(params, jobs: int = 1) -> dict:
    """Seeded search over one family; returns a JSON-ready report.

    params carries n, dim, family, seed and budget. Candidates are the
    examined tuples on which the relations hold while at least one
    pair fails to commute; for each one, every ordered product of two
    nonzero commutators is tested for vanishing and for singularity.
    Budget exhaustion is reported, not raised.
    """
    n = int(params["n"])
    dim = int(params["dim"])
    family = params["family"]
    seed = int(params["seed"])
    budget = int(params["budget"])
    if family not in FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; choose one of {', '.join(FAMILIES)}")
    if n < 1 or dim < 1:
        raise ValueError("n and dim must be positive")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    rng = random.Random(seed)
    drawn = [random_tuple(family, n, dim, rng) for _ in range(budget)]
    indexed = list(enumerate(drawn))
    results = None
    if jobs > 1 and indexed:
        try:
            from multiprocessing import Pool

            with Pool(jobs) as pool:
                results = pool.map(_examine, indexed)
        except OSError:
            results = None
    if results is None:
        results = [_examine(arg) for arg in indexed]
    candidates = [rec for _, rec in results if rec is not None]
    return {
        "params": {"n": n, "dim": dim, "family": family,
                   "seed": seed, "budget": budget},
        "examined": len(indexed),
        "counts": {
            "relations_hold": sum(1 for s, _ in results if s["relations_hold"]),
            "noncommuting_pair": sum(1 for s, _ in results if s["noncommuting"]),
            "candidates": len(candidates),
        },
        "candidates": candidates,
        "budget_exhausted": len(indexed) == budget,
    }
