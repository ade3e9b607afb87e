"""Young-diagram machinery: staircase decompositions and path-counting oracles.

Diagrams are weakly decreasing tuples of positive integers; () is the empty
diagram.  Paths live either on the Young graph (add one box per step) or on
the double Young graph, whose vertices are pairs of diagrams and whose steps
add a box to the first coordinate or remove one from the second.

>>> hook11((2, 2))
3
>>> count_standard_tableaux((2, 1))
2
>>> count_pair_tableaux((2,), (2, 1))
3
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import ConsistencyError, DomainError

__all__ = [
    "YoungDiagram",
    "YoungPair",
    "as_diagram",
    "hook11",
    "transpose",
    "partitions",
    "add_box_results",
    "remove_box_results",
    "count_standard_tableaux",
    "count_pair_tableaux",
    "count_paths_double_young",
    "decompose_object",
    "pair_weight",
    "dim_end_oracle",
    "dim_hom_formula",
]

YoungDiagram = tuple  # tuple[int, ...], weakly decreasing positive parts


def as_diagram(rows) -> YoungDiagram:
    """Canonicalize a row sequence: trim zeros, check weak decrease."""
    rows = tuple(int(r) for r in rows if int(r) != 0)
    if any(r < 0 for r in rows):
        raise DomainError(f"negative row length in {rows}")
    if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
        raise DomainError(f"rows must be weakly decreasing: {rows}")
    return rows


def hook11(lam: YoungDiagram) -> int:
    """Hook length at the top-left box, lam_1 + len(lam) - 1; 0 for the empty diagram."""
    if not lam:
        return 0
    return lam[0] + len(lam) - 1


def transpose(lam: YoungDiagram) -> YoungDiagram:
    """Reflect rows into columns.

    >>> transpose((3,))
    (1, 1, 1)
    """
    if not lam:
        return ()
    return tuple(sum(1 for r in lam if r > c) for c in range(lam[0]))


def size(lam: YoungDiagram) -> int:
    return sum(lam)


def contains(mu: YoungDiagram, lam: YoungDiagram) -> bool:
    """mu subseteq lam, rowwise."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def add_box_results(lam: YoungDiagram) -> list[YoungDiagram]:
    """All diagrams obtained from lam by adding one box."""
    out = []
    for k in range(len(lam) + 1):
        cur = lam[k] if k < len(lam) else 0
        above = lam[k - 1] if k > 0 else None
        if above is None or cur < above:
            out.append(as_diagram(lam[:k] + (cur + 1,) + lam[k + 1 :]))
    return out


def remove_box_results(lam: YoungDiagram) -> list[YoungDiagram]:
    """All diagrams obtained from lam by removing one box."""
    out = []
    for k in range(len(lam)):
        below = lam[k + 1] if k + 1 < len(lam) else 0
        if lam[k] > below:
            out.append(as_diagram(lam[:k] + (lam[k] - 1,) + lam[k + 1 :]))
    return out


def partitions(n: int, max_part: int | None = None):
    """Yield all partitions of n with parts bounded by max_part."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def count_standard_tableaux(lam: YoungDiagram) -> int:
    """Number of standard tableaux of shape lam, by path counting on the
    Young graph (no hook-length formula involved).

    >>> count_standard_tableaux((2, 2))
    2
    """
    lam = as_diagram(lam)
    if not lam:
        return 1
    return sum(count_standard_tableaux(mu) for mu in remove_box_results(lam))


def count_pair_tableaux(mu: YoungDiagram, lam: YoungDiagram) -> int:
    """Number of fillings of lam with 1..|lam| that are standard on mu and
    standard on the skew part lam/mu (no constraint across the two regions).

    Returns 0 when mu is not contained in lam.
    """
    mu, lam = as_diagram(mu), as_diagram(lam)
    if not contains(mu, lam):
        return 0
    memo: dict = {}
    full_mu = mu
    skew_full = tuple(
        lam[k] - (mu[k] if k < len(mu) else 0) for k in range(len(lam))
    )

    def rec(inner: YoungDiagram, skew_filled: tuple) -> int:
        # inner: the sub-diagram of mu filled so far; skew_filled[k]: boxes
        # filled so far in row k of lam/mu (a left-justified prefix of it).
        key = (inner, skew_filled)
        if key in memo:
            return memo[key]
        if inner == full_mu and skew_filled == skew_full:
            return 1
        total = 0
        for nxt in add_box_results(inner):
            if contains(nxt, full_mu):
                total += rec(nxt, skew_filled)
        for k in range(len(lam)):
            if skew_filled[k] >= skew_full[k]:
                continue
            # next open cell of skew row k is at column mu_k + skew_filled[k];
            # the cell above it (inside lam/mu) must already be filled.
            col = (full_mu[k] if k < len(full_mu) else 0) + skew_filled[k]
            if k > 0:
                mu_above = full_mu[k - 1] if k - 1 < len(full_mu) else 0
                if col >= mu_above and col - mu_above >= skew_filled[k - 1]:
                    continue
            total += rec(
                inner, skew_filled[:k] + (skew_filled[k] + 1,) + skew_filled[k + 1 :]
            )
        memo[key] = total
        return total

    return rec((), tuple(0 for _ in lam))


def count_paths_double_young(
    start: tuple[YoungDiagram, YoungDiagram],
    end: tuple[YoungDiagram, YoungDiagram],
    length: int,
) -> int:
    """Oriented paths on the double Young graph: each step adds a box to the
    first coordinate or removes a box from the second.

    >>> count_paths_double_young(((), ()), ((2, 1), ()), 3)
    2
    """
    if length < 0:
        raise DomainError("path length must be nonnegative")
    start = (as_diagram(start[0]), as_diagram(start[1]))
    end = (as_diagram(end[0]), as_diagram(end[1]))
    memo: dict = {}

    def rec(state, remaining):
        if remaining == 0:
            return 1 if state == end else 0
        key = (state, remaining)
        if key in memo:
            return memo[key]
        lam, mu = state
        total = 0
        for nxt in add_box_results(lam):
            if contains(nxt, end[0]):
                total += rec((nxt, mu), remaining - 1)
        for nxt in remove_box_results(mu):
            if contains(end[1], nxt):
                total += rec((lam, nxt), remaining - 1)
        memo[key] = total
        return total

    return rec(start, length)


@dataclass(frozen=True)
class YoungPair:
    """A pair (lam, mu) of diagrams encoding a dominant integral GL(N) weight."""

    lam: YoungDiagram
    mu: YoungDiagram
    N: int

    def __post_init__(self):
        if len(self.lam) + len(self.mu) > self.N:
            raise DomainError(
                f"pair ({self.lam}, {self.mu}) needs more than {self.N} rows"
            )

    def weight(self) -> tuple[int, ...]:
        return pair_weight(self.lam, self.mu, self.N)


def pair_weight(lam: YoungDiagram, mu: YoungDiagram, N: int) -> tuple[int, ...]:
    """The weight lam_1 e_1 + ... - mu_1 e_N attached to a diagram pair."""
    if len(lam) + len(mu) > N:
        raise DomainError("diagram pair does not fit in N rows")
    entries = [0] * N
    for k, r in enumerate(lam):
        entries[k] = r
    for k, r in enumerate(mu):  # mu_1 ends up in the last slot
        entries[N - 1 - k] = -r
    return tuple(entries)


def decompose_object(N: int, parity: str) -> list[tuple[YoungPair, tuple[int, ...]]]:
    """Summands of the even (parity='even') or odd (parity='odd') algebra
    object: all mu with hook11(mu) < N and |mu| of the given parity, as pairs
    (mu, transpose(mu)) with their GL(N) weights.

    Sorted by (|mu|, rows lexicographically).
    """
    if N < 2:
        raise DomainError("decompose_object requires N >= 2")
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    want = 0 if parity == "even" else 1
    found = []
    # hook11(mu) < N forces mu_1 <= N-1 and len(mu) <= N-1, hence |mu| bounded.
    for n in range(0, (N - 1) * (N - 1) + 1):
        if n % 2 != want:
            continue
        for mu in partitions(n, N - 1):
            if hook11(mu) < N:
                pair = YoungPair(mu, transpose(mu), N)
                found.append((n, mu, pair))
    found.sort(key=lambda t: (t[0], t[1]))
    return [(pair, pair.weight()) for _, _, pair in found]


def dim_end_oracle(n: int) -> int:
    """Dimension of the n-strand endomorphism algebra by explicit path
    counting on the (double) Young graph, with the closed form 2^(n-1)*n!
    asserted as a cross-check.
    """
    if n < 1:
        raise DomainError("dim_end_oracle requires n >= 1")
    total = 0
    for lam in partitions(n):
        left = count_standard_tableaux(lam)  # paths () -> lam
        right = 0
        for m in range(0, n + 1, 2):
            for mu in partitions(m):
                right += count_paths_double_young((mu, transpose(mu)), (lam, ()), n)
        total += left * right
    expected = 2 ** (n - 1) * factorial(n)
    if total != expected:
        raise ConsistencyError(
            f"path count {total} disagrees with 2^(n-1)*n! = {expected} at n={n}"
        )
    return total


def dim_hom_formula(s1: str, s2: str) -> int:
    """Dimension of the hom space between boundary signatures.

    Zero unless the signed sums agree; 1 for the empty boundary; otherwise
    2^(m/2-1) * (m/2)! with m the total number of boundary points.

    >>> dim_hom_formula("+++", "+++")
    24
    >>> dim_hom_formula("+", "-")
    0
    """
    for s in (s1, s2):
        if any(c not in "+-" for c in s):
            raise DomainError(f"bad signature {s!r}")
    charge = lambda s: s.count("+") - s.count("-")
    if charge(s1) != charge(s2):
        return 0
    m = len(s1) + len(s2)
    if m == 0:
        return 1
    half = m // 2
    return 2 ** (half - 1) * factorial(half)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
