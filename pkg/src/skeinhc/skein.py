"""Diagram words and hom-space elements for the two-color skein theory.

A diagram word is a bottom-to-top sequence of letters acting on a running
boundary signature over {+,-}: crossings and ladders on adjacent upward
strands, and caps/cups in either orientation.  Words are evaluated to exact
coordinates over the bent basis of the hom space: a morphism s1 -> s2 is
stored by its image in the n-strand even algebra, n = (|s1| + |s2|)/2, under
a fixed bending that rotates every '-' boundary point around the right-hand
side of the diagram (rightmost first, sweeping over what it crosses).

The letter actions in bent coordinates are exact braid multiplications plus
partial closures; the zig-zag, loop, and curl identities pin the convention
and are enforced by the test suite.  Interleaved signatures are supported as
sources and as stored boundaries; composition and tensor product require the
*target* signatures to be in sorted form (all '+' before all '-'), which is
no loss of generality since every hom space has a sorted representative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DomainError
from .hecke_clifford import (
    AlgebraElement,
    _lmul_t,
    _rmul_e,
    _rmul_t,
    basis_keys_even,
    even_convert,
    even_expand,
    perm_identity,
    term_list,
    theta,
)
from .scalars import QIQ, ScalarQ, parse_scalar
from .trace_gram import close_last_strand
from .combinatorics import dim_hom_formula

__all__ = [
    "Crossing",
    "Ladder",
    "Cap",
    "Cup",
    "parse_diagram_word",
    "format_diagram_word",
    "HomElement",
    "identity_hom",
    "hom_basis_element",
    "basis_indices",
    "evaluate",
    "straighten",
    "ladder_normalization",
    "g_projection",
    "random_diagram_word",
    "insert_random_identities",
    "hom_to_json",
    "hom_from_json",
]


@dataclass(frozen=True)
class Crossing:
    index: int  # 0-based position of the left strand
    positive: bool = True


@dataclass(frozen=True)
class Ladder:
    index: int


@dataclass(frozen=True)
class Cap:
    index: int


@dataclass(frozen=True)
class Cup:
    index: int
    pair: str  # '+-' or '-+'


def _check_signature(sig: str) -> str:
    if any(c not in "+-" for c in sig):
        raise DomainError(f"bad signature {sig!r}")
    return sig


def _charge(sig: str) -> int:
    return sig.count("+") - sig.count("-")


# ---------------------------------------------------------------------------
# The evaluation state: running signature plus bent coordinates.


class _State:
    """sig: the running boundary; terms: the bent coordinates as a
    full-variant term dict over m = (#inputs) strands; p1: number of '+'
    in the original source.

    The strand bookkeeping is positional: the k-th '+' of sig is the k-th
    output, and the minus at position j is chained to input
    p1 + #(minuses right of j).
    """

    __slots__ = ("sig", "m", "terms", "p1", "field")

    def __init__(self, source: str, field=QIQ):
        _check_signature(source)
        self.sig = list(source)
        self.p1 = source.count("+")
        self.field = field
        self.m = len(source)
        self.terms = {(0, perm_identity(self.m)): field.one}

    @property
    def x(self) -> AlgebraElement:
        return even_convert(AlgebraElement(self.m, "full", self.terms, self.field))

    def set_even(self, x: AlgebraElement):
        self.m = x.n
        self.terms = even_expand(x).terms

    def rank(self, pos: int) -> int:
        return sum(1 for c in self.sig[:pos] if c == "+")

    def minus_src(self, pos: int) -> int:
        return self.p1 + sum(1 for c in self.sig[pos + 1 :] if c == "-")

    # -- letters ------------------------------------------------------------
    def crossing(self, i: int, positive: bool):
        if not (0 <= i < len(self.sig) - 1):
            raise DomainError(f"crossing index {i + 1} out of range")
        if self.sig[i] != "+" or self.sig[i + 1] != "+":
            raise DomainError("crossings act on two upward strands")
        self.vcross(self.rank(i), positive)

    def ladder(self, i: int):
        if not (0 <= i < len(self.sig) - 1):
            raise DomainError(f"ladder index {i + 1} out of range")
        if self.sig[i] != "+" or self.sig[i + 1] != "+":
            raise DomainError("ladders act on two upward strands")
        self.vladder(self.rank(i))

    def cup(self, i: int, pair: str):
        if pair not in ("+-", "-+"):
            raise DomainError(f"bad cup orientation {pair!r}")
        if not (0 <= i <= len(self.sig)):
            raise DomainError(f"cup index {i + 1} out of range")
        m_old = self.m
        r = self.rank(i)
        u_new = self.p1 + sum(1 for c in self.sig[i:] if c == "-")
        z = self.field.z
        terms = {
            (vmask, w + (m_old,)): c for (vmask, w), c in self.terms.items()
        }
        for k in range(m_old - 1, u_new - 1, -1):  # chain re-laning, below
            terms = _lmul_t_inv(terms, k, z)
        for k in range(m_old - 1, r - 1, -1):  # the sweep, above
            terms = _rmul_t(terms, k, z, inverse=True)
        self.m = m_old + 1
        self.terms = terms
        if pair == "-+":
            self._scale(-self.field.i)
        self.sig[i:i] = list(pair)

    def _scale(self, c):
        self.terms = {k: v * c for k, v in self.terms.items()}

    def cap(self, i: int):
        if not (0 <= i < len(self.sig) - 1):
            raise DomainError(f"cap index {i + 1} out of range")
        pair = self.sig[i] + self.sig[i + 1]
        if pair == "-+":
            self._contract(minus_pos=i, plus_pos=i + 1)
        elif pair == "+-":
            self._contract(minus_pos=i + 1, plus_pos=i)
        else:
            raise DomainError("caps need oppositely oriented adjacent strands")

    def _contract(self, minus_pos: int, plus_pos: int):
        """Join the plus output at plus_pos to the chained minus at minus_pos
        around the right-hand side, then close the freed strand."""
        u = self.minus_src(minus_pos)
        r = self.rank(plus_pos)
        z = self.field.z
        terms = self.terms
        for k in range(r, self.m - 1):  # walk the output to the last slot
            terms = _rmul_t(terms, k, z)
        for k in range(u, self.m - 1):  # walk the input below
            terms = _lmul_t(k, terms, z)
        closed = close_last_strand(
            even_convert(AlgebraElement(self.m, "full", terms, self.field))
        )
        if minus_pos < plus_pos:
            closed = closed.scale(self.field.i)
        self.set_even(closed)
        for pos in sorted((minus_pos, plus_pos), reverse=True):
            del self.sig[pos]

    # virtual letters for hom-space words (rank-addressed, signature-agnostic)
    def vcross(self, r: int, positive: bool = True):
        self.terms = _rmul_t(self.terms, r, self.field.z, inverse=not positive)

    def vladder(self, r: int):
        self.terms = _rmul_e(self.terms, r, self.field.z)

    def apply(self, letter):
        if isinstance(letter, Crossing):
            self.crossing(letter.index, letter.positive)
        elif isinstance(letter, Ladder):
            self.ladder(letter.index)
        elif isinstance(letter, Cup):
            self.cup(letter.index, letter.pair)
        elif isinstance(letter, Cap):
            self.cap(letter.index)
        else:
            raise DomainError(f"unknown diagram letter {letter!r}")

    def clone(self) -> "_State":
        out = _State.__new__(_State)
        out.sig = list(self.sig)
        out.m = self.m
        out.terms = dict(self.terms)
        out.p1 = self.p1
        out.field = self.field
        return out


def _lmul_t_inv(terms: dict, k: int, z) -> dict:
    out = _lmul_t(k, terms, z)
    for key, c in terms.items():
        s = out.get(key)
        s = -c * z if s is None else s - c * z
        if s.is_zero:
            out.pop(key, None)
        else:
            out[key] = s
    return out


def _apply_hom_word(state: _State, key, s_from: str, s_to: str, part_start: int):
    """Apply the canonical word of the basis element `key` of
    Hom(s_from -> s_to) to the segment of the running signature starting at
    part_start (which must currently read s_from).  Requires s_to sorted.
    """
    w, emask = key
    seg = state.sig[part_start : part_start + len(s_from)]
    if "".join(seg) != s_from:
        raise DomainError("segment does not match the morphism source")
    if "-+" in s_to:
        raise DomainError("composition targets must be sorted like '++--'")
    m_to = s_to.count("-")
    rank_offset = state.rank(part_start)
    # cups feeding the extra inputs of the algebra box
    for j in range(m_to):
        state.cup(part_start + len(s_from) + j, "+-")
    # the algebra box itself, addressed by plus ranks
    from .hecke_clifford import reduced_word, _bits

    for i in reduced_word(w):
        state.vcross(rank_offset + i)
    for j in _bits(emask):
        state.vladder(rank_offset + j)
    # caps pairing the source minuses with the top-ranked box outputs,
    # leftmost minus against the highest rank
    n_minus = s_from.count("-")
    p_to = s_to.count("+")
    for step in range(n_minus):
        seg_len = len(s_from) + 2 * m_to - 2 * step
        minus_pos = next(
            pos
            for pos in range(part_start, part_start + seg_len)
            if state.sig[pos] == "-"
        )
        plus_rank = rank_offset + p_to + (n_minus - 1 - step)
        plus_pos = _pos_of_rank(state, plus_rank)
        state._contract(minus_pos=minus_pos, plus_pos=plus_pos)


def _pos_of_rank(state: _State, r: int) -> int:
    count = -1
    for pos, c in enumerate(state.sig):
        if c == "+":
            count += 1
            if count == r:
                return pos
    raise DomainError(f"no plus strand of rank {r}")


# ---------------------------------------------------------------------------
# The hom-space basis: each index (w, emask) names the diagram obtained by
# boxing h_w e_s between cups feeding its trailing inputs and caps returning
# its trailing outputs to the source minuses.  Its bent coordinates are
# computed once per signature pair; on +^n <-> +^n the matrix is the identity.


_COLUMN_CACHE: dict = {}
_INVERSE_CACHE: dict = {}


def _is_plus_pair(source: str, target: str) -> bool:
    m = (len(source) + len(target)) // 2
    return source == target == "+" * m


def _basis_column(source: str, target: str, key, field=QIQ) -> dict:
    """Bent coordinates of one hom-basis diagram (cached per key)."""
    cache_key = (source, target, field.name, key)
    hit = _COLUMN_CACHE.get(cache_key)
    if hit is None:
        state = _State(source, field)
        _apply_hom_word(state, key, source, target, 0)
        if "".join(state.sig) != _sorted_sig(target):
            raise ConsistencyError("basis word left an unexpected boundary")
        hit = dict(state.x.terms)
        _COLUMN_CACHE[cache_key] = hit
    return hit


def _basis_inverse(source: str, target: str, field=QIQ):
    cache_key = (source, target, field.name)
    hit = _INVERSE_CACHE.get(cache_key)
    if hit is None:
        m = (len(source) + len(target)) // 2
        keys = basis_keys_even(m)
        columns = {key: _basis_column(source, target, key, field) for key in keys}
        hit = _invert_columns(keys, columns, field)
        _INVERSE_CACHE[cache_key] = hit
    return hit


def _invert_columns(keys, columns, field):
    """Gauss-Jordan inverse of the change of basis (columns indexed by hom
    keys, rows by algebra keys); ConsistencyError if singular."""
    n = len(keys)
    idx = {key: j for j, key in enumerate(keys)}
    mat = [[field.zero] * n for _ in range(n)]
    for j, key in enumerate(keys):
        for akey, c in columns[key].items():
            mat[idx[akey]][j] = c
    aug = [row + [field.one if r == c else field.zero for c in range(n)]
           for r, row in enumerate(mat)]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if not aug[r][col].is_zero), None
        )
        if pivot is None:
            raise ConsistencyError("bent basis is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero:
                f = aug[r][col]
                aug[r] = [aug[r][k] - f * aug[col][k] for k in range(2 * n)]
    inv_cols = {}
    for j, akey in enumerate(keys):
        col = {}
        for r in range(n):
            v = aug[r][n + j]
            if not v.is_zero:
                col[keys[r]] = v
        inv_cols[akey] = col
    return inv_cols


def _coords_to_algebra(coeffs: dict, source: str, target: str, field) -> dict:
    if _is_plus_pair(source, target):
        return dict(coeffs)
    out: dict = {}
    for key, c in coeffs.items():
        for akey, v in _basis_column(source, target, key, field).items():
            s = out.get(akey, field.zero) + c * v
            if s.is_zero:
                out.pop(akey, None)
            else:
                out[akey] = s
    return out


def _algebra_to_coords(terms: dict, source: str, target: str, field) -> dict:
    if _is_plus_pair(source, target):
        return dict(terms)
    inv = _basis_inverse(source, target, field)
    out: dict = {}
    for akey, c in terms.items():
        for key, v in inv[akey].items():
            s = out.get(key, field.zero) + c * v
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
    return out


# ---------------------------------------------------------------------------
# HomElement: exact coordinates over the bent basis.


class HomElement:
    """A morphism s1 -> s2, stored by bent coordinates over the basis indexed
    by (permutation, ladder mask) of the even algebra on (|s1|+|s2|)/2 strands.
    """

    __slots__ = ("source", "target", "coeffs", "field")

    def __init__(self, source: str, target: str, coeffs=None, field=QIQ):
        self.source = _check_signature(source)
        self.target = _check_signature(target)
        self.field = field
        if _charge(source) != _charge(target):
            if coeffs:
                raise DomainError("nonzero element of a zero hom space")
            self.coeffs = {}
            return
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items():
                if not c.is_zero:
                    self.coeffs[key] = c

    @property
    def strand_count(self) -> int:
        return (len(self.source) + len(self.target)) // 2

    def bend(self) -> AlgebraElement:
        """The element of the even algebra carrying this morphism under the
        fixed bending isomorphism of the hom space."""
        if _charge(self.source) != _charge(self.target):
            raise DomainError("zero hom space has no bent coordinates")
        terms = _coords_to_algebra(self.coeffs, self.source, self.target, self.field)
        return AlgebraElement(self.strand_count, "even", terms, self.field)

    @classmethod
    def unbend(cls, x: AlgebraElement, source: str, target: str) -> "HomElement":
        if x.n != (len(source) + len(target)) // 2:
            raise DomainError("strand count does not match the signatures")
        coeffs = _algebra_to_coords(dict(x.terms), source, target, x.field)
        return cls(source, target, coeffs, x.field)

    # -- linear structure -----------------------------------------------------
    def _compat(self, other: "HomElement"):
        if self.source != other.source or self.target != other.target:
            raise DomainError("mismatched signatures")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            s = out.get(key, self.field.zero) + c
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
        return HomElement(self.source, self.target, out, self.field)

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, c) -> "HomElement":
        return HomElement(
            self.source,
            self.target,
            {k: v * c for k, v in self.coeffs.items()},
            self.field,
        )

    def __eq__(self, other):
        if not isinstance(other, HomElement):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self.coeffs.items())))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def equals(self, other: "HomElement") -> bool:
        """Exact coordinate comparison (signatures must agree)."""
        self._compat(other)
        return self.coeffs == other.coeffs

    # -- categorical structure -------------------------------------------------
    def compose(self, other: "HomElement") -> "HomElement":
        """self then other (other is applied above self)."""
        if other.source != self.target:
            raise DomainError("signature mismatch in composition")
        if self.is_zero or other.is_zero:
            return HomElement(self.source, other.target, {}, self.field)
        bent = self.bend()
        total = None
        for key, c in other.coeffs.items():
            state = _State(self.target, self.field)
            state.p1 = self.source.count("+")
            state.set_even(bent)
            _apply_hom_word(state, key, self.target, other.target, 0)
            if "".join(state.sig) != _sorted_sig(other.target):
                raise DomainError("composition left an unexpected boundary")
            piece = state.x.scale(c)
            total = piece if total is None else total + piece
        return HomElement(
            self.source,
            other.target,
            _algebra_to_coords(
                dict(total.terms), self.source, other.target, self.field
            ),
            self.field,
        )

    def tensor(self, other: "HomElement") -> "HomElement":
        src = self.source + other.source
        tgt = self.target + other.target
        if _charge(self.source) != _charge(self.target) or _charge(
            other.source
        ) != _charge(other.target):
            return HomElement(src, tgt, {}, self.field)
        total = None
        for key1, c1 in self.coeffs.items():
            for key2, c2 in other.coeffs.items():
                state = _State(src, self.field)
                _apply_hom_word(state, key1, self.source, self.target, 0)
                _apply_hom_word(
                    state, key2, other.source, other.target, len(self.target)
                )
                if "".join(state.sig) != _sorted_sig(self.target) + _sorted_sig(
                    other.target
                ):
                    raise DomainError("tensor left an unexpected boundary")
                piece = state.x.scale(c1 * c2)
                total = piece if total is None else total + piece
        if total is None:
            return HomElement(src, tgt, {}, self.field)
        return HomElement(
            src,
            tgt,
            _algebra_to_coords(dict(total.terms), src, tgt, self.field),
            self.field,
        )

    def rotate_180(self) -> "HomElement":
        """The fixed contravariant duality Hom(s1->s2) -> Hom(s2->s1): the
        rotation anti-automorphism applied to the bent coordinates."""
        if _charge(self.source) != _charge(self.target):
            return HomElement(self.target, self.source, {}, self.field)
        return HomElement.unbend(theta(self.bend()), self.target, self.source)

    def __repr__(self):
        return (
            f"HomElement({self.source!r} -> {self.target!r}, "
            f"{len(self.coeffs)} terms)"
        )

    def __str__(self):
        return str(self.bend()) if self.coeffs else "0"


def _sorted_sig(sig: str) -> str:
    return "+" * sig.count("+") + "-" * sig.count("-")


def identity_hom(sig: str, field=QIQ) -> HomElement:
    """The identity morphism; its bent coordinates are the algebra unit."""
    _check_signature(sig)
    m = len(sig)
    unit = AlgebraElement(
        m, "even", {(perm_identity(m), 0): field.one}, field
    )
    return HomElement.unbend(unit, sig, sig)


def hom_basis_element(source: str, target: str, key, field=QIQ) -> HomElement:
    return HomElement(source, target, {key: field.one}, field)


def basis_indices(source: str, target: str) -> list:
    """The index set of the bent basis of Hom(source -> target)."""
    if _charge(source) != _charge(target):
        return []
    m = (len(source) + len(target)) // 2
    keys = basis_keys_even(m)
    if len(keys) != dim_hom_formula(source, target):
        raise ConsistencyError("basis enumeration disagrees with the formula")
    return keys


# ---------------------------------------------------------------------------
# Word evaluation.


def evaluate(letters, source: str, field=QIQ) -> HomElement:
    """Evaluate a diagram word bottom-to-top starting from `source`."""
    state = _State(source, field)
    for letter in letters:
        state.apply(letter)
    target = "".join(state.sig)
    if "-+" in target and not _is_plus_pair(source, target):
        raise DomainError(
            f"word ends on the non-sorted boundary {target!r}; coordinates "
            "need a sorted boundary (cap the open pairs or reorder)"
        )
    coeffs = _algebra_to_coords(dict(state.x.terms), source, target, field)
    return HomElement(source, target, coeffs, field)


def straighten(letters, n: int, field=QIQ) -> AlgebraElement:
    """Evaluate an endomorphism word on n upward strands into the even
    algebra (all caps and cups removed)."""
    hom = evaluate(letters, "+" * n, field)
    if hom.target != "+" * n:
        raise DomainError(
            f"word is not an endomorphism of +^{n}: target {hom.target!r}"
        )
    return hom.bend()


def ladder_normalization(field=QIQ) -> ScalarQ:
    """The scalar -2/(q - q^(-1)) relating the ladder to the projection
    composite through the invertible object."""
    return field.from_int(-2) / field.z


def g_projection(field=QIQ) -> HomElement:
    """The idempotent in End(+-) projecting onto the invertible object: the
    ladder turned on its side (its left leg swung onto the downward strand),
    normalized to categorical trace 1 = dim g."""
    from .trace_gram import categorical_trace

    state = _State("+-", field)
    state.cup(2, "+-")  # fresh pair feeding the turned leg
    state.vladder(0)  # ladder on the two upward strands
    state._contract(minus_pos=1, plus_pos=_pos_of_rank(state, 0))
    turned = HomElement.unbend(state.x, "+-", "+-")
    tr = categorical_trace(turned)
    if tr.is_zero:
        raise ConsistencyError("turned ladder has vanishing trace")
    proj = turned.scale(field.one / tr)
    if not proj.compose(proj).equals(proj):
        raise ConsistencyError("normalized turned ladder is not idempotent")
    return proj


# ---------------------------------------------------------------------------
# Word grammar: x3, x3' (crossing), e2 (ladder), cap2, cup2< / cup2>.


def parse_diagram_word(text: str) -> list:
    """Parse the diagram-word grammar (1-based positions).

    cup< creates a (+,-) pair (flow right-to-left under the arc); cup>
    creates (-,+).  Caps may carry a redundant < or > suffix.
    """
    letters = []
    for token in text.split():
        kind = None
        for prefix in ("cap", "cup", "x", "e"):
            if token.startswith(prefix):
                kind = prefix
                body = token[len(prefix) :]
                break
        if kind is None:
            raise DomainError(f"bad diagram letter {token!r}")
        suffix = ""
        while body and body[-1] in "'<>":
            suffix = body[-1] + suffix
            body = body[:-1]
        if not body.isdigit():
            raise DomainError(f"bad diagram letter {token!r}")
        idx = int(body) - 1
        if kind == "x":
            letters.append(Crossing(idx, positive=("'" not in suffix)))
        elif kind == "e":
            letters.append(Ladder(idx))
        elif kind == "cap":
            letters.append(Cap(idx))
        else:
            if suffix == "<":
                letters.append(Cup(idx, "+-"))
            elif suffix == ">":
                letters.append(Cup(idx, "-+"))
            else:
                raise DomainError(f"cup needs an orientation suffix: {token!r}")
    return letters


def format_diagram_word(letters) -> str:
    out = []
    for letter in letters:
        if isinstance(letter, Crossing):
            out.append(f"x{letter.index + 1}" + ("" if letter.positive else "'"))
        elif isinstance(letter, Ladder):
            out.append(f"e{letter.index + 1}")
        elif isinstance(letter, Cap):
            out.append(f"cap{letter.index + 1}")
        elif isinstance(letter, Cup):
            out.append(f"cup{letter.index + 1}" + ("<" if letter.pair == "+-" else ">"))
        else:
            raise DomainError(f"unknown letter {letter!r}")
    return " ".join(out)


# ---------------------------------------------------------------------------
# Random words and identity-preserving rewrites (well-definedness checks).


def random_diagram_word(n: int, rng, length: int = 8, max_cups: int = 2) -> list:
    """A random valid endomorphism word on +^n, mixing crossings, ladders,
    and matched cup/cap pairs."""
    letters = []
    sig = ["+"] * n
    open_extra = 0
    for _ in range(length):
        options = []
        plus_adj = [
            i for i in range(len(sig) - 1) if sig[i] == "+" and sig[i + 1] == "+"
        ]
        if plus_adj:
            options += [("x", i) for i in plus_adj] + [("e", i) for i in plus_adj]
        if open_extra < max_cups:
            options += [("cup", i) for i in range(len(sig) + 1)]
        cappable = [
            i
            for i in range(len(sig) - 1)
            if sig[i] != sig[i + 1]
        ]
        if open_extra and cappable:
            options += [("cap", i) for i in cappable]
        if not options:
            break
        kind, i = rng.choice(options)
        if kind == "x":
            letters.append(Crossing(i, positive=rng.random() < 0.5))
        elif kind == "e":
            letters.append(Ladder(i))
        elif kind == "cup":
            pair = rng.choice(["+-", "-+"])
            letters.append(Cup(i, pair))
            sig[i:i] = list(pair)
            open_extra += 1
            continue
        else:
            letters.append(Cap(i))
            del sig[i : i + 2]
            open_extra -= 1
            continue
    # close any remaining minuses against an adjacent plus
    while "-" in sig:
        for i in range(len(sig) - 1):
            if sig[i] != sig[i + 1]:
                letters.append(Cap(i))
                del sig[i : i + 2]
                break
    return letters


def insert_random_identities(letters, source: str, rng, count: int = 3) -> list:
    """Insert `count` random identity-valued letter pairs (R2 pairs on
    adjacent pluses, or zig-zag cup/cap pairs) at random slices; the result
    evaluates to the same morphism."""
    letters = list(letters)
    for _ in range(count):
        k = rng.choice(range(len(letters) + 1))
        sig = _signature_at(letters, source, k)
        options = []
        for i in range(len(sig) - 1):
            if sig[i] == "+" and sig[i + 1] == "+":
                options.append([Crossing(i, True), Crossing(i, False)])
                options.append([Crossing(i, False), Crossing(i, True)])
        for i, c in enumerate(sig):
            if c == "+":
                # zig-zags threading the upward strand through a new pair
                options.append([Cup(i, "+-"), Cap(i + 1)])
                options.append([Cup(i + 1, "-+"), Cap(i)])
            else:
                options.append([Cup(i, "-+"), Cap(i + 1)])
                options.append([Cup(i + 1, "+-"), Cap(i)])
        if not options:
            continue
        pair = rng.choice(options)
        letters[k:k] = pair
    return letters


def _signature_at(letters, source: str, k: int) -> str:
    sig = list(source)
    for letter in letters[:k]:
        if isinstance(letter, Cup):
            sig[letter.index : letter.index] = list(letter.pair)
        elif isinstance(letter, Cap):
            del sig[letter.index : letter.index + 2]
        elif isinstance(letter, Crossing):
            sig[letter.index], sig[letter.index + 1] = (
                sig[letter.index + 1],
                sig[letter.index],
            )
    return "".join(sig)


def _signature_trace(letters, source: str) -> list:
    return [_signature_at(letters, source, k) for k in range(len(letters) + 1)]


# ---------------------------------------------------------------------------
# JSON round-trip.


def hom_to_json(hom: HomElement) -> str:
    return json.dumps(
        {
            "source": hom.source,
            "target": hom.target,
            "terms": term_list(hom.bend()) if hom.coeffs else [],
        },
        sort_keys=True,
    )


def hom_from_json(text: str, field=QIQ) -> HomElement:
    data = json.loads(text)
    terms = {}
    for item in data["terms"]:
        w = tuple(x - 1 for x in item["w"])
        emask = sum(1 << k for k, c in enumerate(item["s"]) if c == "1")
        terms[(w, emask)] = parse_scalar(item["coeff"])
    if not terms:
        return HomElement(data["source"], data["target"], {}, field)
    m = (len(data["source"]) + len(data["target"])) // 2
    bent = AlgebraElement(m, "even", terms, field)
    return HomElement.unbend(bent, data["source"], data["target"])


from .errors import ConsistencyError  # noqa: E402
