"""Normal forms in the Hecke-Clifford algebras and their even parts.

The n-strand algebra is generated by braid-type generators t_j (touching
strands j, j+1; quadratic relation t - t^(-1) = q - q^(-1), braid relations)
and Clifford generators v_j on strand j (v_j^2 = 1, distinct v's
anticommute), with mixed relations that move v's leftward past t's:

    t_j v_j     = v_{j+1} t_j
    t_j v_{j+1} = v_j t_j - (q - q^(-1)) (v_j - v_{j+1})
    t_j v_l     = v_l t_j                (l != j, j+1)

The full algebra has basis c_s h_w (Clifford monomial on the left, s over
{0,1}^n, w over S_n); the even part has basis h_w e_s with e_j = v_j v_{j+1}
and s over {0,1}^(n-1).  Everything here is exact; coefficients live in any
field object from :mod:`.scalars` (rational functions by default).

Indices are 0-based internally; the public word grammar ("t1 e1 v2", with
"t1'" for an inverse) is 1-based.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, ParityError
from .scalars import QIQ, q_power

__all__ = [
    "AlgebraElement",
    "identity_element",
    "t_element",
    "e_element",
    "v_element",
    "normalize",
    "normalize_full",
    "multiply",
    "even_convert",
    "even_expand",
    "alpha",
    "theta",
    "antisymmetrizer",
    "parse_generator_word",
    "reduced_word",
    "perm_identity",
    "perm_mul",
    "perm_inverse",
    "inversions",
    "all_perms",
    "basis_keys_even",
    "closure_dimension",
]

Perm = tuple  # tuple[int, ...], images of 0..n-1


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(a: Perm, b: Perm) -> Perm:
    """(a o b)(k) = a(b(k))."""
    return tuple(a[x] for x in b)


def perm_inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for k, v in enumerate(a):
        out[v] = k
    return tuple(out)


def inversions(a: Perm) -> int:
    n = len(a)
    return sum(1 for j in range(n) for k in range(j + 1, n) if a[j] > a[k])


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """Lexicographically smallest reduced word for w (letters are 0-based
    generator indices), found greedily by smallest left descent."""
    word = []
    w = list(w)
    while True:
        for i in range(len(w) - 1):
            if w.index(i) > w.index(i + 1):
                word.append(i)
                pi, pj = w.index(i), w.index(i + 1)
                w[pi], w[pj] = i + 1, i
                break
        else:
            return tuple(word)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n sorted by (length, one-line), a deterministic basis order."""
    from itertools import permutations

    return tuple(sorted(permutations(range(n)), key=lambda w: (inversions(w), w)))


def _bits(mask: int) -> list[int]:
    out = []
    k = 0
    while mask >> k:
        if (mask >> k) & 1:
            out.append(k)
        k += 1
    return out


def _clifford_normalize(seq) -> tuple[int, int]:
    """Reorder a product of v's with given indices into the sorted monomial.

    Returns (sign, mask); repeated indices cancel in pairs (v^2 = 1).
    """
    sign = 1
    mask = 0
    for l in reversed(seq):
        below = mask & ((1 << l) - 1)
        if below:
            sign *= -1 if (bin(below).count("1") & 1) else 1
        mask ^= 1 << l
    return sign, mask


def _e_to_v(emask: int) -> int:
    """Expand a product of e_j = v_j v_{j+1} (lex order) into a v-monomial.

    Maximal runs [a..b] of e-indices telescope to the pair v_a v_{b+1}; the
    resulting monomial is sorted with sign +1.
    """
    vmask = 0
    bits = _bits(emask)
    k = 0
    while k < len(bits):
        a = bits[k]
        b = a
        while k + 1 < len(bits) and bits[k + 1] == b + 1:
            k += 1
            b += 1
        vmask |= (1 << a) | (1 << (b + 1))
        k += 1
    return vmask


def _v_to_e(vmask: int) -> int:
    """Inverse of _e_to_v on even-size sorted v-monomials."""
    bits = _bits(vmask)
    if len(bits) % 2:
        raise ParityError("odd Clifford degree has no e-monomial form")
    emask = 0
    for k in range(0, len(bits), 2):
        for j in range(bits[k], bits[k + 1]):
            emask |= 1 << j
    return emask


class AlgebraElement:
    """A finite linear combination of basis monomials.

    variant 'full': keys (vmask, w) meaning c_vmask * h_w;
    variant 'even': keys (w, emask) meaning h_w * e_emask.
    Zero coefficients are never stored.
    """

    __slots__ = ("n", "variant", "field", "terms")

    def __init__(self, n: int, variant: str, terms: dict | None = None, field=QIQ):
        if variant not in ("full", "even"):
            raise DomainError(f"unknown variant {variant!r}")
        self.n = n
        self.variant = variant
        self.field = field
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not c.is_zero:
                    self.terms[key] = c

    # -- ring structure -----------------------------------------------------
    def _compat(self, other: "AlgebraElement"):
        if (
            not isinstance(other, AlgebraElement)
            or other.n != self.n
            or other.variant != self.variant
        ):
            raise DomainError("mismatched strand counts or variants")

    def __add__(self, other):
        self._compat(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, self.field.zero) + c
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
        return AlgebraElement(self.n, self.variant, out, self.field)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(
            self.n, self.variant, {k: -c for k, c in self.terms.items()}, self.field
        )

    def scale(self, c) -> "AlgebraElement":
        if c == self.field.zero or (hasattr(c, "is_zero") and c.is_zero):
            return AlgebraElement(self.n, self.variant, {}, self.field)
        return AlgebraElement(
            self.n, self.variant, {k: v * c for k, v in self.terms.items()}, self.field
        )

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.n == other.n
            and self.variant == other.variant
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.variant, frozenset(self.terms.items())))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def map_coefficients(self, fn, field) -> "AlgebraElement":
        """Apply fn to every coefficient (e.g. specialization at a root of unity)."""
        out = {}
        for key, c in self.terms.items():
            v = fn(c)
            if not v.is_zero:
                out[key] = v
        return AlgebraElement(self.n, self.variant, out, field)

    def __repr__(self):
        return f"AlgebraElement(n={self.n}, {self.variant}, {len(self.terms)} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=_term_sort_key(self.variant)):
            c = self.terms[key]
            parts.append(f"({c}) * {_monomial_str(key, self.variant)}")
        return " + ".join(parts)


def _term_sort_key(variant):
    if variant == "full":
        return lambda key: (inversions(key[1]), key[1], key[0])
    return lambda key: (inversions(key[0]), key[0], key[1])


def _monomial_str(key, variant) -> str:
    if variant == "full":
        vmask, w = key
        vs = "*".join(f"v{l + 1}" for l in _bits(vmask))
        hs = "*".join(f"t{i + 1}" for i in reduced_word(w))
        parts = [vs, hs]  # Clifford tokens left of the braid part
    else:
        w, emask = key
        hs = "*".join(f"t{i + 1}" for i in reduced_word(w))
        es = "*".join(f"e{j + 1}" for j in _bits(emask))
        parts = [hs, es]  # braid part left of the ladder monomial
    body = "*".join(x for x in parts if x)
    return body or "1"


def identity_element(n: int, variant: str = "even", field=QIQ) -> AlgebraElement:
    key = (0, perm_identity(n)) if variant == "full" else (perm_identity(n), 0)
    return AlgebraElement(n, variant, {key: field.one}, field)


def t_element(n: int, j: int, field=QIQ, inverse: bool = False) -> AlgebraElement:
    """The generator t_{j+1} (0-based j) as an even-variant element."""
    _check_index(n, j, n - 1)
    w = _simple(n, j)
    elem = AlgebraElement(n, "even", {(w, 0): field.one}, field)
    if inverse:
        elem = elem - identity_element(n, "even", field).scale(field.z)
    return elem


def e_element(n: int, j: int, field=QIQ) -> AlgebraElement:
    _check_index(n, j, n - 1)
    return AlgebraElement(n, "even", {(perm_identity(n), 1 << j): field.one}, field)


def v_element(n: int, j: int, field=QIQ) -> AlgebraElement:
    _check_index(n, j, n)
    return AlgebraElement(n, "full", {(1 << j, perm_identity(n)): field.one}, field)


def _check_index(n: int, j: int, bound: int):
    if not 0 <= j < bound:
        raise DomainError(f"generator index {j + 1} out of range for {n} strands")


def _simple(n: int, j: int) -> Perm:
    w = list(range(n))
    w[j], w[j + 1] = w[j + 1], w[j]
    return tuple(w)


# ---------------------------------------------------------------------------
# Left multiplication by generators on full-variant term dictionaries.


def _add_term(out: dict, key, c):
    s = out.get(key)
    s = c if s is None else s + c
    if s.is_zero:
        out.pop(key, None)
    else:
        out[key] = s


def _hecke_lmul(j: int, w: Perm, c, z, out: dict, vmask: int):
    """t_j * h_w into out (full-variant keys with fixed vmask)."""
    wp = tuple(j + 1 if x == j else j if x == j + 1 else x for x in w)
    _add_term(out, (vmask, wp), c)
    if w.index(j) > w.index(j + 1):  # descent: extra (q - q^(-1)) h_w term
        _add_term(out, (vmask, w), c * z)


def _lmul_t(j: int, terms: dict, z) -> dict:
    """Left-multiply a full-variant term dict by t_j."""
    out: dict = {}
    for (vmask, w), coeff in terms.items():
        vlist = _bits(vmask)

        def rec(k: int, emitted: tuple, c):
            if k == len(vlist):
                sign, mask = _clifford_normalize(emitted)
                _hecke_lmul(j, w, c if sign > 0 else -c, z, out, mask)
                return
            l = vlist[k]
            if l == j:
                rec(k + 1, emitted + (j + 1,), c)
            elif l == j + 1:
                rec(k + 1, emitted + (j,), c)
                rest = tuple(vlist[k + 1 :])
                for idx, cc in ((j, -c * z), (j + 1, c * z)):
                    sign, mask = _clifford_normalize(emitted + (idx,) + rest)
                    _add_term(out, (mask, w), cc if sign > 0 else -cc)
            else:
                rec(k + 1, emitted + (l,), c)

        rec(0, (), coeff)
    return out


def _lmul_v(l: int, terms: dict) -> dict:
    """Left-multiply a full-variant term dict by v_l."""
    out: dict = {}
    for (vmask, w), coeff in terms.items():
        below = vmask & ((1 << l) - 1)
        sign = -1 if (bin(below).count("1") & 1) else 1
        _add_term(out, (vmask ^ (1 << l), w), coeff if sign > 0 else -coeff)
    return out


def _rmul_t(terms: dict, j: int, z, inverse: bool = False) -> dict:
    """Right-multiply a full-variant term dict by t_j (the Clifford part is
    untouched; pure Hecke right multiplication)."""
    out: dict = {}
    for (vmask, w), coeff in terms.items():
        wp = list(w)
        wp[j], wp[j + 1] = wp[j + 1], wp[j]
        wp = tuple(wp)
        if w[j] < w[j + 1]:  # ascent
            _add_term(out, (vmask, wp), coeff)
            if inverse:
                _add_term(out, (vmask, w), -coeff * z)
        else:
            _add_term(out, (vmask, wp), coeff)
            if not inverse:
                _add_term(out, (vmask, w), coeff * z)
    return out


def _rmul_v(terms: dict, l: int, z) -> dict:
    """Right-multiply a full-variant term dict by v_l: the token is pushed
    left through the braid word; quadratic corrections drop braid letters,
    so partial products are re-multiplied with the honest Hecke rule."""
    out: dict = {}
    cache: dict = {}
    for (vmask, w), coeff in terms.items():
        pieces = cache.get(w)
        if pieces is None:
            pieces = _v_walk(w, l, z)
            cache[w] = pieces
        for (idx, s), mult in pieces.items():
            above = vmask >> (idx + 1)
            sign = -1 if (bin(above).count("1") & 1) else 1
            c = coeff * mult
            _add_term(out, (vmask ^ (1 << idx), s), c if sign > 0 else -c)
    return out


_VWALK_CACHE: dict = {}


def _v_walk(w: Perm, l: int, z) -> dict:
    """Pieces (token index, surviving suffix perm) -> multiplier for pushing
    a single v-token right-to-left through the braid word of w (cached)."""
    key = (w, l, z)
    hit = _VWALK_CACHE.get(key)
    if hit is not None:
        return hit
    pieces = {(l, perm_identity(len(w))): z ** 0}
    for i in reversed(reduced_word(w)):
        nxt: dict = {}
        for (idx, s), c in pieces.items():
            if idx == i:
                _lmul_piece(nxt, i + 1, s, c, i, z)
            elif idx == i + 1:
                _lmul_piece(nxt, i, s, c, i, z)
                _add_piece(nxt, i, s, -c * z)
                _add_piece(nxt, i + 1, s, c * z)
            else:
                _lmul_piece(nxt, idx, s, c, i, z)
        pieces = nxt
    _VWALK_CACHE[key] = pieces
    return pieces


def _add_piece(pieces: dict, idx: int, s: Perm, c):
    key = (idx, s)
    v = pieces.get(key)
    v = c if v is None else v + c
    if v.is_zero:
        pieces.pop(key, None)
    else:
        pieces[key] = v


def _lmul_piece(pieces: dict, idx: int, s: Perm, c, i: int, z):
    """Add contributions of the token (index idx) followed by t_i * h_s."""
    sp = tuple(i + 1 if x == i else i if x == i + 1 else x for x in s)
    _add_piece(pieces, idx, sp, c)
    if s.index(i) > s.index(i + 1):  # descent: extra z-term
        _add_piece(pieces, idx, s, c * z)


def _rmul_e(terms: dict, j: int, z) -> dict:
    """Right-multiply a full-variant term dict by e_j = v_j v_{j+1}."""
    return _rmul_v(_rmul_v(terms, j, z), j + 1, z)


def _lmul_letter(letter, terms: dict, field) -> dict:
    kind = letter[0]
    if kind == "t":
        _, j, exp = letter
        out = _lmul_t(j, terms, field.z)
        if exp < 0:
            for key, c in terms.items():
                _add_term(out, key, -c * field.z)
        return out
    if kind == "v":
        return _lmul_v(letter[1], terms)
    if kind == "e":
        j = letter[1]
        return _lmul_v(j, _lmul_v(j + 1, terms))
    raise DomainError(f"unknown generator letter {letter!r}")


def normalize_full(letters, n: int, field=QIQ) -> AlgebraElement:
    """Expand a generator word into the full-variant basis c_s h_w."""
    terms = {(0, perm_identity(n)): field.one}
    for letter in reversed(list(letters)):
        _validate_letter(letter, n)
        terms = _lmul_letter(letter, terms, field)
    return AlgebraElement(n, "full", terms, field)


def normalize(letters, n: int, field=QIQ) -> AlgebraElement:
    """Expand a generator word; even words come back in the h_w e_s basis.

    Words containing an odd total number of v's stay in the full variant.
    """
    letters = list(letters)
    full = normalize_full(letters, n, field)
    degrees = {bin(vmask).count("1") & 1 for (vmask, _w) in full.terms} or {0}
    if degrees == {0}:
        return even_convert(full)
    return full


def _validate_letter(letter, n: int):
    kind = letter[0]
    if kind in ("t", "e"):
        _check_index(n, letter[1], n - 1)
    elif kind == "v":
        _check_index(n, letter[1], n)
    else:
        raise DomainError(f"unknown generator letter {letter!r}")


# ---------------------------------------------------------------------------
# Products and basis conversions.


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n or a.variant != b.variant:
        raise DomainError("mismatched strand counts or variants")
    if a.variant == "even":
        full = even_expand(a).terms
        z = a.field.z
        out: dict = {}
        for (w, emask), cb in b.terms.items():
            cur = {key: c * cb for key, c in full.items()}
            for i in reduced_word(w):
                cur = _rmul_t(cur, i, z)
            for j in _bits(emask):
                cur = _rmul_e(cur, j, z)
            for key, c in cur.items():
                _add_term(out, key, c)
        return even_convert(AlgebraElement(a.n, "full", out, a.field))
    out: dict = {}
    for (vmask, w), ca in a.terms.items():
        cur = {key: c * ca for key, c in b.terms.items()}
        for i in reversed(reduced_word(w)):
            cur = _lmul_t(i, cur, a.field.z)
        for l in sorted(_bits(vmask), reverse=True):
            cur = _lmul_v(l, cur)
        for key, c in cur.items():
            _add_term(out, key, c)
    return AlgebraElement(a.n, "full", out, a.field)


_EXPAND_CACHE: dict = {}


def _expand_monomial(n: int, w: Perm, emask: int, field) -> dict:
    """Full-basis expansion of the even basis monomial h_w e_s (cached)."""
    key = (field.name, n, w, emask)
    hit = _EXPAND_CACHE.get(key)
    if hit is None:
        cur = {(_e_to_v(emask), perm_identity(n)): field.one}
        for i in reversed(reduced_word(w)):
            cur = _lmul_t(i, cur, field.z)
        _EXPAND_CACHE[key] = hit = cur
    return hit


def even_expand(a: AlgebraElement) -> AlgebraElement:
    """Rewrite an even-variant element in the full basis c_s h_w."""
    if a.variant == "full":
        return a
    out: dict = {}
    for (w, emask), c in a.terms.items():
        for key, cc in _expand_monomial(a.n, w, emask, a.field).items():
            _add_term(out, key, cc * c)
    return AlgebraElement(a.n, "full", out, a.field)


def even_convert(a: AlgebraElement) -> AlgebraElement:
    """Rewrite a full-variant element of even Clifford degree in the basis
    h_w e_s.  The change of basis is triangular in the braid length: the
    top-length part of h_w e_s is the single monomial c_{w(s)} h_w.
    """
    if a.variant == "even":
        return a
    residual = dict(a.terms)
    out: dict = {}
    while residual:
        top = max(inversions(w) for (_vm, w) in residual)
        batch = [(vm, w) for (vm, w) in residual if inversions(w) == top]
        for vm, w in batch:
            c = residual.get((vm, w))
            if c is None or c.is_zero:
                continue
            winv = perm_inverse(w)
            tmask = 0
            for l in _bits(vm):
                tmask |= 1 << winv[l]
            emask = _v_to_e(tmask)  # raises ParityError on odd degree
            expansion = _expand_monomial(a.n, w, emask, a.field)
            gamma = expansion.get((vm, w))
            if gamma is None or gamma.is_zero:
                raise ConsistencyError("lost leading term in even conversion")
            ratio = c / gamma
            _add_term(out, (w, emask), ratio)
            for key, cc in expansion.items():
                _add_term(residual, key, -cc * ratio)
    return AlgebraElement(a.n, "even", out, a.field)


def alpha(a: AlgebraElement) -> AlgebraElement:
    """The order-two automorphism v_j -> -v_j, t_j -> t_j (full variant)."""
    if a.variant != "full":
        raise DomainError("alpha acts on the full variant")
    out = {}
    for (vmask, w), c in a.terms.items():
        out[(vmask, w)] = -c if (bin(vmask).count("1") & 1) else c
    return AlgebraElement(a.n, "full", out, a.field)


def theta(a: AlgebraElement) -> AlgebraElement:
    """The 180-degree rotation anti-automorphism of the even part:
    t_i -> t_{n-1-i}, e_i -> e_{n-1-i}, with products reversed.
    """
    if a.variant != "even":
        raise DomainError("theta acts on the even variant")
    n = a.n
    w0 = tuple(range(n - 1, -1, -1))
    flipped: dict = {}
    for (w, emask), c in a.terms.items():
        wp = perm_mul(w0, perm_mul(perm_inverse(w), w0))
        ref = 0
        for j in _bits(emask):
            ref |= 1 << (n - 2 - j)
        # theta(h_w e_s) = e_ref(s) h_wp, a single full-variant monomial
        _add_term(flipped, (_e_to_v(ref), wp), c)
    return even_convert(AlgebraElement(n, "full", flipped, a.field))


def antisymmetrizer(N: int, field=QIQ) -> AlgebraElement:
    """The minimal braid-subalgebra idempotent with t_j p = p t_j = -q^(-1) p,
    normalized so p^2 = p: sum over S_N of (-q)^(-l(w)) h_w divided by the
    Poincare-type sum of q^(-2 l(w)).
    """
    if N < 2:
        raise DomainError("antisymmetrizer requires N >= 2")
    if isinstance(field, type(QIQ)):
        qpow = lambda k: q_power(k)
    else:
        qpow = lambda k: field.q ** k
    num: dict = {}
    den = field.zero
    for w in all_perms(N):
        l = inversions(w)
        sgn = -1 if l & 1 else 1
        num[(w, 0)] = qpow(-l) if sgn > 0 else -qpow(-l)
        den = den + qpow(-2 * l)
    elem = AlgebraElement(N, "even", num, field)
    return elem.scale(field.one / den)


# ---------------------------------------------------------------------------
# Enumeration helpers.


def basis_keys_even(n: int) -> list:
    """The deterministic basis order of the even part: S_n sorted by
    (length, one-line), masks ascending."""
    return [(w, emask) for w in all_perms(n) for emask in range(1 << max(0, n - 1))]


def closure_dimension(n: int, variant: str = "even", field=QIQ) -> int:
    """Number of basis keys reachable from the identity under repeated
    multiplication by generators: an exhaustive dimension check."""
    if variant == "even":
        gens = [t_element(n, j, field) for j in range(n - 1)] + [
            e_element(n, j, field) for j in range(n - 1)
        ]
        start = identity_element(n, "even", field)
    else:
        gens = [
            even_expand(t_element(n, j, field)) for j in range(n - 1)
        ] + [v_element(n, j, field) for j in range(n)]
        start = identity_element(n, "full", field)
    seen = set(start.terms)
    frontier = [start]
    while frontier:
        nxt = []
        for elem in frontier:
            for g in gens:
                prod = multiply(elem, g)
                fresh = [key for key in prod.terms if key not in seen]
                if fresh:
                    seen.update(fresh)
                    nxt.append(prod)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# Word grammar: whitespace-separated letters t3, t3' (inverse), v2, e2.


def parse_generator_word(text: str, n: int) -> list:
    """Parse the generator word grammar into internal letters (0-based)."""
    letters = []
    for token in text.split():
        kind = token[0]
        body = token[1:]
        inverse = body.endswith("'")
        if inverse:
            body = body[:-1]
        if kind not in ("t", "v", "e") or not body.isdigit():
            raise DomainError(f"bad generator letter {token!r}")
        j = int(body) - 1
        if kind == "t":
            letters.append(("t", j, -1 if inverse else 1))
        elif inverse:
            raise DomainError(f"only t letters can be inverted: {token!r}")
        else:
            letters.append((kind, j))
    for letter in letters:
        _validate_letter(letter, n)
    return letters


def term_list(a: AlgebraElement) -> list[dict]:
    """JSON-friendly term list: 1-based one-line permutations and bitstrings."""
    out = []
    for key in sorted(a.terms, key=_term_sort_key(a.variant)):
        c = a.terms[key]
        if a.variant == "full":
            vmask, w = key
            smask, slen = vmask, a.n
        else:
            w, emask = key
            smask, slen = emask, max(0, a.n - 1)
        out.append(
            {
                "w": [x + 1 for x in w],
                "s": "".join("1" if (smask >> k) & 1 else "0" for k in range(slen)),
                "coeff": str(c),
            }
        )
    return out


from .errors import ConsistencyError  # noqa: E402
