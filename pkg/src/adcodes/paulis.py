"""Exact n-qubit Pauli algebra in the binary symplectic representation.

A Pauli operator is stored as two bit-packed integers ``x`` and ``z`` plus a
phase exponent ``k``; the operator equals ``i**k * W(x, z)`` where the
canonical word ``W(x, z)`` carries on qubit ``q`` the letter

    (x_q, z_q) = (0,0) -> I,  (1,0) -> X,  (0,1) -> Z,  (1,1) -> Y.

Bit ``q`` of ``x``/``z`` is ``(value >> q) & 1``.  The convention is fixed so
that ``Y = i * X * Z`` holds exactly (equivalently ``X * Z = -i * Y``); every
sign in the package, including negative stabilizer generators, flows from it.

All phase arithmetic is integer arithmetic mod 4 and all sum coefficients are
Gaussian integers, so equality checks are exact, never tolerance-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

__all__ = [
    "Phase",
    "PauliOperator",
    "PauliSum",
    "pauli_mul",
    "commutes",
    "expand_ad_error",
    "parse_pauli",
    "DimensionError",
    "gauss_add",
    "gauss_times_i_pow",
    "gauss_str",
]


class DimensionError(ValueError):
    """Operands act on different numbers of qubits."""


_LETTERS = "IXZY"  # index = x_bit + 2 * z_bit
_PREFIX_OF_K = {0: "", 1: "+i", 2: "-", 3: "-i"}
_K_OF_PREFIX = {"": 0, "+": 0, "+i": 1, "-": 2, "-i": 3}


@dataclass(frozen=True, slots=True)
class Phase:
    """The scalar i**k, k taken mod 4."""

    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.k + other.k)

    def conjugate(self) -> "Phase":
        return Phase(-self.k)

    @property
    def value(self) -> complex:
        return (1, 1j, -1, -1j)[self.k]

    def __str__(self) -> str:
        return ("+1", "+i", "-1", "-i")[self.k]


def _mul_raw(x1: int, z1: int, k1: int, x2: int, z2: int, k2: int) -> tuple[int, int, int]:
    """Product of i^k1 W(x1,z1) and i^k2 W(x2,z2) as (x, z, k)."""
    x3 = x1 ^ x2
    z3 = z1 ^ z2
    k3 = (
        k1
        + k2
        + (x1 & z1).bit_count()
        + (x2 & z2).bit_count()
        - (x3 & z3).bit_count()
        + 2 * (z1 & x2).bit_count()
    ) % 4
    return x3, z3, k3


def _sp_raw(x1: int, z1: int, x2: int, z2: int) -> int:
    """GF(2) symplectic product; 1 iff the operators anticommute."""
    return ((x1 & z2).bit_count() + (z1 & x2).bit_count()) & 1


@dataclass(frozen=True, slots=True)
class PauliOperator:
    """Signed n-qubit Pauli operator i**phase.k * W(x, z)."""

    n: int
    x: int
    z: int
    phase: Phase = field(default_factory=Phase)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative qubit count {self.n}")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError(f"bit vector exceeds {self.n} qubits")

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, s: str) -> "PauliOperator":
        return parse_pauli(s)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliOperator":
        """One-qubit letter 'I', 'X', 'Y' or 'Z' placed at ``qubit``."""
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        idx = _LETTERS.index(letter.upper())
        x = (idx & 1) << qubit
        z = (idx >> 1) << qubit
        return cls(n, x, z)

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        m = self.x | self.z
        return tuple(q for q in range(self.n) if (m >> q) & 1)

    def letter(self, qubit: int) -> str:
        return _LETTERS[((self.x >> qubit) & 1) + 2 * ((self.z >> qubit) & 1)]

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        if self.n != other.n:
            raise DimensionError(f"qubit counts differ: {self.n} != {other.n}")
        x, z, k = _mul_raw(self.x, self.z, self.phase.k, other.x, other.z, other.phase.k)
        return PauliOperator(self.n, x, z, Phase(k))

    def commutes_with(self, other: "PauliOperator") -> bool:
        if self.n != other.n:
            raise DimensionError(f"qubit counts differ: {self.n} != {other.n}")
        return _sp_raw(self.x, self.z, other.x, other.z) == 0

    def adjoint(self) -> "PauliOperator":
        # W(x, z) is a tensor product of Hermitian letters.
        return PauliOperator(self.n, self.x, self.z, self.phase.conjugate())

    def to_string(self) -> str:
        body = "".join(self.letter(q) for q in range(self.n))
        return _PREFIX_OF_K[self.phase.k] + body

    def __str__(self) -> str:
        return self.to_string()


def pauli_mul(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Exact group product including phase, with X*Z = -i*Y."""
    return p * q


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """True iff pq = qp, i.e. the symplectic product vanishes over GF(2)."""
    return p.commutes_with(q)


def parse_pauli(s: str) -> PauliOperator:
    """Parse a signed Pauli string such as ``-ZZ``, ``+iXY`` or ``XZZXI``."""
    t = s.strip()
    prefix = ""
    for cand in ("+i", "-i", "+", "-"):
        if t.startswith(cand):
            prefix = cand
            t = t[len(cand):]
            break
    if not t:
        raise ValueError(f"empty Pauli body in {s!r}")
    x = z = 0
    for q, ch in enumerate(t):
        try:
            idx = _LETTERS.index(ch.upper())
        except ValueError:
            raise ValueError(f"invalid Pauli letter {ch!r} in {s!r}") from None
        x |= (idx & 1) << q
        z |= (idx >> 1) << q
    return PauliOperator(len(t), x, z, Phase(_K_OF_PREFIX[prefix]))


# ---------------------------------------------------------------------------
# Gaussian-integer coefficients, stored as (re, im) pairs of Python ints.

GaussInt = tuple[int, int]

_I_POW = ((1, 0), (0, 1), (-1, 0), (0, -1))


def gauss_add(a: GaussInt, b: GaussInt) -> GaussInt:
    return (a[0] + b[0], a[1] + b[1])


def gauss_times_i_pow(c: GaussInt, k: int) -> GaussInt:
    k %= 4
    re, im = c
    if k == 0:
        return c
    if k == 1:
        return (-im, re)
    if k == 2:
        return (-re, -im)
    return (im, -re)


def gauss_str(c: GaussInt) -> str:
    re, im = c
    if im == 0:
        return str(re)
    if re == 0:
        return {1: "i", -1: "-i"}.get(im, f"{im}i")
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    istr = "i" if mag == 1 else f"{mag}i"
    return f"{re}{sign}{istr}"


class PauliSum:
    """Exact Gaussian-integer combination of canonical Pauli words.

    Terms are keyed by the (x, z) bit-vector pair; zero coefficients are
    never stored.  Instances are treated as immutable once built.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: dict[tuple[int, int], GaussInt] | None = None):
        self.n = n
        self._terms: dict[tuple[int, int], GaussInt] = {}
        if terms:
            mask = (1 << n) - 1
            for (x, z), c in terms.items():
                if x & ~mask or z & ~mask:
                    raise ValueError(f"term bits exceed {n} qubits")
                if c != (0, 0):
                    self._terms[(x, z)] = c

    @classmethod
    def from_operator(cls, p: PauliOperator) -> "PauliSum":
        return cls(p.n, {(p.x, p.z): _I_POW[p.phase.k]})

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    def coefficient(self, x: int, z: int) -> GaussInt:
        return self._terms.get((x, z), (0, 0))

    def items(self) -> Iterator[tuple[tuple[int, int], GaussInt]]:
        """Terms in deterministic (x, z) order."""
        return iter(sorted(self._terms.items()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliSum)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if self.n != other.n:
            raise DimensionError(f"qubit counts differ: {self.n} != {other.n}")
        terms = dict(self._terms)
        for key, c in other._terms.items():
            s = gauss_add(terms.get(key, (0, 0)), c)
            if s == (0, 0):
                terms.pop(key, None)
            else:
                terms[key] = s
        return PauliSum(self.n, terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (x, z), c in self.items():
            word = "".join(_LETTERS[((x >> q) & 1) + 2 * ((z >> q) & 1)] for q in range(self.n))
            cs = gauss_str(c)
            if cs == "1":
                cs = ""
            elif cs == "-1":
                cs = "-"
            parts.append(f"{cs}{word}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def expand_ad_error(support_a: Iterable[int], support_b: Iterable[int], n: int) -> PauliSum:
    """Expand prod_{q in A}(X_q + iY_q) * prod_{q in B}(I_q - Z_q) exactly.

    The supports must be disjoint subsets of range(n); the result has exactly
    2**(|A|+|B|) terms, each with a unit coefficient.
    """
    a_list = sorted(set(support_a))
    b_list = sorted(set(support_b))
    for q in a_list + b_list:
        if not 0 <= q < n:
            raise ValueError(f"support qubit {q} out of range for n={n}")
    if set(a_list) & set(b_list):
        raise ValueError(f"overlapping supports {sorted(set(a_list) & set(b_list))}")
    x = 0
    for q in a_list:
        x |= 1 << q
    terms: dict[tuple[int, int], GaussInt] = {}
    na, nb = len(a_list), len(b_list)
    for sa in range(1 << na):
        za = 0
        for i in range(na):
            if (sa >> i) & 1:
                za |= 1 << a_list[i]
        ka = sa.bit_count()  # each Y pick contributes a factor i
        for sb in range(1 << nb):
            zb = 0
            for j in range(nb):
                if (sb >> j) & 1:
                    zb |= 1 << b_list[j]
            kb = sb.bit_count()  # each Z pick contributes a factor -1
            terms[(x, za | zb)] = _I_POW[(ka + 2 * kb) % 4]
    return PauliSum(n, terms)
