"""Stabilizer-code model with exact sign tracking.

Codes are immutable bundles of signed generators and logical operator pairs.
Generator signs are part of the code definition (the dual-rail block code is
stabilized by -ZZ); GF(2) rank computations ignore phases and the phase
bookkeeping restores them afterwards.

The canonical representative of a logical class (a, b) is

    L(a, b) = prod_i logical_x[i]^a_i * prod_j logical_z[j]^b_j

with X factors before Z factors, each in ascending index order.  All phases
returned by :func:`reduce_mod_stabilizer` are relative to this representative.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import gf2
from .paulis import (
    DimensionError,
    PauliOperator,
    Phase,
    _mul_raw,
    _sp_raw,
    parse_pauli,
)

__all__ = [
    "StabilizerCode",
    "CodeParams",
    "LogicalClass",
    "ValidationReport",
    "ResourceBudgetError",
    "CodeFileError",
    "validate",
    "syndrome",
    "reduce_mod_stabilizer",
    "distance",
    "distance_str",
    "css_code",
    "complete_logicals",
    "bacon_shor_ad",
    "subcode_fix_logical",
    "parse_code_file",
    "format_code_file",
    "code_to_json",
    "code_from_json",
]


class ResourceBudgetError(RuntimeError):
    """An enumeration would exceed its configured budget."""


class CodeFileError(ValueError):
    """Code file cannot be parsed; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class StabilizerCode:
    """An [[n, k]] stabilizer code: n-k signed generators plus k logical pairs."""

    n: int
    generators: tuple[PauliOperator, ...]
    logical_x: tuple[PauliOperator, ...]
    logical_z: tuple[PauliOperator, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "logical_x", tuple(self.logical_x))
        object.__setattr__(self, "logical_z", tuple(self.logical_z))
        for p in self.generators + self.logical_x + self.logical_z:
            if p.n != self.n:
                raise DimensionError(f"operator {p} does not act on {self.n} qubits")

    @property
    def k(self) -> int:
        return len(self.logical_x)

    @property
    def params(self) -> "CodeParams":
        return CodeParams(n=self.n, k=self.k)

    def __str__(self) -> str:
        label = self.name or "code"
        return f"{label} [[{self.n},{self.k}]]"


@dataclass(frozen=True)
class CodeParams:
    """[[n, k, d]] parameters, with the AD-correction order t when known."""

    n: int
    k: int
    d: int | None = None
    t: int | None = None

    def __post_init__(self):
        if not self.n >= self.k >= 0:
            raise ValueError(f"need n >= k >= 0, got n={self.n}, k={self.k}")
        if self.d is not None and self.d < 1:
            raise ValueError(f"distance must be >= 1, got {self.d}")


@dataclass(frozen=True)
class LogicalClass:
    """Class of a normalizer element modulo the stabilizer group.

    ``a``/``b`` are the GF(2) exponent vectors of the canonical representative
    L(a, b); ``phase`` is the exact scalar relating the element to
    phase * L(a, b) * (stabilizer element).
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    phase: Phase
    in_group: bool

    def __post_init__(self):
        if self.in_group and (any(self.a) or any(self.b)):
            raise ValueError("in_group requires a = b = 0")


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    rule: str = ""
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# Cached per-code context: sign-tracked RREF of the generators and the
# table of canonical logical representatives.


class _CodeContext:
    __slots__ = (
        "n",
        "k",
        "gens",
        "rref_ops",
        "rref_words",
        "pivots",
        "lx",
        "lz",
        "_l_table",
    )

    def __init__(self, code: StabilizerCode):
        n = code.n
        self.n = n
        self.k = code.k
        self.gens = tuple((g.x, g.z, g.phase.k) for g in code.generators)
        self.lx = tuple((p.x, p.z, p.phase.k) for p in code.logical_x)
        self.lz = tuple((p.x, p.z, p.phase.k) for p in code.logical_z)
        # RREF over the packed words x | z << n, multiplying the signed
        # operators along with the row operations (the group is abelian, so
        # accumulated phases are order-independent).
        ops: list[tuple[int, int, int]] = []
        words: list[int] = []
        pivots: list[int] = []
        for gx, gz, gk in self.gens:
            w = gx | (gz << n)
            op = (gx, gz, gk)
            for i, p in enumerate(pivots):
                if (w >> p) & 1:
                    w ^= words[i]
                    op = _mul_raw(*op, *ops[i])
            if w == 0:
                continue  # dependent generator; validate() reports this
            p = w.bit_length() - 1
            for i in range(len(words)):
                if (words[i] >> p) & 1:
                    words[i] ^= w
                    ops[i] = _mul_raw(*ops[i], *op)
            words.append(w)
            ops.append(op)
            pivots.append(p)
        order = sorted(range(len(words)), key=lambda i: -pivots[i])
        self.rref_words = [words[i] for i in order]
        self.rref_ops = [ops[i] for i in order]
        self.pivots = [pivots[i] for i in order]
        self._l_table: dict[tuple[int, int], tuple[int, int, int]] = {(0, 0): (0, 0, 0)}

    def logical_rep(self, amask: int, bmask: int) -> tuple[int, int, int]:
        """L(a, b) as a raw (x, z, k) triple, built lazily and cached."""
        cached = self._l_table.get((amask, bmask))
        if cached is not None:
            return cached
        op = (0, 0, 0)
        for i in range(self.k):
            if (amask >> i) & 1:
                op = _mul_raw(*op, *self.lx[i])
        for j in range(self.k):
            if (bmask >> j) & 1:
                op = _mul_raw(*op, *self.lz[j])
        self._l_table[(amask, bmask)] = op
        return op

    def class_masks(self, x: int, z: int) -> tuple[int, int]:
        """Logical class of a normalizer word via symplectic products."""
        amask = bmask = 0
        for i, (px, pz, _) in enumerate(self.lz):
            amask |= _sp_raw(x, z, px, pz) << i
        for j, (px, pz, _) in enumerate(self.lx):
            bmask |= _sp_raw(x, z, px, pz) << j
        return amask, bmask

    def reduce_word(self, x: int, z: int, k: int) -> tuple[int, int, int] | None:
        """Decompose i^k W(x,z) as phase * L(a,b) * (stabilizer element).

        Returns (amask, bmask, phase exponent), or None if the word is not in
        the span of logicals and generators (i.e. the input was not in the
        normalizer of a valid code).
        """
        amask, bmask = self.class_masks(x, z)
        acc = self.logical_rep(amask, bmask)
        w = (x ^ acc[0]) | ((z ^ acc[1]) << self.n)
        for i, p in enumerate(self.pivots):
            if (w >> p) & 1:
                w ^= self.rref_words[i]
                acc = _mul_raw(*acc, *self.rref_ops[i])
        if w != 0:
            return None
        return amask, bmask, (k - acc[2]) % 4


@lru_cache(maxsize=256)
def _ctx(code: StabilizerCode) -> _CodeContext:
    return _CodeContext(code)


# ---------------------------------------------------------------------------
# Core operations.


def validate(code: StabilizerCode) -> ValidationReport:
    """Check the defining stabilizer-code invariants.

    Returns a passing report or the first violated rule with the offending
    operators named in the message.
    """
    n, k = code.n, code.k
    if len(code.logical_z) != k:
        return ValidationReport(False, "logical-pairing", "logical_x and logical_z lengths differ")
    if len(code.generators) != n - k:
        return ValidationReport(
            False,
            "generator-count",
            f"expected n-k = {n - k} generators, got {len(code.generators)}",
        )
    for g in code.generators:
        if g.phase.k % 2:
            return ValidationReport(False, "generator-sign", f"generator {g} has imaginary sign")
    for p in code.logical_x + code.logical_z:
        if p.phase.k % 2:
            return ValidationReport(False, "logical-sign", f"logical {p} has imaginary sign")
    for i, g in enumerate(code.generators):
        for j in range(i + 1, len(code.generators)):
            h = code.generators[j]
            if not g.commutes_with(h):
                return ValidationReport(
                    False, "generator-commute", f"generators anticommute: {g} vs {h}"
                )
    words = [g.x | (g.z << n) for g in code.generators]
    if gf2.rank(words) != len(words):
        return ValidationReport(False, "generator-rank", "generators are GF(2)-dependent")
    for p in code.logical_x + code.logical_z:
        for g in code.generators:
            if not p.commutes_with(g):
                return ValidationReport(
                    False, "logical-commute", f"logical {p} anticommutes with generator {g}"
                )
    for i in range(k):
        for j in range(k):
            lx, lz = code.logical_x[i], code.logical_z[j]
            want_anti = i == j
            if lx.commutes_with(lz) == want_anti:
                rel = "commute" if want_anti else "anticommute"
                return ValidationReport(
                    False, "logical-pairing", f"logical pair ({i},{j}) must not {rel}: {lx} vs {lz}"
                )
            if i < j:
                if not code.logical_x[i].commutes_with(code.logical_x[j]):
                    return ValidationReport(
                        False, "logical-pairing", f"logical_x[{i}] and logical_x[{j}] anticommute"
                    )
                if not code.logical_z[i].commutes_with(code.logical_z[j]):
                    return ValidationReport(
                        False, "logical-pairing", f"logical_z[{i}] and logical_z[{j}] anticommute"
                    )
    return ValidationReport(True, message="ok")


def syndrome(code: StabilizerCode, p: PauliOperator) -> tuple[int, ...]:
    """Commutation pattern of p against the generators (1 = anticommutes)."""
    if p.n != code.n:
        raise DimensionError(f"operator acts on {p.n} qubits, code on {code.n}")
    return tuple(_sp_raw(p.x, p.z, g.x, g.z) for g in code.generators)


def reduce_mod_stabilizer(code: StabilizerCode, p: PauliOperator) -> LogicalClass:
    """Exact-phase decomposition p = phase * L(a, b) * (stabilizer element).

    Requires p to commute with every generator (all-zero syndrome).
    """
    syn = syndrome(code, p)
    if any(syn):
        raise ValueError(f"{p} has nonzero syndrome {syn}; not in the normalizer")
    ctx = _ctx(code)
    res = ctx.reduce_word(p.x, p.z, p.phase.k)
    if res is None:
        raise ValueError(f"{p} is not in the span of logicals and generators")
    amask, bmask, kph = res
    k = code.k
    return LogicalClass(
        a=tuple((amask >> i) & 1 for i in range(k)),
        b=tuple((bmask >> i) & 1 for i in range(k)),
        phase=Phase(kph),
        in_group=(amask == 0 and bmask == 0),
    )


_LETTER_BITS = (("X", 1, 0), ("Y", 1, 1), ("Z", 0, 1))


def distance(code: StabilizerCode, w_max: int, budget: int = 5_000_000) -> int | None:
    """Brute-force distance search up to weight w_max.

    Returns the exact distance if a nontrivial logical operator of weight
    <= w_max exists, else None (read: distance >= w_max + 1).  The plain
    enumeration over sum_{w<=w_max} C(n,w) 3^w candidate Paulis must fit the
    budget.
    """
    n = code.n
    total = sum(math.comb(n, w) * 3**w for w in range(1, w_max + 1))
    if total > budget:
        raise ResourceBudgetError(
            f"distance enumeration needs {total} candidates, budget is {budget}"
        )
    ctx = _ctx(code)
    gens = ctx.gens
    pivots, words = ctx.pivots, ctx.rref_words
    for w in range(1, w_max + 1):
        for support in itertools.combinations(range(n), w):
            for letters in itertools.product(_LETTER_BITS, repeat=w):
                x = z = 0
                for q, (_, bx, bz) in zip(support, letters):
                    x |= bx << q
                    z |= bz << q
                if any(_sp_raw(x, z, gx, gz) for gx, gz, _ in gens):
                    continue
                word = x | (z << n)
                for i, p in enumerate(pivots):
                    if (word >> p) & 1:
                        word ^= words[i]
                if word:
                    return w
    return None


def distance_str(d: int | None, w_max: int) -> str:
    return str(d) if d is not None else f">= {w_max + 1}"


# ---------------------------------------------------------------------------
# Builders.


def _as_mask(row, n: int | None) -> tuple[int, int]:
    """Normalize a bit-vector row ('0110', [0,1,1,0]) to (mask, length)."""
    if isinstance(row, str):
        bits = [int(c) for c in row.strip()]
    else:
        bits = [int(b) for b in row]
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bit vector entries must be 0/1: {row!r}")
    if n is not None and len(bits) != n:
        raise ValueError(f"bit vector length {len(bits)} != n={n}")
    mask = 0
    for q, b in enumerate(bits):
        mask |= b << q
    return mask, len(bits)


def css_code(x_stabilizer_supports, z_stabilizer_supports, n: int | None = None,
             name: str = "") -> StabilizerCode:
    """CSS code from X-type and Z-type generator supports.

    Every X row must be GF(2)-orthogonal to every Z row.  Generators come out
    with + signs, X rows first; logical pairs are computed by the standard
    kernel/complement computation and are pure X-type / pure Z-type.
    """
    x_rows: list[int] = []
    z_rows: list[int] = []
    for row in x_stabilizer_supports:
        mask, ln = _as_mask(row, n)
        n = n if n is not None else ln
        x_rows.append(mask)
    for row in z_stabilizer_supports:
        mask, ln = _as_mask(row, n)
        n = n if n is not None else ln
        z_rows.append(mask)
    if n is None:
        raise ValueError("qubit count n is required when no rows are given")
    for xr in x_rows:
        for zr in z_rows:
            if (xr & zr).bit_count() & 1:
                raise ValueError(
                    f"X row {xr:0{n}b} and Z row {zr:0{n}b} overlap on an odd set"
                )
    if gf2.rank(x_rows) != len(x_rows) or gf2.rank(z_rows) != len(z_rows):
        raise ValueError("stabilizer supports are GF(2)-dependent")

    k = n - len(x_rows) - len(z_rows)
    # X logicals: kernel of the Z rows modulo the span of the X rows.
    lx_masks = _quotient_basis(z_rows, x_rows, n)
    lz_masks = _quotient_basis(x_rows, z_rows, n)
    if len(lx_masks) != k or len(lz_masks) != k:
        raise ValueError("logical computation failed; inconsistent CSS input")
    if k:
        # Re-pair so that lx[i] anticommutes exactly with lz[i].
        m_rows = []
        for vx in lx_masks:
            m_rows.append(sum((((vx & vz).bit_count() & 1) << j) for j, vz in enumerate(lz_masks)))
        minv = gf2.invert(m_rows, k)
        if minv is None:
            raise ValueError("degenerate logical pairing in CSS construction")
        new_lz = []
        for j in range(k):
            acc = 0
            for l in range(k):
                if (minv[l] >> j) & 1:
                    acc ^= lz_masks[l]
            new_lz.append(acc)
        lz_masks = new_lz

    gens = tuple(PauliOperator(n, xr, 0) for xr in x_rows) + tuple(
        PauliOperator(n, 0, zr) for zr in z_rows
    )
    code = StabilizerCode(
        n=n,
        generators=gens,
        logical_x=tuple(PauliOperator(n, m, 0) for m in lx_masks),
        logical_z=tuple(PauliOperator(n, 0, m) for m in lz_masks),
        name=name,
    )
    report = validate(code)
    if not report:
        raise ValueError(f"CSS construction produced an invalid code: {report.message}")
    return code


def _quotient_basis(ortho_rows: list[int], mod_rows: list[int], n: int) -> list[int]:
    """Basis of ker(ortho_rows) / span(mod_rows) over GF(2)^n."""
    kern = gf2.nullspace(ortho_rows, n)
    basis, pivots = gf2.rref(mod_rows)
    out_basis: list[int] = []
    out_pivots: list[int] = []
    reps: list[int] = []
    for v in kern:
        r = gf2.reduce_vector(v, basis, pivots)
        r = gf2.reduce_vector(r, out_basis, out_pivots)
        if r:
            p = r.bit_length() - 1
            out_basis.append(r)
            out_pivots.append(p)
            reps.append(r)
    return reps


def complete_logicals(n: int, generators: tuple[PauliOperator, ...]) -> tuple[
    tuple[PauliOperator, ...], tuple[PauliOperator, ...]
]:
    """Compute a symplectic logical basis for commuting, independent generators.

    Finds a basis of the normalizer modulo the generated group and pairs it by
    symplectic Gram-Schmidt into (logical_x, logical_z) with + signs.
    """
    gen_words = [g.x | (g.z << n) for g in generators]

    def sp(w1: int, w2: int) -> int:
        mask = (1 << n) - 1
        return _sp_raw(w1 & mask, w1 >> n, w2 & mask, w2 >> n)

    # w is in the normalizer iff parity(w & swapped(g)) = 0 for every g.
    swapped = [(g.z | (g.x << n)) for g in generators]
    kern = gf2.nullspace(swapped, 2 * n)
    basis, pivots = gf2.rref(gen_words)
    reps: list[int] = []
    out_basis: list[int] = []
    out_pivots: list[int] = []
    for v in kern:
        r = gf2.reduce_vector(v, basis, pivots)
        r = gf2.reduce_vector(r, out_basis, out_pivots)
        if r:
            out_basis.append(r)
            out_pivots.append(r.bit_length() - 1)
            reps.append(r)
    if len(reps) % 2:
        raise ValueError("normalizer quotient has odd dimension; generators are inconsistent")
    lx: list[int] = []
    lz: list[int] = []
    vecs = list(reps)
    while vecs:
        u = vecs.pop(0)
        partner = next((i for i, w in enumerate(vecs) if sp(u, w)), None)
        if partner is None:
            raise ValueError("symplectic pairing failed; generators are inconsistent")
        w = vecs.pop(partner)
        vecs = [v ^ (u if sp(v, w) else 0) ^ (w if sp(v, u) else 0) for v in vecs]
        lx.append(u)
        lz.append(w)
    mask = (1 << n) - 1
    return (
        tuple(PauliOperator(n, v & mask, v >> n) for v in lx),
        tuple(PauliOperator(n, v & mask, v >> n) for v in lz),
    )


def bacon_shor_ad(t: int) -> StabilizerCode:
    """The [[(t+1)^2, 1]] repetition-of-cat code correcting t damping errors.

    Z generators pair adjacent qubits inside each block of t+1; X generators
    act on adjacent block pairs.  Codewords are (|0...0> +/- |1...1>)^(t+1)
    tensor powers: logical Z is X on the first block, logical X is Z on the
    first qubit of every block.
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    m = t + 1
    n = m * m
    gens: list[PauliOperator] = []
    for blk in range(m):
        base = blk * m
        for i in range(m - 1):
            gens.append(PauliOperator(n, 0, (1 << (base + i)) | (1 << (base + i + 1))))
    block_mask = (1 << m) - 1
    x_gens = []
    for blk in range(m - 1):
        x_gens.append(PauliOperator(n, (block_mask << (blk * m)) | (block_mask << ((blk + 1) * m)), 0))
    gens = x_gens + gens  # X-type rows first, matching the CSS layout
    lz = PauliOperator(n, block_mask, 0)
    lx = PauliOperator(n, 0, sum(1 << (blk * m) for blk in range(m)))
    code = StabilizerCode(n, tuple(gens), (lx,), (lz,), name=f"bacon_shor_t{t}")
    report = validate(code)
    assert report, report.message
    return code


def subcode_fix_logical(code: StabilizerCode, i: int, kind: str) -> StabilizerCode:
    """Promote logical_x[i] (kind='x') or logical_z[i] (kind='z') into the
    stabilizer, giving an [[n, k-1]] code whose distance does not decrease."""
    if not 0 <= i < code.k:
        raise IndexError(f"logical index {i} out of range for k={code.k}")
    if kind not in ("x", "z"):
        raise ValueError(f"kind must be 'x' or 'z', got {kind!r}")
    promoted = (code.logical_x if kind == "x" else code.logical_z)[i]
    keep = [j for j in range(code.k) if j != i]
    out = StabilizerCode(
        n=code.n,
        generators=code.generators + (promoted,),
        logical_x=tuple(code.logical_x[j] for j in keep),
        logical_z=tuple(code.logical_z[j] for j in keep),
        name=f"{code.name or 'code'}_fix_{kind}{i}",
    )
    report = validate(out)
    if not report:
        raise ValueError(f"fixing logical {kind}[{i}] produced an invalid code: {report.message}")
    return out


# ---------------------------------------------------------------------------
# Code file format and JSON mirror.


def format_code_file(code: StabilizerCode) -> str:
    """Canonical text form; parse(format(code)) round-trips byte-identically."""
    head = f"CODE n={code.n} k={code.k}"
    if code.name:
        head += f" name={code.name}"
    lines = [head, "STABILIZER"]
    lines += [g.to_string() for g in code.generators]
    lines.append("LOGICAL_X")
    lines += [p.to_string() for p in code.logical_x]
    lines.append("LOGICAL_Z")
    lines += [p.to_string() for p in code.logical_z]
    return "\n".join(lines) + "\n"


def parse_code_file(text: str) -> StabilizerCode:
    lines = text.splitlines()
    if not lines:
        raise CodeFileError(1, "empty file")
    head = lines[0].split()
    if not head or head[0] != "CODE":
        raise CodeFileError(1, "expected header starting with CODE")
    fields: dict[str, str] = {}
    for tok in head[1:]:
        if "=" not in tok:
            raise CodeFileError(1, f"malformed header token {tok!r}")
        key, val = tok.split("=", 1)
        fields[key] = val
    try:
        n = int(fields["n"])
        k = int(fields["k"])
    except (KeyError, ValueError):
        raise CodeFileError(1, "header must contain integer n= and k=") from None
    name = fields.get("name", "")

    sections: dict[str, list[PauliOperator]] = {"STABILIZER": [], "LOGICAL_X": [], "LOGICAL_Z": []}
    order = ["STABILIZER", "LOGICAL_X", "LOGICAL_Z"]
    current: str | None = None
    seen: list[str] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            raise CodeFileError(lineno, "blank line inside code file")
        if line in sections:
            if line in seen:
                raise CodeFileError(lineno, f"duplicate section {line}")
            if seen != order[: len(seen)] or order[len(seen)] != line:
                raise CodeFileError(lineno, f"section {line} out of order")
            seen.append(line)
            current = line
            continue
        if current is None:
            raise CodeFileError(lineno, f"expected a section header, got {line!r}")
        try:
            p = parse_pauli(line)
        except ValueError as exc:
            raise CodeFileError(lineno, str(exc)) from None
        if p.n != n:
            raise CodeFileError(lineno, f"operator has {p.n} qubits, header says n={n}")
        sections[current].append(p)
    if seen != order:
        raise CodeFileError(len(lines), f"missing sections: {[s for s in order if s not in seen]}")
    if len(sections["LOGICAL_X"]) != k or len(sections["LOGICAL_Z"]) != k:
        raise CodeFileError(len(lines), f"expected {k} logical pairs")
    return StabilizerCode(
        n=n,
        generators=tuple(sections["STABILIZER"]),
        logical_x=tuple(sections["LOGICAL_X"]),
        logical_z=tuple(sections["LOGICAL_Z"]),
        name=name,
    )


def code_to_json(code: StabilizerCode) -> dict:
    return {
        "name": code.name,
        "n": code.n,
        "k": code.k,
        "stabilizer": [g.to_string() for g in code.generators],
        "logical_x": [p.to_string() for p in code.logical_x],
        "logical_z": [p.to_string() for p in code.logical_z],
    }


def code_from_json(data: dict) -> StabilizerCode:
    return StabilizerCode(
        n=int(data["n"]),
        generators=tuple(parse_pauli(s) for s in data["stabilizer"]),
        logical_x=tuple(parse_pauli(s) for s in data["logical_x"]),
        logical_z=tuple(parse_pauli(s) for s in data["logical_z"]),
        name=data.get("name", ""),
    )
