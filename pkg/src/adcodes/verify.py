"""Symbolic verifier of the amplitude-damping t-code property.

A run at order t checks every support pair (S_A, S_B) of disjoint qubit sets
with |S_A| <= 2t and |S_B| <= t.  The damping factors on S_A come in two
chiralities, A = X + iY on the kept branch and its adjoint X - iY on the bra
side of a recovered pair, with at most t factors of each; B = I - Z sits on
S_B.  Concretely, for every splitting S_A = mu | nu with
max(0, |S_A| - t) <= |mu| <= t the verifier requires

    P (X-iY)^(mu) (X+iY)^(nu) B^(S_B) P  =  C * P

on the code projector P, which are exactly the detection conditions arising
from products of correctable damping branches.  Checking only the all-plain
splitting would wrongly reject the known approximate codes: the four-qubit
single-damping code has <psi_1| A (x) A |psi_0> = 2, yet corrects one damping
error because the bra side of every correctable pair carries adjoints.

A and B factors are weighted by damping order: each A-type factor is half an
order of the damping rate and each B factor (a same-qubit damped pair, since
A^dag A = 2B) a full order.  Supports with |S_A| + 2|S_B| > 2t sit beyond
order t; they are enumerated and counted but impose no conditions on a
t-code, and their per-error verdict is vacuously a pass.

Each error expands into Pauli terms with unit coefficients sharing one
X-vector; a chirality flip on mu only scales the term for Z-pattern s by
(-1)^|s & mu|.  Terms anticommuting with a generator drop; survivors reduce to
a logical class with an exact phase and accumulate, per class and per
Z-pattern slice on S_A, into Gaussian-integer buckets.  A support passes iff
every nontrivial-class bucket sums to zero under all admissible sign
patterns; the trivial-class sum of the first splitting is reported as C_E.

:func:`check_error` performs this literally, term by term.  The bulk verifier
:func:`verify_t_code` reaches the same buckets through a shortcut: for a fixed
support the surviving Z-vectors form an affine GF(2) subspace cut out by the
generators' X-rows, so whole supports are resolved by one small linear solve
instead of 2^(|A|+|B|) term scans.  Both routes are exact; their agreement is
covered by tests.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .paulis import (
    GaussInt,
    PauliSum,
    Phase,
    _sp_raw,
    expand_ad_error,
    gauss_add,
    gauss_str,
    gauss_times_i_pow,
)
from .stabilizer import (
    LogicalClass,
    ResourceBudgetError,
    StabilizerCode,
    _ctx,
    validate,
)

__all__ = [
    "ErrorSupport",
    "ErrorCheck",
    "VerifyFailure",
    "DetectionReport",
    "VerifyConfig",
    "enumerate_error_supports",
    "support_count",
    "check_error",
    "verify_t_code",
    "splitting_masks",
    "split_expansion",
]

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class ErrorSupport:
    """Disjoint qubit sets carrying A-factors and B-factors."""

    support_a: tuple[int, ...]
    support_b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "support_a", tuple(sorted(self.support_a)))
        object.__setattr__(self, "support_b", tuple(sorted(self.support_b)))
        if set(self.support_a) & set(self.support_b):
            raise ValueError("A and B supports must be disjoint")

    @property
    def mask_a(self) -> int:
        return sum(1 << q for q in self.support_a)

    @property
    def mask_b(self) -> int:
        return sum(1 << q for q in self.support_b)

    def __str__(self) -> str:
        return f"A{list(self.support_a)} B{list(self.support_b)}"


@dataclass(frozen=True)
class VerifyFailure:
    support: ErrorSupport
    logical_class: LogicalClass
    coefficient: GaussInt


@dataclass
class ErrorCheck:
    """Outcome of the detection check for a single error support.

    ``class_slices`` maps a logical class (amask, bmask) to the exact Gaussian
    sums of its surviving terms, grouped by the Z-pattern slice on the A
    support; it carries the full symbolic information behind the verdict.
    """

    support: ErrorSupport
    passed: bool
    c_e: GaussInt
    failures: tuple[VerifyFailure, ...] = ()
    class_slices: dict = field(default_factory=dict)


@dataclass(frozen=True)
class VerifyConfig:
    budget: int = DEFAULT_BUDGET
    jobs: int = 1


@dataclass
class DetectionReport:
    """Aggregated verdict of a t-code verification run.

    ``scalar_table`` keeps only the supports whose C_E is nonzero; absent
    entries are exactly zero.
    """

    code: str
    n: int
    k: int
    t: int
    num_errors: int
    passed: bool
    failures: tuple[VerifyFailure, ...]
    scalar_table: dict[ErrorSupport, GaussInt] = field(default_factory=dict)
    work_units: int = 0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json_dict(self) -> dict:
        return {
            "code": self.code,
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "verdict": self.verdict,
            "num_errors": self.num_errors,
            "failures": [
                {
                    "supportA": list(f.support.support_a),
                    "supportB": list(f.support.support_b),
                    "class": {
                        "a": "".join(map(str, f.logical_class.a)),
                        "b": "".join(map(str, f.logical_class.b)),
                    },
                    "coefficient": list(f.coefficient),
                }
                for f in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = [
            f"code {self.code} [[{self.n},{self.k}]]  t={self.t}: {self.verdict.upper()}",
            f"  errors checked: {self.num_errors}",
            f"  nonzero scalars C_E: {len(self.scalar_table)}",
        ]
        if self.failures:
            lines.append(f"  failing supports: {len(self.failures)}")
            for f in self.failures[:10]:
                cls = "".join(map(str, f.logical_class.a)) + "|" + "".join(
                    map(str, f.logical_class.b)
                )
                lines.append(
                    f"    {f.support}  class {cls}  coefficient {gauss_str(f.coefficient)}"
                )
            if len(self.failures) > 10:
                lines.append(f"    ... {len(self.failures) - 10} more")
        return "\n".join(lines)


def support_count(n: int, t: int) -> int:
    """Closed-form number of enumerated supports."""
    total = 0
    for a in range(min(2 * t, n) + 1):
        for b in range(min(t, n - a) + 1):
            total += math.comb(n, a) * math.comb(n - a, b)
    return total


def enumerate_error_supports(n: int, t: int):
    """Yield every disjoint support pair with |A| <= 2t, |B| <= t.

    Deterministic order: ascending (|A|, |B|), then lexicographic in the
    support tuples; (empty, empty) comes first.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    for a in range(min(2 * t, n) + 1):
        for b in range(min(t, n - a) + 1):
            for sa in itertools.combinations(range(n), a):
                in_a = set(sa)
                rem = [q for q in range(n) if q not in in_a]
                for sb in itertools.combinations(rem, b):
                    yield ErrorSupport(sa, sb)


def _splitting_masks(a_support: tuple[int, ...], t: int) -> list[int]:
    """Admissible adjoint-side subsets mu of the A support, as bit masks.

    Ordered by ascending size then lexicographically; the first entry is the
    empty set whenever |S_A| <= t.
    """
    a = len(a_support)
    out = []
    for m in range(max(0, a - t), min(t, a) + 1):
        for mu in itertools.combinations(a_support, m):
            mask = 0
            for q in mu:
                mask |= 1 << q
            out.append(mask)
    return out


def _judge_support(
    e_support_a: tuple[int, ...],
    e_support_b: tuple[int, ...],
    slices: dict[tuple[int, int], dict[int, GaussInt]],
    t: int,
    k: int,
):
    """Evaluate the per-splitting sums from (class -> {sa-slice: sum}) buckets.

    Returns (c_e, failures) where failures is a list of
    (support_a, support_b, amask, bmask, coefficient) tuples for the first
    violated splitting of each offending class.
    """
    mus = _splitting_masks(e_support_a, t)
    triv = slices.get((0, 0))
    c_e = (0, 0)
    if triv:
        mu0 = mus[0]
        for sa, g in triv.items():
            c_e = gauss_add(c_e, g if not (sa & mu0).bit_count() & 1 else (-g[0], -g[1]))
    failures = []
    for key in sorted(slices):
        if key == (0, 0):
            continue
        slc = slices[key]
        for mu in mus:
            f = (0, 0)
            for sa, g in slc.items():
                f = gauss_add(f, g if not (sa & mu).bit_count() & 1 else (-g[0], -g[1]))
            if f != (0, 0):
                failures.append((e_support_a, e_support_b, key[0], key[1], f))
                break
    return c_e, failures


def splitting_masks(e: ErrorSupport, t: int) -> list[int]:
    """Admissible adjoint-side masks for a support at order t (empty list when
    the support carries no conditions at this order)."""
    if len(e.support_a) + 2 * len(e.support_b) > 2 * t:
        return []
    return _splitting_masks(e.support_a, t)


def split_expansion(e: ErrorSupport, mu_mask: int, n: int) -> PauliSum:
    """Expansion of the chirality-split product: adjoint factors X - iY on the
    qubits of ``mu_mask``, X + iY on the rest of the A support, I - Z on B."""
    plain = expand_ad_error(e.support_a, e.support_b, n)
    terms = {}
    for (x, z), c in plain.items():
        terms[(x, z)] = c if not (z & mu_mask).bit_count() & 1 else (-c[0], -c[1])
    return PauliSum(n, terms)


def check_error(code: StabilizerCode, e: ErrorSupport, t: int | None = None) -> ErrorCheck:
    """Expand one error and accumulate its logical-class buckets exactly.

    ``t`` fixes the admissible chirality splittings of the A support; by
    default the smallest order at which the support carries conditions,
    ceil(|S_A|/2) + |S_B|, is used.  A support beyond order t (that is,
    |S_A| + 2|S_B| > 2t) passes vacuously with C_E = 0.
    """
    if t is None:
        t = (len(e.support_a) + 1) // 2 + len(e.support_b)
    if len(e.support_a) > 2 * t or len(e.support_b) > t:
        raise ValueError(f"support {e} exceeds the t={t} bounds")
    expansion = expand_ad_error(e.support_a, e.support_b, code.n)
    ctx = _ctx(code)
    gens = ctx.gens
    mask_a = e.mask_a
    slices: dict[tuple[int, int], dict[int, GaussInt]] = {}
    for (x, z), coeff in expansion.items():
        if any(_sp_raw(x, z, gx, gz) for gx, gz, _ in gens):
            continue
        res = ctx.reduce_word(x, z, 0)
        if res is None:
            raise ValueError("normalizer term failed to reduce; invalid code?")
        amask, bmask, kph = res
        slc = slices.setdefault((amask, bmask), {})
        sa = z & mask_a
        slc[sa] = gauss_add(slc.get(sa, (0, 0)), gauss_times_i_pow(coeff, kph))
    if len(e.support_a) + 2 * len(e.support_b) > 2 * t:
        return ErrorCheck(e, True, (0, 0), (), slices)
    c_e, raw = _judge_support(e.support_a, e.support_b, slices, t, code.k)
    failures = tuple(
        VerifyFailure(
            e,
            LogicalClass(
                a=tuple((amask >> i) & 1 for i in range(code.k)),
                b=tuple((bmask >> i) & 1 for i in range(code.k)),
                phase=Phase(0),
                in_group=False,
            ),
            coeff,
        )
        for _, _, amask, bmask, coeff in raw
    )
    return ErrorCheck(e, not failures, c_e, failures, slices)


# ---------------------------------------------------------------------------
# Bulk verification.


def _scan_masks(code: StabilizerCode, t: int, mask_list: list[int], budget: int):
    """Check all supports whose A-mask lies in mask_list.

    Returns (num_errors, failures, scalar_items, work_units); failures come
    back unsorted and are canonicalized by the caller.
    """
    ctx = _ctx(code)
    n, k = ctx.n, ctx.k
    gens = ctx.gens
    x_free = [gz for gx, gz, _ in gens if gx == 0]
    x_gens = [(gx, gz) for gx, gz, _ in gens if gx != 0]
    lx, lz = ctx.lx, ctx.lz
    pivots, words, ops = ctx.pivots, ctx.rref_words, ctx.rref_ops
    logical_rep = ctx.logical_rep

    num_errors = 0
    work = 0
    failures: list[tuple] = []
    scalar_items: list[tuple[ErrorSupport, GaussInt]] = []

    for mask_a in mask_list:
        work += 1
        if work > budget:
            raise ResourceBudgetError(f"verification exceeded budget of {budget} work units")
        wa = mask_a.bit_count()
        rem_count = n - wa
        bulk = sum(math.comb(rem_count, b) for b in range(min(t, rem_count) + 1))
        # Generators without X support constrain the A-mask alone: an odd
        # overlap kills every term of every support built on this A-mask.
        if any((mask_a & gz).bit_count() & 1 for gz in x_free):
            num_errors += bulk
            continue
        tvec = [(mask_a & gz).bit_count() & 1 for _, gz in x_gens]
        # Constant part of the logical class contributed by the X-vector.
        a_base = 0
        for i, (px, pz, _) in enumerate(lz):
            a_base |= ((mask_a & pz).bit_count() & 1) << i
        b_base = 0
        for j, (px, pz, _) in enumerate(lx):
            b_base |= ((mask_a & pz).bit_count() & 1) << j
        rem = [q for q in range(n) if not (mask_a >> q) & 1]
        a_support = tuple(q for q in range(n) if (mask_a >> q) & 1)

        # B sizes beyond order t carry no conditions; count them in bulk.
        b_max = min(t, rem_count, (2 * t - wa) // 2)
        num_errors += sum(
            math.comb(rem_count, b) for b in range(b_max + 1, min(t, rem_count) + 1)
        )
        for bsize in range(b_max + 1):
            for sb in itertools.combinations(rem, bsize):
                work += 1
                mask_b = 0
                for q in sb:
                    mask_b |= 1 << q
                u_mask = mask_a | mask_b
                uq = a_support + sb  # all support qubits; order irrelevant
                u = wa + bsize

                # Affine constraints on the Z-vector from X-carrying rows.
                rows = []
                dead = False
                for idx, (gx, _) in enumerate(x_gens):
                    xr = gx & u_mask
                    if xr == 0:
                        if tvec[idx]:
                            dead = True
                            break
                        continue
                    r = 0
                    for j in range(u):
                        if (xr >> uq[j]) & 1:
                            r |= 1 << j
                    rows.append((r << 1) | tvec[idx])
                num_errors += 1
                if dead:
                    continue
                basis: list[int] = []
                bpiv: list[int] = []
                for a in rows:
                    for p, b in zip(bpiv, basis):
                        if (a >> (p + 1)) & 1:
                            a ^= b
                    data = a >> 1
                    if data:
                        p = data.bit_length() - 1
                        basis = [b ^ a if (b >> (p + 1)) & 1 else b for b in basis]
                        basis.append(a)
                        bpiv.append(p)
                    elif a & 1:
                        dead = True
                        break
                if dead:
                    continue
                part = 0
                for p, b in zip(bpiv, basis):
                    if b & 1:
                        part |= 1 << p
                kern = []
                piv_set = set(bpiv)
                for f in range(u):
                    if f in piv_set:
                        continue
                    v = 1 << f
                    for p, b in zip(bpiv, basis):
                        if (b >> (f + 1)) & 1:
                            v |= 1 << p
                    kern.append(v)
                sols = [part]
                for kv in kern:
                    sols += [s ^ kv for s in sols]
                work += len(sols)
                if work > budget:
                    raise ResourceBudgetError(
                        f"verification exceeded budget of {budget} work units"
                    )

                slices: dict[tuple[int, int], dict[int, GaussInt]] = {}
                for s_local in sols:
                    s = 0
                    sl = s_local
                    while sl:
                        j = (sl & -sl).bit_length() - 1
                        s |= 1 << uq[j]
                        sl &= sl - 1
                    amask = a_base
                    for i, (px, _, _) in enumerate(lz):
                        if (s & px).bit_count() & 1:
                            amask ^= 1 << i
                    bmask = b_base
                    for j, (px, _, _) in enumerate(lx):
                        if (s & px).bit_count() & 1:
                            bmask ^= 1 << j
                    acc = logical_rep(amask, bmask)
                    w = (mask_a ^ acc[0]) | ((s ^ acc[1]) << n)
                    kacc = acc[2]
                    for i, p in enumerate(pivots):
                        if (w >> p) & 1:
                            w ^= words[i]
                            ox, oz, ok = ops[i]
                            # abelian product: phases add with the standard rule
                            ax = acc[0]
                            az = acc[1]
                            nx = ax ^ ox
                            nz = az ^ oz
                            kacc = (
                                kacc
                                + ok
                                + (ax & az).bit_count()
                                + (ox & oz).bit_count()
                                - (nx & nz).bit_count()
                                + 2 * (az & ox).bit_count()
                            ) % 4
                            acc = (nx, nz, kacc)
                    if w:
                        raise ValueError("surviving term failed to reduce; invalid code?")
                    k_term = (
                        (s & mask_a).bit_count() + 2 * (s & mask_b).bit_count() - kacc
                    ) % 4
                    slc = slices.setdefault((amask, bmask), {})
                    sa = s & mask_a
                    slc[sa] = gauss_add(slc.get(sa, (0, 0)), _UNIT[k_term])

                if not slices:
                    continue
                c_e, fails = _judge_support(a_support, sb, slices, t, k)
                if c_e != (0, 0):
                    scalar_items.append((ErrorSupport(a_support, sb), c_e))
                failures.extend(fails)
    return num_errors, failures, scalar_items, work


_UNIT = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _scan_worker(args):
    return _scan_masks(*args)


def verify_t_code(
    code: StabilizerCode, t: int, config: VerifyConfig | None = None
) -> DetectionReport:
    """Run the detection check over the full error enumeration for order t.

    The report is deterministic and independent of the level of parallelism.
    Raises ResourceBudgetError if the run exceeds the configured budget of
    work units (supports touched plus Pauli terms expanded).
    """
    if config is None:
        config = VerifyConfig()
    report = validate(code)
    if not report:
        raise ValueError(f"cannot verify an invalid code: {report.message}")
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    n, k = code.n, code.k

    masks = []
    for a in range(min(2 * t, n) + 1):
        for sa in itertools.combinations(range(n), a):
            m = 0
            for q in sa:
                m |= 1 << q
            masks.append(m)

    jobs = max(1, config.jobs)
    if jobs == 1 or len(masks) < 256:
        parts = [_scan_masks(code, t, masks, config.budget)]
    else:
        nchunks = jobs * 8
        size = (len(masks) + nchunks - 1) // nchunks
        chunks = [masks[i : i + size] for i in range(0, len(masks), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_worker, [(code, t, c, config.budget) for c in chunks]))

    num_errors = 0
    work = 0
    raw_failures: list[tuple] = []
    scalar_table: dict[ErrorSupport, GaussInt] = {}
    for ne, fails, scalars, w in parts:
        num_errors += ne
        work += w
        raw_failures.extend(fails)
        scalar_table.update(scalars)
    if work > config.budget:
        raise ResourceBudgetError(f"verification used {work} work units, budget {config.budget}")

    raw_failures.sort()
    failures = tuple(
        VerifyFailure(
            ErrorSupport(sa, sb),
            LogicalClass(
                a=tuple((amask >> i) & 1 for i in range(k)),
                b=tuple((bmask >> i) & 1 for i in range(k)),
                phase=Phase(0),
                in_group=False,
            ),
            coeff,
        )
        for sa, sb, amask, bmask, coeff in raw_failures
    )
    return DetectionReport(
        code=code.name or f"[[{n},{k}]]",
        n=n,
        k=k,
        t=t,
        num_errors=num_errors,
        passed=not failures,
        failures=failures,
        scalar_table=dict(sorted(scalar_table.items(), key=lambda kv: (kv[0].support_a, kv[0].support_b))),
        work_units=work,
    )
