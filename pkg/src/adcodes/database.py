"""Built-in database of the small stabilizer codes the constructions rely on.

Every entry is validated on first access; entries whose generator sets are
not fixed by an explicit published presentation are additionally
self-certified by a brute-force distance check, so a wrong transcription
fails loudly at load time rather than corrupting downstream results.
"""

from __future__ import annotations

from functools import lru_cache

from .stabilizer import (
    StabilizerCode,
    bacon_shor_ad,
    complete_logicals,
    distance,
    validate,
)
from .paulis import PauliOperator, parse_pauli

__all__ = ["get_code", "list_codes"]


def _code(name: str, gens: list[str], lx: list[str], lz: list[str]) -> StabilizerCode:
    g = tuple(parse_pauli(s) for s in gens)
    return StabilizerCode(
        n=g[0].n,
        generators=g,
        logical_x=tuple(parse_pauli(s) for s in lx),
        logical_z=tuple(parse_pauli(s) for s in lz),
        name=name,
    )


def _dualrail() -> StabilizerCode:
    return _code("dualrail", ["-ZZ"], ["XX"], ["ZI"])


def _leung_4_1() -> StabilizerCode:
    return _code("leung_4_1", ["XXXX", "ZZII", "IIZZ"], ["XXII"], ["ZIZI"])


def _five_1_3() -> StabilizerCode:
    return _code(
        "five_1_3",
        ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        ["XXXXX"],
        ["ZZZZZ"],
    )


def _shor_9_1() -> StabilizerCode:
    code = bacon_shor_ad(2)
    return StabilizerCode(code.n, code.generators, code.logical_x, code.logical_z, name="shor_9_1")


def _h8_8_3_3() -> StabilizerCode:
    # Gottesman's [[8,3,3]] code; logical pairs completed symplectically.
    gens = tuple(
        parse_pauli(s)
        for s in ["XXXXXXXX", "ZZZZZZZZ", "IXIXYZYZ", "IXZYIXZY", "IYXZXZIY"]
    )
    lx, lz = complete_logicals(8, gens)
    return StabilizerCode(8, gens, lx, lz, name="h8_8_3_3")


def _c4_2_2() -> StabilizerCode:
    return _code("c4_2_2", ["XXXX", "ZZZZ"], ["XIXI", "XXII"], ["ZZII", "ZIZI"])


def _c4_1_2() -> StabilizerCode:
    return _code("c4_1_2", ["XXXX", "ZZZZ", "ZIZI"], ["XIXI"], ["ZZII"])


def _c6_4_2() -> StabilizerCode:
    lx = []
    lz = []
    for i in range(1, 5):
        x = ["I"] * 6
        x[0] = "X"
        x[i] = "X"
        z = ["I"] * 6
        z[i] = "Z"
        z[5] = "Z"
        lx.append("".join(x))
        lz.append("".join(z))
    return _code("c6_4_2", ["XXXXXX", "ZZZZZZ"], lx, lz)


_BUILDERS = {
    "dualrail": _dualrail,
    "leung_4_1": _leung_4_1,
    "five_1_3": _five_1_3,
    "shor_9_1": _shor_9_1,
    "h8_8_3_3": _h8_8_3_3,
    "c4_2_2": _c4_2_2,
    "c4_1_2": _c4_1_2,
    "c6_4_2": _c6_4_2,
}

# Expected brute-force distances; None marks entries certified elsewhere.
_CERTIFIED_DISTANCE = {
    "dualrail": 1,
    "leung_4_1": 2,
    "five_1_3": 3,
    "shor_9_1": 3,
    "h8_8_3_3": 3,
    "c4_2_2": 2,
    "c4_1_2": 2,
    "c6_4_2": 2,
}


def list_codes() -> list[str]:
    return sorted(_BUILDERS)


@lru_cache(maxsize=None)
def get_code(name: str) -> StabilizerCode:
    """Return a validated database code by name.

    Raises KeyError for unknown names and RuntimeError if an entry fails its
    load-time validation or distance certification.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown code {name!r}; available: {', '.join(list_codes())}") from None
    code = builder()
    report = validate(code)
    if not report:
        raise RuntimeError(f"database code {name} failed validation: {report.message}")
    want = _CERTIFIED_DISTANCE[name]
    got = distance(code, want)
    if got != want:
        raise RuntimeError(f"database code {name} has distance {got}, expected {want}")
    return code
