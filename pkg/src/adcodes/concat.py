"""Concatenation of a stabilizer outer code with a single-qubit-block inner code.

Block q of the inner code occupies output qubits [q*block_size, (q+1)*block_size).
Outer operators are mapped factor-wise through

    I -> I...I,   X -> logical X,   Z -> logical Z,   Y -> i * X_L * Z_L,

which together with the package-wide Y = iXZ convention makes the substitution
a group homomorphism on signed Paulis; the inner stabilizer is then added on
every block.  Output generators keep the outer images first, block stabilizers
after, so the [[10,1]] construction reproduces its published generator layout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paulis import PauliOperator, Phase, parse_pauli
from .stabilizer import CodeParams, StabilizerCode, validate

__all__ = ["InnerCode", "dual_rail", "concatenate", "theorem1_params"]


@dataclass(frozen=True)
class InnerCode:
    """A [[block_size, 1]] stabilizer code used as the inner layer."""

    block_size: int
    stabilizer: tuple[PauliOperator, ...]
    logical_x: PauliOperator
    logical_z: PauliOperator
    name: str = ""

    def as_stabilizer_code(self) -> StabilizerCode:
        return StabilizerCode(
            n=self.block_size,
            generators=self.stabilizer,
            logical_x=(self.logical_x,),
            logical_z=(self.logical_z,),
            name=self.name,
        )


def dual_rail() -> InnerCode:
    """The [[2,1]] dual-rail code: |0>_L = |01>, |1>_L = |10>, stabilized by -ZZ."""
    return InnerCode(
        block_size=2,
        stabilizer=(parse_pauli("-ZZ"),),
        logical_x=parse_pauli("XX"),
        logical_z=parse_pauli("ZI"),
        name="dualrail",
    )


def _embed(p: PauliOperator, block: int, block_size: int, n_out: int) -> PauliOperator:
    shift = block * block_size
    return PauliOperator(n_out, p.x << shift, p.z << shift, p.phase)


def concatenate(outer: StabilizerCode, inner: InnerCode | None = None) -> StabilizerCode:
    """Concatenate, producing an [[outer.n * block_size, outer.k]] code."""
    if inner is None:
        inner = dual_rail()
    report = validate(outer)
    if not report:
        raise ValueError(f"outer code invalid: {report.message}")
    report = validate(inner.as_stabilizer_code())
    if not report:
        raise ValueError(f"inner code invalid: {report.message}")

    bs = inner.block_size
    n_out = outer.n * bs
    # Per-block image of the Y letter: i * X_L * Z_L.
    xz = inner.logical_x * inner.logical_z
    y_image = PauliOperator(xz.n, xz.x, xz.z, Phase(xz.phase.k + 1))

    def image(p: PauliOperator) -> PauliOperator:
        out = PauliOperator(n_out, 0, 0, p.phase)
        for q in range(outer.n):
            xb = (p.x >> q) & 1
            zb = (p.z >> q) & 1
            if not xb and not zb:
                continue
            if xb and zb:
                factor = y_image
            elif xb:
                factor = inner.logical_x
            else:
                factor = inner.logical_z
            out = out * _embed(factor, q, bs, n_out)
        return out

    gens = [image(g) for g in outer.generators]
    for q in range(outer.n):
        for s in inner.stabilizer:
            gens.append(_embed(s, q, bs, n_out))
    result = StabilizerCode(
        n=n_out,
        generators=tuple(gens),
        logical_x=tuple(image(p) for p in outer.logical_x),
        logical_z=tuple(image(p) for p in outer.logical_z),
        name=f"concat({outer.name or 'outer'},{inner.name or 'inner'})",
    )
    report = validate(result)
    if not report:
        raise ValueError(f"concatenation produced an invalid code: {report.message}")
    return result


def theorem1_params(p: CodeParams) -> CodeParams:
    """Map an outer [[m,k,d]] to the concatenated [[2m,k]] with t = d-1."""
    if p.d is None:
        raise ValueError("outer code distance d is required")
    return CodeParams(n=2 * p.n, k=p.k, d=None, t=p.d - 1)
