"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s`.  The expensive verifier
reports are computed once per (code, t) pair and shared across criteria.
"""

import numpy as np
import pytest

from adcodes import (
    ErrorSupport,
    VerifyConfig,
    bacon_shor_ad,
    check_error,
    codewords,
    concatenate,
    css_code,
    distance,
    dual_rail,
    enumerate_error_supports,
    erasure_lemma_check,
    fidelity_experiment,
    get_code,
    logical_class_matrix,
    matrix_element,
    parse_pauli,
    reduce_mod_stabilizer,
    verify_t_code,
)
from adcodes.paulis import gauss_add
from adcodes.tables import build_rows, constructible_pairs
from adcodes.verify import split_expansion, splitting_masks

GOLDEN_10_1 = [
    "XXZIZIXXII",
    "IIXXZIZIXX",
    "XXIIXXZIZI",
    "ZIXXIIXXZI",
    "-ZZIIIIIIII",
    "-IIZZIIIIII",
    "-IIIIZZIIII",
    "-IIIIIIZZII",
    "-IIIIIIIIZZ",
]


@pytest.fixture(scope="module")
def codes():
    five = get_code("five_1_3")
    ten = concatenate(five, dual_rail())
    return {
        "leung": get_code("leung_4_1"),
        "shor": get_code("shor_9_1"),
        "ten": ten,
        "c8": concatenate(get_code("c4_2_2"), dual_rail()),
        "sixteen": bacon_shor_ad(3),
        "twenty": concatenate(ten, dual_rail()),
    }


@pytest.fixture(scope="module")
def reports(codes):
    """Criterion-3 verification reports, jobs=1, default budget."""
    runs = [
        ("leung", 1), ("leung", 2), ("shor", 2), ("ten", 2),
        ("c8", 1), ("sixteen", 3), ("twenty", 3),
    ]
    return {(name, t): verify_t_code(codes[name], t, VerifyConfig()) for name, t in runs}


def _verdict(num, label, ok):
    print(f"\nACCEPTANCE {num} [{label}]: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({label}) failed"


def test_criterion_1_golden_construction(codes):
    """The constructed [[10,1]] stabilizer equals the published signed group."""
    ten = codes["ten"]
    ok = len(ten.generators) == len(GOLDEN_10_1)
    for s in GOLDEN_10_1:
        lc = reduce_mod_stabilizer(ten, parse_pauli(s))
        ok = ok and lc.in_group and lc.phase.k == 0
    _verdict(1, "golden [[10,1]] construction", ok)


def test_criterion_2_distance(codes):
    d = distance(codes["ten"], 4)
    _verdict(2, "constructed [[10,1]] has distance 4", d == 4)


def test_criterion_3_t_code_verifications(reports):
    expected = {
        ("leung", 1): True,
        ("leung", 2): False,
        ("shor", 2): True,
        ("ten", 2): True,
        ("c8", 1): True,
        ("sixteen", 3): True,
        ("twenty", 3): True,
    }
    ok = True
    for key, want_pass in expected.items():
        got = reports[key].passed
        if got != want_pass:
            print(f"  mismatch {key}: got {got}, want {want_pass}")
            ok = False
    _verdict(3, "t-code verification verdicts", ok)


def _reconstruct(chk, mu, k):
    m = np.zeros((1 << k, 1 << k), dtype=complex)
    for (amask, bmask), slc in chk.class_slices.items():
        coeff = (0, 0)
        for sa, g in slc.items():
            coeff = gauss_add(coeff, g if not (sa & mu).bit_count() & 1 else (-g[0], -g[1]))
        m += complex(*coeff) * logical_class_matrix(amask, bmask, k)
    return m


def test_criterion_4_oracle_equivalence(codes):
    """Every enumerated error of every n <= 10 criterion-3 code: symbolic
    class sums match dense matrix elements to 1e-10."""
    runs = [("leung", 1), ("leung", 2), ("shor", 2), ("ten", 2), ("c8", 1)]
    worst = 0.0
    ok = True
    for name, t in runs:
        code = codes[name]
        basis = codewords(code)
        for e in enumerate_error_supports(code.n, t):
            chk = check_error(code, e, t=t)
            for mu in splitting_masks(e, t) or [0]:
                sym = _reconstruct(chk, mu, code.k)
                dense = matrix_element(basis, split_expansion(e, mu, code.n))
                err = float(np.abs(sym - dense).max())
                worst = max(worst, err)
                if err >= 1e-10:
                    ok = False
    print(f"  worst |symbolic - dense| = {worst:.2e}")
    _verdict(4, "oracle equivalence on all enumerated errors", ok)


def test_criterion_5_erasure_lemma():
    rng = np.random.default_rng(99)
    worst = 0.0
    for inner, indices, dim in [("dualrail", [1, 2], 4), ("qutrit3", [1, 2, 4], 8)]:
        for g in (0.1, 0.3, 0.5, 0.9):
            for _ in range(100):
                amp = rng.standard_normal(len(indices)) + 1j * rng.standard_normal(len(indices))
                amp /= np.linalg.norm(amp)
                psi = np.zeros(dim, dtype=complex)
                psi[indices] = amp
                rho = np.outer(psi, psi.conj())
                worst = max(worst, erasure_lemma_check(g, rho, inner))
    print(f"  worst erasure residual = {worst:.2e}")
    _verdict(5, "erasure-channel identity for both inner codes", worst <= 1e-12)


def test_criterion_6_fidelity_scaling(codes):
    bare = css_code([], [], n=1, name="trivial")
    family = [
        ("bare qubit", bare, 0, 1.0),
        ("leung_4_1", codes["leung"], 1, 2.0),
        ("shor_9_1", codes["shor"], 2, 3.0),
        ("[[10,1]]", codes["ten"], 2, 3.0),
    ]
    ok = True
    measured = []
    for label, code, t, want in family:
        res = fidelity_experiment(code, t)
        measured.append(res.fitted_exponent)
        print(f"  {label}: exponent {res.fitted_exponent:.3f} (expected ~{want})")
        if abs(res.fitted_exponent - want) > 0.2:
            ok = False
    # exponents never decrease along the family ordered by t
    if any(b < a - 0.2 for a, b in zip(measured, measured[1:])):
        ok = False
    _verdict(6, "infidelity exponents ~ (1, 2, 3, 3) within 0.2", ok)


def test_criterion_7_table_reproduction():
    expect_n = {(1, 1): 8, (1, 2): 10, (1, 3): 20, (2, 1): 8, (2, 2): 16, (3, 2): 16, (4, 1): 12}
    ok = set(constructible_pairs()) == set(expect_n)
    rows, reports = build_rows(certify=True)
    constructed = {(r.k, r.t): r for r in rows if r.source == "constructed"}
    for pair, n in expect_n.items():
        row = constructed.get(pair)
        if row is None or not row.certified or row.n != n or row.n != row.paper_n:
            print(f"  row {pair}: {row}")
            ok = False
    _verdict(7, "table rows match published n for all covered (k,t)", ok)


def test_criterion_8_determinism_across_jobs(codes, reports):
    runs = [
        ("leung", 1), ("leung", 2), ("shor", 2), ("ten", 2),
        ("c8", 1), ("sixteen", 3), ("twenty", 3),
    ]
    ok = True
    for name, t in runs:
        base = reports[(name, t)].to_json()
        for jobs in (4, 8):
            again = verify_t_code(codes[name], t, VerifyConfig(jobs=jobs))
            if again.to_json() != base:
                print(f"  report for {name} t={t} differs at jobs={jobs}")
                ok = False
    _verdict(8, "verifier JSON identical across jobs 1/4/8", ok)
