import numpy as np
import pytest

from mubkit.axioms import (
    build_structure_tensors,
    ring_structure_tensors,
    run_axiom_suite,
    verify_auxiliary_identities,
    verify_bialgebra_and_complementarity,
    verify_field_equations,
    verify_frobenius,
)
from mubkit.characters import (
    ControlledHadamard,
    Hadamard,
    additive_character_matrix,
    controlled_from_copies,
)
from mubkit.errors import NotControlledHadamard
from mubkit.gf import new_field

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)]


def failures(report):
    return [r["equation"] for r in report if not r["pass"]]


def test_gf2_tables_are_xor_and_and():
    t = build_structure_tensors(new_field(2, 1))
    xor = np.zeros((2, 2, 2))
    xor[0, 0, 0] = xor[1, 0, 1] = xor[1, 1, 0] = xor[0, 1, 1] = 1
    land = np.zeros((2, 2, 2))
    land[0, 0, 0] = land[0, 0, 1] = land[0, 1, 0] = land[1, 1, 1] = 1
    assert np.array_equal(t.red_mult, xor)
    assert np.array_equal(t.yellow_mult, land)


def test_units_and_projector():
    t = build_structure_tensors(new_field(2, 2))
    assert np.array_equal(t.red_unit, [1, 0, 0, 0])
    assert np.array_equal(t.yellow_unit, [0, 1, 0, 0])
    assert np.array_equal(t.proj, np.diag([0.0, 1.0, 1.0, 1.0]))


def test_yellow_assembly_cross_check_exact():
    for p, n in FIELDS:
        t = build_structure_tensors(new_field(p, n))
        assert np.array_equal(t.yellow_mult, t.yellow_mult_assembled)


def test_black_spider_laws_exact():
    t = build_structure_tensors(new_field(2, 2))
    report = verify_frobenius(t, "black")
    assert failures(report) == []
    assert all(r["residual"] == 0.0 for r in report)


def test_red_quasi_special_is_order():
    t = build_structure_tensors(new_field(2, 2))
    m = t.red_mult.astype(complex)
    loop = np.einsum("oab,wab->ow", m, m.conj())
    assert np.array_equal(loop.real, 4 * np.eye(4))


@pytest.mark.parametrize("p,n", FIELDS)
def test_frobenius_all_dots(p, n):
    t = build_structure_tensors(new_field(p, n))
    for which in ("black", "red", "yellow_green", "green"):
        report = verify_frobenius(t, which, 1e-12)
        assert failures(report) == [], (which, failures(report))


@pytest.mark.parametrize("p,n", FIELDS)
def test_bialgebra_and_complementarity(p, n):
    t = build_structure_tensors(new_field(p, n))
    for pair in ("red-black", "yellow-black"):
        report = verify_bialgebra_and_complementarity(t, pair, 1e-12)
        assert failures(report) == [], (pair, failures(report))


def test_strong_complementarity_composite_is_permutation():
    t = build_structure_tensors(new_field(2, 2))
    mbc = t.black_mult.astype(complex).conj()
    mr = t.red_mult.astype(complex)
    s1 = np.einsum("aow,pwb->opab", mbc, mr).reshape(16, 16)
    assert np.array_equal(np.abs(s1), np.abs(s1).astype(bool).astype(float))
    assert np.array_equal(s1 @ s1.conj().T, np.eye(16))


@pytest.mark.parametrize("p,n", FIELDS)
def test_field_equations(p, n):
    t = build_structure_tensors(new_field(p, n))
    report = verify_field_equations(t, 1e-12)
    assert failures(report) == []


def test_distributivity_residual_zero_gf8():
    t = build_structure_tensors(new_field(2, 3))
    report = {r["equation"]: r["residual"] for r in verify_field_equations(t)}
    assert report["distributivity_left"] == 0.0
    assert report["distributivity_right"] == 0.0


def test_mixed_law_uses_published_gf4_table():
    from golden import CHI_4

    f = new_field(2, 2)
    t = build_structure_tensors(f)
    assert np.array_equal(t.chi, CHI_4.astype(complex))
    for a in range(4):
        for b in range(4):
            assert t.chi[a, b] == t.chi[1, f.mul(a, b)]


def test_projector_identities():
    t = build_structure_tensors(new_field(3, 1))
    report = {r["equation"]: r for r in verify_field_equations(t)}
    assert report["projector_kills_zero"]["residual"] == 0.0
    assert report["inclusion_retraction_projector"]["pass"]


@pytest.mark.parametrize("p,n", FIELDS)
def test_auxiliary_identities(p, n):
    f = new_field(p, n)
    t = build_structure_tensors(f)
    controlled = controlled_from_copies(additive_character_matrix(f), f.d)
    report = verify_auxiliary_identities(t, controlled, 1e-12)
    assert failures(report) == []


def test_reassociation_gf2_exhaustive():
    """The four-input reassociation identity, checked here by direct
    enumeration of all 16 basis-state inputs as an independent oracle."""
    f = new_field(2, 1)
    t = build_structure_tensors(f)
    lhs = np.einsum("oab,awg,bxz,gyz->owxyz", *([t.red_mult] * 2 + [t.yellow_mult] * 2))
    for w in range(2):
        for x in range(2):
            for y in range(2):
                for z in range(2):
                    expected = f.add(f.add(w, f.mul(y, z)), f.mul(x, z))
                    vec = lhs[:, w, x, y, z]
                    assert vec[expected] == 1 and vec.sum() == 1


def test_auxiliary_identities_reject_bad_controlled_family():
    f = new_field(2, 1)
    t = build_structure_tensors(f)
    bad = ControlledHadamard(2, [Hadamard(2, np.eye(2, dtype=complex)) for _ in range(2)])
    with pytest.raises(NotControlledHadamard):
        verify_auxiliary_identities(t, bad)


@pytest.mark.parametrize("p,n", FIELDS)
def test_full_suite_tolerance(p, n):
    report = run_axiom_suite(new_field(p, n), 1e-10)
    assert failures(report) == []
    assert max(r["residual"] for r in report) < 1e-10


def test_ring_negative_control_localizes_failure():
    """Modular multiplication with composite modulus: the multiplicative
    laws break, everything about addition and the copy spiders stays green."""
    t = ring_structure_tensors(4)
    report = []
    for which in ("black", "red", "yellow_green", "green"):
        report.extend(verify_frobenius(t, which))
    for pair in ("red-black", "yellow-black"):
        report.extend(verify_bialgebra_and_complementarity(t, pair))
    report.extend(verify_field_equations(t))
    bad = set(failures(report))
    assert "yellow_green.quasi_special" in bad
    assert "yellow_green.closure" in bad
    multiplicative = {
        "yellow_green.closure",
        "yellow_green.frobenius",
        "yellow_green.quasi_special",
        "yellow_green.spider_fusion",
        "yellow-black.cancellation",
        "full_multiplication_assembly",
    }
    assert bad <= multiplicative
    for r in report:
        if r["equation"].startswith(("black.", "red.", "green.", "red-black.")):
            assert r["pass"], r["equation"]


def test_ring_prime_modulus_passes_everything():
    # Z_p with p prime is a field, so the same tensors satisfy every law
    t = ring_structure_tensors(5)
    report = []
    for which in ("black", "red", "yellow_green", "green"):
        report.extend(verify_frobenius(t, which))
    report.extend(verify_field_equations(t))
    assert failures(report) == []
