"""R-matrix: Yang-Baxter, RTT residuals, inverse convention."""

from qncalc.ncalg import Element
from qncalc.presentations import free_presentation, preset
from qncalc.qfield import Scalar
from qncalc.rmatrix import (
    entry,
    forms_rtt_compat,
    perturbed_r,
    r_inverse_conventions,
    rtt_residual,
    standard_r,
    ybe_holds,
    ybe_residual,
)

q = Scalar.q_power
w = Element.word
LAM = q(1) - q(-1)


def test_standard_entries_match_printed_matrix():
    r = standard_r()
    assert entry(r, 1, 1, 1, 1) == q(1)
    assert entry(r, 2, 2, 2, 2) == q(1)
    assert entry(r, 1, 2, 1, 2) == Scalar.from_int(1)
    assert entry(r, 2, 1, 2, 1) == Scalar.from_int(1)
    assert entry(r, 2, 1, 1, 2) == LAM
    assert sum(1 for row in r for c in row if not c.is_zero) == 5


def test_ybe_standard_zero():
    assert ybe_holds(standard_r())


def test_ybe_identity_matrix():
    one = Scalar.from_int(1)
    zero = Scalar.from_int(0)
    ident = tuple(tuple(one if i == j else zero for j in range(4)) for i in range(4))
    assert ybe_holds(ident)


def test_ybe_perturbed_nonzero_with_witness():
    res = ybe_residual(perturbed_r())
    nonzero = [(i, j) for i, row in enumerate(res)
               for j, c in enumerate(row) if not c.is_zero]
    assert nonzero


def test_ybe_antisymmetric_under_side_swap():
    res = ybe_residual(perturbed_r())
    swapped = ybe_residual(perturbed_r(), swap_sides=True)
    assert any(not c.is_zero for row in res for c in row)
    for row, srow in zip(res, swapped):
        for c, s in zip(row, srow):
            assert s == -c


def test_rtt_all_zero_under_glq2():
    res = rtt_residual(standard_r(), preset("glq2"))
    assert all(v.is_zero for v in res.values()), {
        k: str(v) for k, v in res.items() if not v.is_zero}


def test_rtt_all_zero_under_unimodular_presets():
    for pid in ("slq2-left", "slq2-right", "glq2-left", "glq2-right"):
        res = rtt_residual(standard_r(), preset(pid))
        assert all(v.is_zero for v in res.values()), pid


def test_rtt_free_presentation_component_oracle():
    # hand expansion of component (1,1,1,2): q a.b - (b.a + lam a.b),
    # proportional to a.b - q b.a
    free = free_presentation("a", "b", "c", "d")
    res = rtt_residual(standard_r(), free)
    comp = res[(1, 1, 1, 2)]
    expected = q(-1) * (w("a.b") - q(1) * w("b.a"))
    assert comp == expected
    assert not all(v.is_zero for v in res.values())


def test_rtt_identity_r_leaves_plain_commutators():
    one = Scalar.from_int(1)
    zero = Scalar.from_int(0)
    ident = tuple(tuple(one if i == j else zero for j in range(4)) for i in range(4))
    res = rtt_residual(ident, preset("glq2"))
    assert not all(v.is_zero for v in res.values())
    free = free_presentation("a", "b", "c", "d")
    res_free = rtt_residual(ident, free)
    assert res_free[(1, 1, 1, 2)] == w("a.b") - w("b.a")


def test_forms_rtt_compat_calculus_presets():
    for pid in ("glq2-left", "glq2-right"):
        for c in forms_rtt_compat(standard_r(), preset(pid)):
            assert c.status == "pass", (pid, c.name, c.residual)


def test_forms_rtt_compat_fails_without_relations():
    from qncalc.ncalg import Generator, Presentation, TerminationOrder
    gens = [Generator(n, 0, i) for i, n in enumerate("bcad")]
    gens.append(Generator("f", 1, 4))
    free = Presentation("free-f", gens, TerminationOrder("deglex"), [],
                        form_position="right")
    checks = forms_rtt_compat(standard_r(), free)
    assert any(c.status == "fail" for c in checks)


def test_r_inverse_convention_plain_holds():
    conv = r_inverse_conventions()
    assert conv["plain"] is True
