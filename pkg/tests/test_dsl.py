"""Expression and presentation text formats."""

import random

import pytest

from qncalc.dsl import (
    DslError,
    export_presentation,
    parse_expression,
    parse_presentation,
    parse_scalar,
)
from qncalc.ncalg import Element, check_local_confluence, equal_mod_ideal, normalize
from qncalc.presentations import PRESET_IDS, preset, qdet
from qncalc.qfield import ONE, Scalar

q = Scalar.q_power
w = Element.word


# -- scalar literals -----------------------------------------------------------

def test_parse_scalar_basics():
    assert parse_scalar("q^-1") == q(-1)
    assert parse_scalar("q - q^-1") == q(1) - q(-1)
    assert parse_scalar("2/(1+q^2)") == Scalar.from_int(2) / (ONE + q(2))
    assert parse_scalar("(1+q)^2") == (ONE + q(1)) ** 2
    assert parse_scalar("-3 q^2") == Scalar.from_int(-3) * q(2)


def test_scalar_str_reparses():
    samples = [q(1) - q(-1), Scalar.from_int(2) / (ONE + q(2)),
               (q(4) - 1) / q(5), Scalar.fraction(-7, 3) * q(2) + ONE]
    for s in samples:
        assert parse_scalar(str(s)) == s


def test_parse_scalar_rejects_generators():
    with pytest.raises(DslError):
        parse_scalar("a + 1")


# -- expressions ----------------------------------------------------------------

def test_parse_expression_determinant():
    p = preset("glq2")
    assert parse_expression("a.d - q b.c", p) == qdet(p)


def test_parse_expression_zero():
    assert parse_expression("0", preset("glq2")).is_zero


def test_parse_expression_scalar_coefficient():
    p = preset("glq2")
    lam = q(1) - q(-1)
    assert parse_expression("(q - q^-1) b.c", p) == lam * w("b.c")


def test_parse_expression_errors():
    p = preset("glq2")
    with pytest.raises(DslError):
        parse_expression("a.z", p)               # unknown generator
    with pytest.raises(DslError):
        parse_expression("a.d / b", p)           # non-scalar divisor
    with pytest.raises(DslError):
        parse_expression("a ^ 2", p)             # non-scalar base
    with pytest.raises(DslError):
        parse_expression("q +", p)


def test_element_str_reparses():
    p = preset("glq2")
    x = normalize(w("d.a") * w("d.a"), p)
    assert parse_expression(str(x), p) == x


# -- presentations -----------------------------------------------------------------

QPLANE_TEXT = """
# coordinate algebra of the quantum plane
gen x parity even
gen y parity even
order deglex
rule y.x -> (1/q) x.y
"""


def test_parse_quantum_plane_coordinates():
    p = parse_presentation(QPLANE_TEXT)
    assert equal_mod_ideal(w("x.y"), q(1) * w("y.x"), p)


def test_empty_rule_set_is_free_algebra():
    p = parse_presentation("gen x parity even\ngen y parity even\n")
    x = w("y.x") - w("x.y")
    assert normalize(x, p) == x


def test_orientation_violation_rejected():
    bad = "gen x parity even\ngen y parity even\nrule x.y -> q y.x\n"
    with pytest.raises(DslError, match="orientation"):
        parse_presentation(bad)


def test_parity_violation_rejected():
    bad = ("gen x parity even\ngen f parity odd\n"
           "rule x.x -> f\n")
    with pytest.raises(DslError, match="parity"):
        parse_presentation(bad)


def test_syntax_error_carries_line():
    with pytest.raises(DslError, match="line 2"):
        parse_presentation("gen x parity even\nrule x.x -> @\n")


def test_extends_builtin():
    text = "extends glq2\ngen f parity odd\nrule f.f -> 0\n"
    p = parse_presentation(text)
    assert "f" in p.parity
    assert normalize(w("d.a"), p) == normalize(w("d.a"), preset("glq2"))


def test_wz_plane_example_file():
    from pathlib import Path
    text = Path(__file__).resolve().parent.parent.joinpath(
        "docs", "examples", "wz-plane.preset").read_text()
    p = parse_presentation(text)
    assert check_local_confluence(p).confluent
    # the built-from-scratch calculus satisfies the printed plane relations
    for lhs, rhs in (
            ("del_x.x", "q^-2 x.del_x"),
            ("del_y.y", "q^-2 y.del_y"),
            ("del_x.y", "q^-1 y.del_x"),
            ("del_y.x", "q^-1 x.del_y + (q^-2 - 1) y.del_x")):
        lhs_e = parse_expression(lhs.replace("del_", "d"), p)
        rhs_e = parse_expression(rhs.replace("del_", "d"), p)
        assert normalize(lhs_e - rhs_e, p).is_zero


# -- round-trips -------------------------------------------------------------------

@pytest.mark.parametrize("pid", PRESET_IDS)
def test_preset_roundtrip(pid):
    p = preset(pid)
    p2 = parse_presentation(export_presentation(p))
    rng = random.Random(hash(pid) & 0xFFFF)
    letters = [g.name for g in p.generators]
    for _ in range(40):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(1, 4)))
        assert normalize(w(*word), p) == normalize(w(*word), p2)
