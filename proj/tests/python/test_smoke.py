from fractions import Fraction
from pathlib import Path

import pytest

import icl

DATA = Path(__file__).resolve().parents[2] / "data"


def test_builtin_instance_round_trip():
    inst = icl.builtin_instance("example1")
    assert inst.num_messages == 6
    assert len(inst.users) == 6
    again = icl.parse_instance(inst.to_text())
    assert again.to_text() == inst.to_text()
    assert icl.validate(inst) == []


def test_data_files_load():
    inst = icl.load_instance(str(DATA / "example1.ic"))
    assert inst.to_text() == icl.builtin_instance("example1").to_text()
    scheme = icl.load_scheme(str(DATA / "example2.sch"))
    assert scheme.channel_bits == 3


def test_unknown_builtin_raises():
    with pytest.raises(icl.UnknownName):
        icl.builtin_instance("no-such-instance")


def test_parse_error_raises():
    with pytest.raises(icl.ParseError):
        icl.parse_instance("messages two\n")


def test_composite_rate_small():
    assert icl.composite_rate(icl.builtin_instance("xor2"))["rate"] == 1
    res = icl.composite_rate(icl.builtin_instance("no-side-info(3)"), threads=2)
    assert res["rate"] == Fraction(1, 3)
    assert res["choices_evaluated"] == 64


def test_linear_scheme_and_decoding():
    inst = icl.builtin_instance("example1", channel_bits=3)
    scheme = icl.builtin_scheme("example2")
    res = icl.linear_check(inst, scheme)
    assert res["passed"]
    assert res["symmetric_rate"] == Fraction(1, 3)
    assert icl.zero_error(inst, scheme) == [True] * 6
    assert icl.zero_error(inst, scheme, mode="enumerate") == [True] * 6


def test_mais_bound():
    res = icl.mais(icl.builtin_instance("example1"))
    assert res["size"] == 3
    assert res["bound"] == Fraction(1, 3)


def test_centralized_simulation():
    res = icl.cache_simulate(4, 4, 1, [1, 2, 1, 2], mode="reduced")
    assert res["load"] == Fraction(5, 4)
    assert all(res["decoded"])
    assert icl.cache_simulate(4, 4, 1, [1, 2, 1, 2], mode="full")["load"] == icl.r_cman(4, 1)


def test_decentralized_simulation_is_deterministic():
    a = icl.cache_simulate_decentralized(3, 3, 1, B=2000, seed=7)
    b = icl.cache_simulate_decentralized(3, 3, 1, B=2000, seed=7)
    assert a == b
    assert all(a["decoded"])


def test_formulas():
    assert icl.r_dman(4, 2, 1) == Fraction(15, 16)
    assert icl.r_d_opt(4, 2, 1) == Fraction(3, 4)
    assert icl.r_c_opt(4, 4, 1) <= icl.r_cman(4, 1)


def test_theorem4_synthesis():
    res = icl.verify_theorem4(3, 3, 1)
    assert res["passed"]
    assert res["load_from_rate"] == res["expected_load"] == res["simulated_load"]
