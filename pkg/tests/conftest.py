from dataclasses import replace
from pathlib import Path

import pytest

from qk.generators import m3_quantale, powerset_quantale
from qk.quantfile import load_hom, load_quant

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def q4():
    return load_quant(DATA / "q4.quant")


@pytest.fixture(scope="session")
def l3():
    return load_quant(DATA / "l3.quant")


@pytest.fixture(scope="session")
def c2():
    return load_quant(DATA / "c2.quant")


@pytest.fixture(scope="session")
def nondec():
    return load_quant(DATA / "nondec.quant")


@pytest.fixture(scope="session")
def m3():
    return m3_quantale()


@pytest.fixture(scope="session")
def p3():
    return powerset_quantale(3)


def _rebind(hom, source, target):
    # ideal operations compare carriers by object identity, so the hom must
    # share the session fixtures, not its own freshly parsed copies
    assert hom.source.same_structure(source)
    assert hom.target.same_structure(target)
    return replace(hom, source=source, target=target)


@pytest.fixture(scope="session")
def q4_to_c2(q4, c2):
    return _rebind(load_hom(DATA / "q4_to_c2.hom"), q4, c2)


@pytest.fixture(scope="session")
def l3_to_c2(l3, c2):
    return _rebind(load_hom(DATA / "l3_to_c2.hom"), l3, c2)
