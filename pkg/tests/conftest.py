import pytest

from skewpoly import (
    DdxDer,
    IdentityAut,
    InnerDer,
    OreRing,
    QDiffDer,
    inner_aut,
    q_shift,
    zero_der,
)
from skewpoly.scalars import HQ, Q, QX


@pytest.fixture(scope="session")
def weyl():
    """Q(x)[t; id, d/dx], the first Weyl algebra."""
    return OreRing(QX, [("t", IdentityAut(), DdxDer())])


@pytest.fixture(scope="session")
def weyl2():
    """Two commuting Weyl-type variables, both twisted by d/dx."""
    return OreRing(QX, [("t1", IdentityAut(), DdxDer()),
                        ("t2", IdentityAut(), DdxDer())])


@pytest.fixture(scope="session")
def weyl3():
    """Three commuting variables over Q(x) with mixed zero/ddx derivations."""
    return OreRing(QX, [("y1", IdentityAut(), DdxDer()),
                        ("y2", IdentityAut(), zero_der()),
                        ("y3", IdentityAut(), DdxDer())])


@pytest.fixture(scope="session")
def rat3():
    """Three untwisted variables over Q."""
    ident = IdentityAut()
    return OreRing(Q, [(n, ident, zero_der()) for n in ("a", "b", "c")])


@pytest.fixture(scope="session")
def rat1():
    return OreRing(Q, [("t", IdentityAut(), zero_der())])


@pytest.fixture(scope="session")
def quat1():
    """H(Q)[t] with trivial twists."""
    return OreRing(HQ, [("t", IdentityAut(), zero_der())])


@pytest.fixture(scope="session")
def quat2():
    """Two trivially twisted variables over H(Q)."""
    ident = IdentityAut()
    return OreRing(HQ, [("t1", ident, zero_der()),
                        ("t2", ident, zero_der())])


@pytest.fixture(scope="session")
def quat_inner():
    """One variable over H(Q) twisted by conjugation by i."""
    aut = inner_aut(HQ.i())
    return OreRing(HQ, [("t", aut, zero_der(aut))])


@pytest.fixture(scope="session")
def quat_inner2():
    """Two variables sharing the inner automorphism by i, one with a
    non-trivial inner derivation (witness 1+2i commutes with i)."""
    aut = inner_aut(HQ.i())
    return OreRing(HQ, [("t1", aut, InnerDer(HQ.make(1, 2), aut)),
                        ("t2", aut, zero_der(aut))])


@pytest.fixture(scope="session")
def qdiff_ring():
    """Q(x)[t; x->2x, q-difference quotient]."""
    aut = q_shift(2)
    return OreRing(QX, [("t", aut, QDiffDer(aut))])
