import pytest
from hypothesis import strategies as st

from thompsonv.modular import psi_map, z_map
from thompsonv.pda import pda_for
from thompsonv.prm import make_prm


@pytest.fixture(scope="session")
def pda_z():
    return pda_for(z_map(), "0")


@pytest.fixture(scope="session")
def pda_psi():
    return pda_for(psi_map(), "0")


@st.composite
def barriers(draw, splits):
    leaves = [""]
    for _ in range(splits):
        u = leaves.pop(draw(st.integers(0, len(leaves) - 1)))
        leaves += [u + "0", u + "1"]
    return sorted(leaves)


@st.composite
def prms(draw, max_splits=5):
    """Random element of V from two barriers of equal size and a bijection between them."""
    n = draw(st.integers(0, max_splits))
    dom = draw(barriers(n))
    rng = draw(st.permutations(draw(barriers(n))))
    return make_prm(zip(dom, rng))
