import pytest
from lpdm import LpdmSpec, all_subsets, gale_leq


@pytest.fixture(scope="session")
def specs_n3():
    """All interval specs on a 3-element ground."""
    masks = list(all_subsets(3))
    return [
        LpdmSpec.of(3, s.members, t.members)
        for s in masks
        for t in masks
        if gale_leq(s, t)
    ]
