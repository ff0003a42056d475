from __future__ import annotations

from hypothesis import strategies as st

from hiernet import RadixSpec

# Members small enough for exhaustive pair checks in tests.
TINY_RADICES = [
    (2,),
    (3,),
    (2, 2),
    (2, 3),
    (3, 3),
    (2, 2, 2),
    (2, 3, 4),
    (3, 2, 2),
    (4, 4),
]


def tiny_specs() -> list[RadixSpec]:
    return [RadixSpec(r) for r in TINY_RADICES]


@st.composite
def radix_specs(draw, max_k: int = 5, max_radix: int = 5):
    radices = draw(
        st.lists(st.integers(2, max_radix), min_size=1, max_size=max_k).map(tuple)
    )
    return RadixSpec(radices)


@st.composite
def spec_with_label(draw, max_k: int = 5, max_radix: int = 5):
    spec = draw(radix_specs(max_k, max_radix))
    digits = tuple(draw(st.integers(0, n - 1)) for n in spec.radices)
    return spec, spec.label(digits)


@st.composite
def spec_with_pair(draw, max_k: int = 5, max_radix: int = 5):
    spec = draw(radix_specs(max_k, max_radix))
    x = tuple(draw(st.integers(0, n - 1)) for n in spec.radices)
    y = tuple(draw(st.integers(0, n - 1)) for n in spec.radices)
    return spec, spec.label(x), spec.label(y)
