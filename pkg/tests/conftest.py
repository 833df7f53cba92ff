import random

from hypothesis import strategies as st

from exradii.exact import TriangleSides


@st.composite
def triangles(draw, max_side=10**6):
    a = draw(st.integers(min_value=1, max_value=max_side))
    b = draw(st.integers(min_value=1, max_value=max_side))
    c = draw(st.integers(min_value=abs(a - b) + 1, max_value=a + b - 1))
    return TriangleSides(a, b, c)


def random_triangle(rng: random.Random, max_side=10**6) -> TriangleSides:
    while True:
        a = rng.randint(1, max_side)
        b = rng.randint(1, max_side)
        lo, hi = abs(a - b) + 1, a + b - 1
        if lo > hi:
            continue
        return TriangleSides(a, b, rng.randint(lo, hi))
