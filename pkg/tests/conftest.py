from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from arikikoike.combinatorics import Multipartition, Partition

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partitions_st(draw, max_size: int = 8):
    n = draw(st.integers(0, max_size))
    parts = []
    left, cap = n, n
    while left:
        p = draw(st.integers(1, min(left, cap)))
        parts.append(p)
        left -= p
        cap = p
    return Partition(tuple(parts))


@st.composite
def multipartitions_st(draw, m_max: int = 3, size_max: int = 6, m: int | None = None):
    m = m if m is not None else draw(st.integers(1, m_max))
    comps = [draw(partitions_st(max_size=size_max // m or 1)) for _ in range(m)]
    return Multipartition(tuple(comps))
