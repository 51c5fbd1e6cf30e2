from hypothesis import settings, strategies as st

from skewtab.shapes import Partition, SkewShape

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def partitions_st(draw, max_size: int = 7, max_len: int = 4):
    parts = draw(st.lists(st.integers(1, max_size), min_size=0, max_size=max_len))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_size:
        parts.pop(0) if parts[0] == 1 else parts.__setitem__(0, parts[0] - 1)
        parts = sorted((p for p in parts if p), reverse=True)
    return Partition(parts)


@st.composite
def skew_shapes_st(draw, max_size: int = 7, max_len: int = 4):
    outer = draw(partitions_st(max_size, max_len))
    inner = []
    for i in range(1, len(outer) + 1):
        bound = min(outer[i], inner[-1] if inner else outer[i])
        inner.append(draw(st.integers(0, bound)))
    return SkewShape(outer, Partition(inner))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
