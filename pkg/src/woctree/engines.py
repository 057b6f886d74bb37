"""Named stopping conditions and the three counting engines behind them."""

from __future__ import annotations

from . import counting, series
from .core import Relation, StoppingPattern
from .treesim import DEFAULT_FRONTIER_CAP, LeafTally, tally

__all__ = [
    "ALIASES", "NAMED_CONDITIONS", "EngineUnavailable", "resolve_condition",
    "condition_name", "sim_tally", "formula_tally", "series_tally", "run_engine",
    "ENGINES",
]

ALIASES = {
    "tie": "=",
    "lt": "<",
    "le": "<=",
    "strict123": "<,<",
    "weak123": "<=,<=",
    "mixed123": "<=,<",
    "lt-eq": "<,=",
    "le-eq": "<=,=",
}

# the nine condition families studied, k-equal taken at k = 3
NAMED_CONDITIONS = tuple(ALIASES) + ("kequal:3",)

ENGINES = ("sim", "formula", "series")

_SERIES = {
    "strict123": ("A3", "B3", "W3"),
    "weak123": ("A4", "B4", "W4"),
    "mixed123": ("A5", "B5", "W5"),
}


class EngineUnavailable(ValueError):
    pass


def resolve_condition(spec: str) -> StoppingPattern:
    """Alias (``strict123``, ``kequal:4``...) or raw relations (``"<=,="``)."""
    spec = spec.strip()
    if spec in ALIASES:
        return StoppingPattern.parse(ALIASES[spec])
    if spec.startswith("kequal:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad k in {spec!r}") from None
        if k < 2:
            raise ValueError("kequal needs k >= 2")
        return StoppingPattern((Relation.EQ,) * (k - 1))
    if not any(ch in spec for ch in "<=≤"):
        raise ValueError(f"unknown condition {spec!r}")
    return StoppingPattern.parse(spec)


def condition_name(p: StoppingPattern) -> str | None:
    """Alias of a pattern with known formulas, or None."""
    text = str(p)
    for name, rels in ALIASES.items():
        if rels == text and name != "tie":
            return name
    if all(r is Relation.EQ for r in p.relations):
        return "tie" if p.arity == 2 else f"kequal:{p.arity}"
    return None


def sim_tally(p: StoppingPattern, n_max: int, frontier_cap: int = DEFAULT_FRONTIER_CAP,
              workers: int = 1) -> LeafTally:
    return tally(p, n_max, frontier_cap=frontier_cap, workers=workers)


def _formula_triple(name: str, n: int) -> counting.CountTriple:
    if name in ("tie", "lt", "le"):
        return counting.size2_counts(name, n)
    if name.startswith("kequal:"):
        return counting.counts_kequal(int(name.split(":")[1]), n)
    return {
        "strict123": counting.counts_123,
        "weak123": counting.counts_leq_leq,
        "mixed123": counting.counts_leq_lt,
        "lt-eq": counting.counts_lt_eq,
        "le-eq": counting.counts_le_eq,
    }[name](n)


def formula_tally(p: StoppingPattern, n_max: int) -> LeafTally:
    name = condition_name(p)
    if name is None:
        raise EngineUnavailable(f"no closed form is known for condition {p}")
    triples = [_formula_triple(name, n) for n in range(1, n_max + 1)]
    out = LeafTally.from_counts([t.a for t in triples], [t.delta for t in triples])
    if out.w != tuple(t.w for t in triples):
        raise counting.FormulaMismatch(f"{name}: w differs from a + cumulative delta")
    return out


def series_tally(p: StoppingPattern, n_max: int) -> LeafTally:
    name = condition_name(p)
    if name not in _SERIES:
        raise EngineUnavailable(f"no generating function is known for condition {p}")
    A, B, W = (series.gf(g, n_max) for g in _SERIES[name])
    a = [series.as_count(A[n]) for n in range(1, n_max + 1)]
    b = [series.as_count(B[n]) for n in range(1, n_max + 1)]
    w = [series.as_count(W[n]) for n in range(1, n_max + 1)]
    delta = [b[0]] + [b[j] - b[j - 1] for j in range(1, n_max)]
    out = LeafTally(n_max, tuple(a), tuple(delta), tuple(b), tuple(w))
    if any(x + y != z for x, y, z in zip(a, b, w)):
        raise counting.FormulaMismatch(f"{name}: W != A + B")
    return out


def run_engine(engine: str, p: StoppingPattern, n_max: int, **kw) -> LeafTally:
    if engine == "sim":
        return sim_tally(p, n_max, **kw)
    if engine == "formula":
        return formula_tally(p, n_max)
    if engine == "series":
        return series_tally(p, n_max)
    raise ValueError(f"unknown engine {engine!r}")
