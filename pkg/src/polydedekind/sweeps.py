"""Named identity sweeps over rectangular parameter ranges.

Each sweep knows its parameter names, default ranges, and how to turn one
parameter tuple into report lines. Lines come out in lexicographic order of
the parameter tuple, keys ordered h, m, p, k, n, s, d, i.
"""
from __future__ import annotations

import itertools
import random
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence

from . import classical, dedekind, polybernoulli
from .report import IdentityReport, PreconditionError

__all__ = [
    "PARAM_ORDER",
    "SweepLine",
    "Sweep",
    "SWEEPS",
    "IDENTITY_NAMES",
    "LEMMA1_SAMPLES",
    "run_sweep",
]

PARAM_ORDER = ("h", "m", "p", "k", "n", "s", "d", "i")


def _lemma1_samples(count: int = 100, seed: int = 0) -> List[Fraction]:
    rng = random.Random(seed)
    return [Fraction(rng.randint(-200, 200), rng.randint(1, 50)) for _ in range(count)]


# rational evaluation points for the periodic distribution relations
LEMMA1_SAMPLES = tuple(_lemma1_samples())


@dataclass(frozen=True)
class SweepLine:
    identity: str
    params: Dict[str, int]
    report: Optional[IdentityReport] = None
    skipped: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.report is not None and not self.report.holds


@dataclass(frozen=True)
class Sweep:
    name: str
    params: Sequence[str]
    defaults: Dict[str, Sequence[int]]
    evaluate: Callable[..., List[IdentityReport]]
    # drops tuples outside the default domain when a range was not overridden
    keep: Optional[Callable[..., bool]] = None
    skip_reason: Optional[Callable[..., Optional[str]]] = None


def _r(a: int, b: int) -> List[int]:
    return list(range(a, b + 1))


def _gcd_skip(h, m, **_):
    return "gcd>1" if gcd(h, m) != 1 else None


def _odd3_skip(p, **_):
    return "p not odd >= 3" if p < 3 or p % 2 == 0 else None


def _odd_skip(p, **_):
    return "p even" if p % 2 == 0 else None


def _chain(*fns):
    def skip(**kw):
        for f in fns:
            why = f(**kw)
            if why:
                return why
        return None

    return skip


def _lemma1(n, d, i):
    rep = classical.verify_distribution(n, d, LEMMA1_SAMPLES[i])
    return [IdentityReport("lemma1", {"n": n, "d": d, "i": i}, rep.lhs, rep.rhs, details=rep.details)]


def _theorem9(k, n, d):
    expanded = polybernoulli.theorem9_expand(k, n, d)
    direct = polybernoulli.poly_bernoulli_poly(k, n)
    size = max(len(expanded), len(direct))
    return [
        IdentityReport("theorem9", {"k": k, "n": n, "d": d, "i": i}, expanded[i], direct[i])
        for i in range(size)
    ]


def _one(fn):
    return lambda **kw: [fn(**kw)]


SWEEPS: Dict[str, Sweep] = {
    s.name: s
    for s in [
        Sweep(
            "lemma1",
            ("n", "d", "i"),
            {"n": _r(0, 8), "d": _r(1, 5), "i": _r(0, len(LEMMA1_SAMPLES) - 1)},
            _lemma1,
        ),
        Sweep(
            "theorem2",
            ("k", "n"),
            {"k": _r(-3, 3), "n": _r(1, 12)},
            _one(lambda k, n: polybernoulli.theorem2_check(k, n)),
        ),
        Sweep(
            "theorem3",
            ("p", "k", "s"),
            {"p": _r(1, 8), "k": _r(-2, 3), "s": _r(1, 10)},
            _one(lambda p, k, s: polybernoulli.theorem3_check(k, s, p)),
            keep=lambda p, s, **_: s <= p + 2,
        ),
        Sweep(
            "corollary4",
            ("p", "k", "s"),
            {"p": _r(1, 8), "k": _r(-2, 3), "s": _r(1, 10)},
            _one(lambda p, k, s: polybernoulli.corollary4_check(k, s, p)),
            keep=lambda p, s, **_: s <= p + 2,
        ),
        Sweep(
            "theorem5",
            ("p", "k"),
            {"p": _r(1, 8), "k": _r(-2, 3)},
            _one(lambda p, k: polybernoulli.theorem5_check(k, p)),
        ),
        Sweep(
            "proposition6",
            ("m", "p", "k"),
            {"m": _r(1, 10), "p": [3, 5, 7], "k": _r(-2, 3)},
            _one(lambda m, p, k: dedekind.proposition6_check(k, p, m)),
            skip_reason=_odd3_skip,
        ),
        Sweep(
            "theorem7",
            ("m", "p", "k"),
            {"m": _r(1, 10), "p": [3, 5, 7], "k": _r(-2, 3)},
            _one(lambda m, p, k: dedekind.theorem7_check(k, p, m)),
            skip_reason=_odd3_skip,
        ),
        Sweep(
            "theorem8",
            ("h", "m", "p", "k"),
            {"h": _r(1, 6), "m": _r(1, 6), "p": [3, 5, 7], "k": _r(-2, 3)},
            _one(lambda h, m, p, k: dedekind.theorem8_check(k, p, h, m)),
            skip_reason=_chain(_gcd_skip, _odd3_skip),
        ),
        Sweep(
            "theorem9",
            ("k", "n", "d"),
            {"k": _r(-2, 3), "n": _r(0, 8), "d": _r(1, 5)},
            _theorem9,
        ),
        Sweep(
            "theorem10",
            ("h", "m", "p", "k"),
            {"h": _r(1, 8), "m": _r(1, 8), "p": _r(1, 6), "k": _r(-2, 3)},
            _one(lambda h, m, p, k: dedekind.theorem10_check(k, p, h, m)),
            skip_reason=_gcd_skip,
        ),
        Sweep(
            "corollary11",
            ("h", "m", "p"),
            {"h": _r(1, 8), "m": _r(1, 8), "p": _r(1, 6)},
            _one(lambda h, m, p: dedekind.corollary11_check(p, h, m)),
            skip_reason=_gcd_skip,
        ),
        Sweep(
            "classical-reciprocity",
            ("h", "m"),
            {"h": _r(1, 30), "m": _r(1, 30)},
            _one(lambda h, m: dedekind.classical_reciprocity_check(h, m)),
            skip_reason=_gcd_skip,
        ),
        Sweep(
            "apostol-reciprocity",
            ("h", "m", "p"),
            {"h": _r(1, 10), "m": _r(1, 10), "p": [1, 3, 5, 7]},
            _one(lambda h, m, p: dedekind.apostol_reciprocity_check(p, h, m)),
            skip_reason=_chain(_gcd_skip, _odd_skip),
        ),
    ]
}

IDENTITY_NAMES = tuple(SWEEPS)


def _tuples(sweep: Sweep, ranges: Dict[str, Sequence[int]]) -> Iterator[Dict[str, int]]:
    names = [p for p in PARAM_ORDER if p in sweep.params]
    axes = []
    for name in names:
        axis = ranges.get(name)
        axes.append(sorted(set(axis)) if axis is not None else list(sweep.defaults[name]))
    overridden = {name for name in names if ranges.get(name) is not None}
    for combo in itertools.product(*axes):
        kw = dict(zip(names, combo))
        # a dependent default (s <= p + 2) only applies while s is not given explicitly
        if sweep.keep is not None and "s" not in overridden and not sweep.keep(**kw):
            continue
        yield kw


def run_sweep(
    name: str,
    ranges: Optional[Dict[str, Sequence[int]]] = None,
    fail_fast: bool = False,
) -> Iterator[SweepLine]:
    """Yield one line per report (or per skipped tuple) for identity ``name``.

    ``name == "all"`` runs every sweep in registry order. With ``fail_fast``
    the iteration stops after the first line whose identity does not hold.
    """
    ranges = ranges or {}
    names = IDENTITY_NAMES if name == "all" else (name,)
    for nm in names:
        if nm not in SWEEPS:
            raise KeyError(nm)
        sweep = SWEEPS[nm]
        for kw in _tuples(sweep, ranges):
            why = sweep.skip_reason(**kw) if sweep.skip_reason else None
            if why is None:
                try:
                    reports = sweep.evaluate(**kw)
                except PreconditionError as exc:
                    why = str(exc)
            if why is not None:
                yield SweepLine(nm, kw, skipped=why)
                continue
            for rep in reports:
                line = SweepLine(nm, _ordered(rep.params), report=rep)
                yield line
                if fail_fast and line.failed:
                    return


def _ordered(params: Dict[str, int]) -> Dict[str, int]:
    return {k: params[k] for k in PARAM_ORDER if k in params}
