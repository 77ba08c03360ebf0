"""Named fixtures and the seeded random-cover ratio experiment."""

from __future__ import annotations

import json
import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from fractions import Fraction
from typing import Iterable

import numpy as np

from .cover import CoveringProjection, lift, random_voltages, verify_projection
from .domsolve import domination_number, torus
from .graph import Graph, cartesian_product, cycle, dodecahedron, path, petersen, regularity, to_graph6

log = logging.getLogger(__name__)

CUBIC_FLOOR = Fraction(3, 5)


class ResearchEvent(UserWarning):
    """An observed ratio fell outside a proven bound: either a bug or a refutation."""


# --- fixtures -------------------------------------------------------------------

def _named(g: Graph, name: str) -> Graph:
    return Graph(g.n, g.adj, name=name, labels=g.labels)


def _h_cylinder() -> Graph:
    # C4 x P5: vertex (ring level x, column y) is x * 5 + y.  The adjacency list
    # of this graph is not printed anywhere; it is read off the drawing (four
    # levels closing into a ring, five columns) and reproduces every stated fact.
    return _named(cartesian_product(cycle(4), path(5)), "H")


def _g_cylinder() -> Graph:
    # the 5x8 grid with each row closed into an 8-cycle, i.e. C8 x P5
    return _named(cartesian_product(cycle(8), path(5)), "G")


# A 17-vertex connected dominating set of C8 x P5, found by exhaustive search.
CYLINDER_CDS_WITNESS = (0, 1, 2, 3, 4, 5, 10, 11, 12, 13, 18, 23, 25, 26, 27, 28, 29)


def _petersen_dodecahedron():
    F, G = petersen(), dodecahedron()
    return F, G, CoveringProjection(G, F, tuple(v % 10 for v in range(G.n)))


def _torus_15_cover():
    F, G = torus(3), torus(15)
    return F, G, CoveringProjection(G, F, tuple((v // 15 % 3) * 3 + v % 15 % 3 for v in range(G.n)))


def _h_g_double_cover():
    H, G = _h_cylinder(), _g_cylinder()
    return H, G, CoveringProjection(G, H, tuple((v // 5 % 4) * 5 + v % 5 for v in range(G.n)))


FIXTURES = {
    "petersen-dodecahedron": _petersen_dodecahedron,
    "torus-3": lambda: torus(3),
    "torus-15-cover": _torus_15_cover,
    "H-cylinder": _h_cylinder,
    "G-cylinder": _g_cylinder,
    "H-G-double-cover": _h_g_double_cover,
}


def fixture(name: str):
    """A graph, or a ``(base, total, projection)`` triple for the cover fixtures."""
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}") from None


# --- experiment records -------------------------------------------------------------

@dataclass(frozen=True)
class ExperimentRecord:
    base_id: str
    k: int
    trial: int
    seed: int
    gamma_F: int
    gamma_G: int
    gamma_G_optimal: bool
    c_obs: Fraction
    lift_components: int
    timestamp: str | None = None

    def to_json(self) -> str:
        d = asdict(self)
        d["c_obs"] = f"{self.c_obs.numerator}/{self.c_obs.denominator}"
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> ExperimentRecord:
        num, _, den = str(d["c_obs"]).partition("/")
        return cls(
            base_id=str(d["base_id"]),
            k=int(d["k"]),
            trial=int(d["trial"]),
            seed=int(d["seed"]),
            gamma_F=int(d["gamma_F"]),
            gamma_G=int(d["gamma_G"]),
            gamma_G_optimal=bool(d["gamma_G_optimal"]),
            c_obs=Fraction(int(num), int(den or 1)),
            lift_components=int(d["lift_components"]),
            timestamp=d.get("timestamp"),
        )


def trial_seeds(seed: int, trials: int) -> list[int]:
    return [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(trials)]


def _run_trial(args) -> ExperimentRecord:
    base, k, trial, tseed, gamma_F, budget, stamp = args
    G, p = lift(random_voltages(base, k, tseed))
    verdict = verify_projection(p)
    if not verdict:
        raise RuntimeError(f"lift failed verification: {verdict.reason}")
    cert = domination_number(G, "plain", budget)
    return ExperimentRecord(
        base_id=to_graph6(base),
        k=k,
        trial=trial,
        seed=tseed,
        gamma_F=gamma_F,
        gamma_G=cert.value,
        gamma_G_optimal=cert.optimal,
        c_obs=Fraction(cert.value, k * gamma_F),
        lift_components=len(G.components()),
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds") if stamp else None,
    )


def record_violations(rec: ExperimentRecord, cubic: bool) -> list[str]:
    """Proven bounds that ``rec`` breaks (empty for a sound record)."""
    events = []
    if rec.c_obs > 1:
        events.append(f"trial {rec.trial}: c_obs {rec.c_obs} > 1 contradicts the lift upper bound")
    if cubic and rec.gamma_G_optimal and rec.c_obs < CUBIC_FLOOR:
        events.append(f"trial {rec.trial}: c_obs {rec.c_obs} < 3/5 on a cubic base")
    return events


def check_record(rec: ExperimentRecord, cubic: bool) -> list[str]:
    """Like ``record_violations`` but every hit is logged and warned about."""
    events = record_violations(rec, cubic)
    for msg in events:
        log.error("RESEARCH EVENT: %s", msg)
        warnings.warn(msg, ResearchEvent, stacklevel=3)
    return events


def ratio_experiment(
    base: Graph,
    k: int,
    trials: int,
    seed: int,
    budget: int | None = None,
    workers: int = 1,
    stamp: bool = False,
) -> list[ExperimentRecord]:
    """Random k-fold lifts of ``base``; records gamma(G) / (k gamma(F)) per trial.

    Output depends only on the arguments (timestamps aside, which are off by default).
    """
    if not base.is_connected():
        raise ValueError("ratio experiment needs a connected base")
    cert_F = domination_number(base, "plain", budget)
    if not cert_F.optimal:
        raise RuntimeError("base domination number did not finish within the budget")
    jobs = [(base, k, t, s, cert_F.value, budget, stamp) for t, s in enumerate(trial_seeds(seed, trials))]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(pool.map(_run_trial, jobs))
    else:
        records = [_run_trial(j) for j in jobs]
    cubic = regularity(base) == 3
    for r in records:
        check_record(r, cubic)
    return records


def summarize(records: Iterable[ExperimentRecord]) -> dict:
    records = list(records)
    optimal = [r for r in records if r.gamma_G_optimal]
    lo = min((r.c_obs for r in optimal), default=None)
    return {
        "trials": len(records),
        "non_optimal": len(records) - len(optimal),
        "min_c_obs": None if lo is None else str(lo),
        "min_c_obs_decimal": None if lo is None else f"{float(lo):.6f}",
    }


def persist(records: Iterable[ExperimentRecord], path) -> None:
    with open(path, "w") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def load(path) -> list[ExperimentRecord]:
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                out.append(ExperimentRecord.from_dict(json.loads(line)))
            except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
                raise ValueError(f"{path}:{lineno}: malformed record ({exc!r})") from exc
    return out
