"""Search an eigenspace for functions with few strong nodal domains.

Functions are integer combinations of ``eigenspace_basis`` elements. The
exhaustive mode scans the whole coefficient grid [-c, c]^dim; the random mode
draws grid points and improves each by single-coefficient ±1 moves, accepting
the first move that lowers SND. Exhaustive minima are exact over the stated
grid; random results are evidence only.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import asdict, dataclass
from multiprocessing import Pool

import numpy as np

from . import kernels
from .core import GraphParams, GridFunction
from .errors import BudgetExceeded, LengthMismatch, ZeroDimension, ZeroVector
from .nodal import snd
from .spectra import eigenspace_basis, eigenvalue, is_eigenfunction, multiplicity

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 10**8
CHUNK = 64
METHOD = "integer coefficient grid; random starts refined by first-improvement ±1 hill climbing"


@dataclass(frozen=True)
class SearchConfig:
    n: int
    q: int
    i: int
    mode: str = "random"
    coeff_range: int = 4
    samples: int = 1000
    local_steps: int = 50
    seed: int = 0
    jobs: int = 1
    stop_at: int | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if self.coeff_range < 1:
            raise ValueError("coeff_range must be at least 1")
        if self.samples < 1 or self.local_steps < 0 or self.jobs < 1:
            raise ValueError("samples and jobs must be positive, local_steps non-negative")

    @property
    def params(self) -> GraphParams:
        return GraphParams(self.n, self.q)

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SearchResult:
    best_snd: int
    certificate: GridFunction
    coefficients: tuple[int, ...]
    evaluations: int
    seed: int
    config: SearchConfig

    @property
    def label(self) -> str:
        return "grid-exact" if self.config.mode == "exhaustive" else "evidence only"

    def to_json(self) -> dict:
        return {
            "n": self.config.n,
            "q": self.config.q,
            "i": self.config.i,
            "eigenvalue": self.config.q * self.config.i,
            "best_snd": self.best_snd,
            "coefficients": list(self.coefficients),
            "evaluations": self.evaluations,
            "seed": self.seed,
            "label": self.label,
            "certificate": self.certificate.to_json(),
            "provenance": {"config": self.config.to_json(), "method": METHOD},
        }


def basis_matrix(params: GraphParams, i: int) -> np.ndarray:
    basis = eigenspace_basis(params, i)
    return np.array([b.values for b in basis], dtype=np.int64)


class _Scorer:
    """SND of integer coefficient vectors against a fixed basis matrix."""

    def __init__(self, basis: np.ndarray, n: int, q: int):
        self.basis = basis
        self.n = n
        self.q = q
        self.evaluations = 0

    def snd_values(self, f: np.ndarray) -> int:
        self.evaluations += 1
        npos, nneg = kernels.sign_component_counts(f, self.n, self.q)
        return npos + nneg

    def values(self, coeffs) -> np.ndarray:
        return np.ascontiguousarray(np.asarray(coeffs, dtype=np.int64) @ self.basis)


def evaluate(coefficients, n: int, q: int, i: int) -> tuple[GridFunction, int]:
    """f = sum_b c_b * basis_b, and its SND."""
    params = GraphParams(n, q)
    dim = multiplicity(params, i)
    coefficients = [int(c) for c in coefficients]
    if len(coefficients) != dim:
        raise LengthMismatch(f"expected {dim} coefficients, got {len(coefficients)}")
    if not any(coefficients):
        raise ZeroVector("coefficient vector is zero")
    basis = eigenspace_basis(params, i)
    values = [0] * params.size
    for c, b in zip(coefficients, basis):
        if c:
            values = [v + c * w for v, w in zip(values, b.values)]
    f = GridFunction(params, tuple(values))
    return f, snd(f)


def _hill_climb(scorer: _Scorer, coeffs: np.ndarray, c: int, steps: int) -> tuple[int, np.ndarray]:
    f = scorer.values(coeffs)
    best = scorer.snd_values(f)
    basis = scorer.basis
    for _ in range(steps):
        improved = False
        for j in range(len(coeffs)):
            for delta in (1, -1):
                new = coeffs[j] + delta
                if abs(new) > c:
                    continue
                coeffs[j] = new
                if not coeffs.any():
                    coeffs[j] -= delta
                    continue
                g = f + delta * basis[j]
                score = scorer.snd_values(g)
                if score < best:
                    best, f, improved = score, g, True
                    break
                coeffs[j] -= delta
            if improved:
                break
        if not improved:
            break
    return best, coeffs


def _draw(rng: np.random.Generator, dim: int, c: int) -> np.ndarray:
    while True:
        v = rng.integers(-c, c + 1, size=dim, dtype=np.int64)
        if v.any():
            return v


_worker_state: dict = {}


def _init_worker(basis, n, q, c, steps, seed, samples):
    _worker_state.update(basis=basis, n=n, q=q, c=c, steps=steps, seed=seed, samples=samples)


def _run_chunk(chunk: int):
    """Best (snd, ordinal, coeffs) within one chunk of sample ordinals, plus evaluation count."""
    st = _worker_state
    scorer = _Scorer(st["basis"], st["n"], st["q"])
    dim = st["basis"].shape[0]
    best = None
    stop = min((chunk + 1) * CHUNK, st["samples"])
    for ordinal in range(chunk * CHUNK, stop):
        rng = np.random.default_rng([st["seed"], ordinal])
        score, coeffs = _hill_climb(scorer, _draw(rng, dim, st["c"]), st["c"], st["steps"])
        if best is None or score < best[0]:
            best = (score, ordinal, coeffs.tolist())
    return best, scorer.evaluations


def _random_search(cfg: SearchConfig, basis: np.ndarray):
    init = (basis, cfg.n, cfg.q, cfg.coeff_range, cfg.local_steps, cfg.seed, cfg.samples)
    nchunks = -(-cfg.samples // CHUNK)
    best = None
    evaluations = 0
    pool = Pool(cfg.jobs, initializer=_init_worker, initargs=init) if cfg.jobs > 1 else None
    if pool is None:
        _init_worker(*init)
    try:
        batch = max(cfg.jobs, 1) * 4
        for start in range(0, nchunks, batch):
            ids = range(start, min(start + batch, nchunks))
            results = pool.map(_run_chunk, ids) if pool else [_run_chunk(k) for k in ids]
            for chunk_best, evals in results:
                evaluations += evals
                if best is None or chunk_best[:2] < best[:2]:
                    best = chunk_best
                if cfg.stop_at is not None and best[0] <= cfg.stop_at:
                    return best, evaluations
            log.debug("chunks %d..%d done, best SND so far %d", ids[0], ids[-1], best[0])
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return best, evaluations


def _exhaustive_slice(lead: int):
    st = _worker_state
    scorer = _Scorer(st["basis"], st["n"], st["q"])
    c = st["c"]
    dim = st["basis"].shape[0]
    best = None
    rest = np.array(list(itertools.product(range(-c, c + 1), repeat=dim - 1)), dtype=np.int64)
    rest = rest.reshape(-1, dim - 1)
    grid = np.hstack([np.full((len(rest), 1), lead, dtype=np.int64), rest])
    values = grid @ st["basis"]
    for row, f in zip(grid, values):
        if not row.any():
            continue
        score = scorer.snd_values(np.ascontiguousarray(f))
        if best is None or score < best[0]:
            best = (score, row.tolist())
    return best, scorer.evaluations


def _exhaustive_search(cfg: SearchConfig, basis: np.ndarray):
    dim = basis.shape[0]
    c = cfg.coeff_range
    if (2 * c + 1) ** dim > EXHAUSTIVE_LIMIT:
        raise BudgetExceeded(f"(2c+1)^dim = {(2 * c + 1) ** dim} exceeds {EXHAUSTIVE_LIMIT}")
    init = (basis, cfg.n, cfg.q, c, 0, cfg.seed, 0)
    leads = list(range(-c, c + 1))
    if cfg.jobs > 1:
        with Pool(cfg.jobs, initializer=_init_worker, initargs=init) as pool:
            results = pool.map(_exhaustive_slice, leads)
    else:
        _init_worker(*init)
        results = [_exhaustive_slice(lead) for lead in leads]
    best = None
    evaluations = 0
    for res, evals in results:
        evaluations += evals
        if res is not None and (best is None or res[0] < best[0]):
            best = res
    return (best[0], 0, best[1]), evaluations


def search(cfg: SearchConfig) -> SearchResult:
    """Minimise SND over integer combinations of the (q·i)-eigenspace basis."""
    params = cfg.params
    if cfg.i < 1 or cfg.i > cfg.n:
        raise ZeroDimension(f"eigenvalue index {cfg.i} has no non-constant eigenspace on H({cfg.n},{cfg.q})")
    basis = basis_matrix(params, cfg.i)
    if cfg.mode == "exhaustive":
        (best_snd, _, coeffs), evaluations = _exhaustive_search(cfg, basis)
    else:
        (best_snd, _, coeffs), evaluations = _random_search(cfg, basis)
    f = GridFunction(params, tuple(int(v) for v in np.asarray(coeffs, dtype=np.int64) @ basis))
    if not is_eigenfunction(f, eigenvalue(params, cfg.i)):
        raise RuntimeError("certificate left the eigenspace")
    return SearchResult(best_snd, f, tuple(int(c) for c in coeffs), evaluations, cfg.seed, cfg)


def verify_conjecture_evidence(n_max: int, samples: int = 20000, seed: int = 0, jobs: int = 1) -> list[dict]:
    """Best SND found on the 3n-eigenspace of H(n, 3) for n = 1..n_max, next to n + 1.

    A match is evidence for the lower bound n + 1, never a proof of it. Random
    runs stop early only at SND = 2, the floor for any nonconstant eigenfunction,
    so a value below n + 1 is never hidden by the early exit.
    """
    if n_max > 4:
        raise BudgetExceeded("conjecture evidence is limited to n <= 4")
    rows = []
    for n in range(1, n_max + 1):
        dim = multiplicity(GraphParams(n, 3), n)
        if dim <= 4:
            cfg = SearchConfig(n, 3, n, mode="exhaustive", coeff_range=4, seed=seed, jobs=jobs)
        else:
            cfg = SearchConfig(n, 3, n, mode="random", coeff_range=4, samples=samples,
                               local_steps=50, seed=seed, jobs=jobs, stop_at=2)
        res = search(cfg)
        rows.append({
            "n": n,
            "best_snd_found": res.best_snd,
            "conjectured_min": n + 1,
            "matches": res.best_snd == n + 1,
            "label": res.label,
            "coefficients": list(res.coefficients),
        })
    return rows
