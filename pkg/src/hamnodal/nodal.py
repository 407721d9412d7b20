"""Strong and weak nodal domains, and the Courant-type upper bounds."""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import GridFunction, VertexSet, induced_components
from .errors import NotAnEigenfunction, ZeroFunction
from .spectra import courant_position, eigenvalue, is_eigenfunction


@dataclass(frozen=True)
class NodalReport:
    positive_strong: list[VertexSet]
    negative_strong: list[VertexSet]
    positive_weak: list[VertexSet]
    negative_weak: list[VertexSet]

    @property
    def snd(self) -> int:
        return len(self.positive_strong) + len(self.negative_strong)

    @property
    def wnd(self) -> int:
        return len(self.positive_weak) + len(self.negative_weak)


@dataclass(frozen=True)
class CourantReport:
    k: int
    r: int
    snd: int
    wnd: int

    @property
    def snd_bound(self) -> int:
        return self.k + self.r - 1

    @property
    def snd_bound_ok(self) -> bool:
        return self.snd <= self.snd_bound

    @property
    def wnd_bound_ok(self) -> bool:
        return self.wnd <= self.k

    @property
    def snd_slack(self) -> int:
        return self.snd_bound - self.snd

    @property
    def wnd_slack(self) -> int:
        return self.k - self.wnd

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "r": self.r,
            "snd": self.snd,
            "wnd": self.wnd,
            "snd_bound": self.snd_bound,
            "snd_bound_ok": self.snd_bound_ok,
            "wnd_bound_ok": self.wnd_bound_ok,
            "snd_slack": self.snd_slack,
            "wnd_slack": self.wnd_slack,
        }


def _require_nonzero(f: GridFunction) -> None:
    if f.is_zero():
        raise ZeroFunction("nodal domains are undefined for the zero function")


def strong_domains(f: GridFunction) -> tuple[list[VertexSet], list[VertexSet]]:
    """Components of S+(f) and of S-(f)."""
    _require_nonzero(f)
    return induced_components(f.positive_set()), induced_components(f.negative_set())


def weak_domains(f: GridFunction) -> tuple[list[VertexSet], list[VertexSet]]:
    """Components of {f >= 0} (resp. {f <= 0}) that contain a nonzero vertex."""
    _require_nonzero(f)
    pos, neg = f.positive_set(), f.negative_set()
    positive = [c for c in induced_components(f.nonnegative_set()) if not c.isdisjoint(pos)]
    negative = [c for c in induced_components(f.nonpositive_set()) if not c.isdisjoint(neg)]
    return positive, negative


def nodal_report(f: GridFunction) -> NodalReport:
    ps, ns = strong_domains(f)
    pw, nw = weak_domains(f)
    return NodalReport(ps, ns, pw, nw)


def snd(f: GridFunction) -> int:
    """Number of strong nodal domains."""
    _require_nonzero(f)
    arr = f.to_int64()
    if arr is None:
        pos, neg = strong_domains(f)
        return len(pos) + len(neg)
    npos, nneg = kernels.sign_component_counts(arr, f.params.n, f.params.q)
    return int(npos) + int(nneg)


def wnd(f: GridFunction) -> int:
    """Number of weak nodal domains."""
    pos, neg = weak_domains(f)
    return len(pos) + len(neg)


def check_courant(f: GridFunction, i: int) -> CourantReport:
    """Compare SND and WND of a (q·i)-eigenfunction with k+r-1 and k."""
    if not is_eigenfunction(f, eigenvalue(f.params, i)):
        raise NotAnEigenfunction(f"function is not a {eigenvalue(f.params, i)}-eigenfunction")
    pos = courant_position(f.params, i)
    return CourantReport(pos.k, pos.r, snd(f), wnd(f))
