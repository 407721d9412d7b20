"""Concrete eigenfunctions with two strong nodal domains.

Building blocks live on H(2, 2) and H(3, 3); the family builders combine
associated functions of equitable partitions (low coordinates) with those
blocks (high coordinates) through tensor products.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import GraphParams, GridFunction, translate_function
from .equitable import (
    associated_function,
    level_band_partition,
    translate_partition,
    type_a_partition,
    type_b_partition,
)
from .errors import AlphabetTooSmall, IndexOutOfRange, ParamError, Unsupported
from .nodal import snd, wnd
from .spectra import eigenvalue, extend_by_constant, is_eigenfunction, tensor_product

H22 = GraphParams(2, 2)
H33 = GraphParams(3, 3)

# Canonical translation coordinate for the theorem builders.
CANONICAL_T = 1

_PHI = {
    1: ({(0, 0)}, {(1, 1)}),
    2: ({(0, 1)}, {(1, 0)}),
}

_PSI = {
    1: ({(0, 0, 0), (1, 1, 1), (2, 2, 2)}, {(1, 2, 0), (2, 0, 1), (0, 1, 2)}),
    2: ({(1, 0, 0), (2, 1, 1), (0, 2, 2)}, {(2, 2, 0), (0, 0, 1), (1, 1, 2)}),
    3: ({(1, 1, 0), (2, 2, 1), (0, 0, 2)}, {(2, 0, 0), (0, 1, 1), (1, 2, 2)}),
}


def _signed(params, plus, minus) -> GridFunction:
    mapping = {x: 1 for x in plus}
    mapping.update({x: -1 for x in minus})
    return GridFunction.from_mapping(params, mapping)


def phi(j: int) -> GridFunction:
    """φ_1 (+1 at 00, -1 at 11) or φ_2 (+1 at 01, -1 at 10) on H(2, 2)."""
    if j not in _PHI:
        raise ValueError(f"phi index must be 1 or 2, got {j!r}")
    return _signed(H22, *_PHI[j])


def psi(j: int) -> GridFunction:
    """ψ_1, ψ_2, ψ_3: the ±1/0 functions on H(3, 3) with eigenvalue 6."""
    if j not in _PSI:
        raise ValueError(f"psi index must be 1, 2 or 3, got {j!r}")
    return _signed(H33, *_PSI[j])


def lambda1_snd2(params: GraphParams) -> GridFunction:
    """[x_1 = 0] - [x_1 = 1]: a q-eigenfunction with two strong nodal domains."""
    line = GridFunction.from_values(
        GraphParams(1, params.q), [1, -1] + [0] * (params.q - 2)
    )
    return extend_by_constant(line, params.n - 1)


def u2_33() -> GridFunction:
    """ψ_1 + ψ_2 + ψ_3, a 6-eigenfunction of H(3, 3) with SND = 2."""
    return psi(1) + psi(2) + psi(3)


def _check_k(k: int, what: str) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParamError(f"{what} must be a positive integer, got {k!r}")


def construct_q2_odd(k: int, t: int = CANONICAL_T) -> GridFunction:
    """g ⊗ φ_1 + h ⊗ φ_2 on H(3k+2, 2), eigenvalue 2(2k+1).

    g and h are the associated functions of the type-A partition of H(3k, 2)
    and of its translate by e_t.
    """
    _check_k(k, "k")
    GraphParams(3 * k + 2, 2)  # desk-scale guard
    part = type_a_partition(k)
    g = associated_function(part)
    h = associated_function(translate_partition(part, t))
    return tensor_product(g, phi(1)) + tensor_product(h, phi(2))


def construct_q2_even(k: int, t: int = CANONICAL_T) -> GridFunction:
    """f ⊗ φ_1 + f' ⊗ φ_2 on H(3k+4, 2), eigenvalue 2(2k+2), with f'(x) = f(x + e_{3k+2})."""
    _check_k(k, "k")
    GraphParams(3 * k + 4, 2)  # desk-scale guard
    f = construct_q2_odd(k, t)
    f_shift = translate_function(f, 3 * k + 2)
    return tensor_product(f, phi(1)) + tensor_product(f_shift, phi(2))


def construct_q3(m: int, t: int = CANONICAL_T) -> GridFunction:
    """g ⊗ ψ_1 + h ⊗ ψ_2 + h ⊗ ψ_3 on H(m+3, 3), eigenvalue 3(m+2).

    g and h come from the type-B partition of H(m, 3) and its translate by e_t.
    """
    _check_k(m, "m")
    GraphParams(m + 3, 3)  # desk-scale guard
    part = type_b_partition(GraphParams(m, 3))
    g = associated_function(part)
    h = associated_function(translate_partition(part, t))
    return tensor_product(g, psi(1)) + tensor_product(h, psi(2)) + tensor_product(h, psi(3))


def construct_q_ge4(params: GraphParams) -> GridFunction:
    """Associated function of (Γ_0 ∪ Γ_1, rest); eigenvalue q·n, positive on Γ_0 ∪ Γ_1."""
    if params.q < 4:
        raise AlphabetTooSmall(f"needs q >= 4, got q={params.q}")
    return associated_function(level_band_partition(params))


_FIG5_H23 = {
    (0, 0): 4, (1, 0): -3, (0, 1): -3, (1, 1): 1, (2, 0): -1,
    (2, 1): 2, (0, 2): -1, (1, 2): 2, (2, 2): -1,
}

# Vertex labels x1x2x3 as drawn.
_FIG5_H33 = (
    "000:-1 100:-1 010:-1 110:4 001:-1 101:4 011:4 111:4 "
    "200:2 210:-3 201:-3 211:-8 020:2 120:-3 021:-3 121:-8 002:2 102:-3 012:-3 112:-8 "
    "220:1 221:11 202:1 212:11 022:1 122:11 222:-12"
)


def figure5_functions() -> tuple[GridFunction, GridFunction]:
    """The 3n-eigenfunctions with 3 and 4 strong nodal domains on H(2,3) and H(3,3)."""
    small = GridFunction.from_mapping(GraphParams(2, 3), _FIG5_H23)
    big = {}
    for item in _FIG5_H33.split():
        label, value = item.split(":")
        big[tuple(int(c) for c in label)] = int(value)
    return small, GridFunction.from_mapping(H33, big)


@dataclass(frozen=True)
class ConstructionRecipe:
    target: tuple[int, int, int]
    route: tuple[str, ...]

    def __str__(self) -> str:
        return " > ".join(self.route)

    def to_json(self) -> dict:
        n, q, i = self.target
        return {"target": {"n": n, "q": q, "i": i}, "route": list(self.route)}


@dataclass(frozen=True)
class CertifiedFunction:
    f: GridFunction
    eigen_index: int
    snd: int
    wnd: int
    recipe: ConstructionRecipe

    @property
    def eigenvalue(self) -> int:
        return self.f.params.q * self.eigen_index


_STEP = re.compile(r"^(Lambda1|U233|Q2Odd|Q2Even|Q3|QGe4|ExtendBy)(?:\((\d+)\))?$")


def build_route(route, q: int) -> GridFunction:
    """Replay a recipe route such as ``("Q2Odd(1)", "ExtendBy(2)")``."""
    f = None
    for step in route:
        match = _STEP.match(step)
        if match is None:
            raise ValueError(f"unknown route step {step!r}")
        name, arg = match.group(1), match.group(2)
        arg = int(arg) if arg is not None else None
        if name == "ExtendBy":
            if f is None:
                raise ValueError("ExtendBy needs a preceding construction")
            f = extend_by_constant(f, arg)
            continue
        if f is not None:
            raise ValueError(f"route has two base constructions: {route!r}")
        if name == "Lambda1":
            f = lambda1_snd2(GraphParams(1, q))
        elif name == "U233":
            f = u2_33()
        elif name == "Q2Odd":
            f = construct_q2_odd(arg)
        elif name == "Q2Even":
            f = construct_q2_even(arg)
        elif name == "Q3":
            f = construct_q3(arg)
        else:
            f = construct_q_ge4(GraphParams(arg, q))
    if f is None:
        raise ValueError("empty route")
    return f


def plan_route(n: int, q: int, i: int) -> tuple[str, ...]:
    """Choose the proven construction for (n, q, i) or raise Unsupported."""
    GraphParams(n, q)
    if not isinstance(i, int) or not 1 <= i <= n:
        raise IndexOutOfRange(f"eigenvalue index {i!r} outside [1, {n}]")

    def extended(base, base_n):
        return (base,) if n == base_n else (base, f"ExtendBy({n - base_n})")

    if i == 1:
        return extended("Lambda1", 1)
    if q == 2:
        if i % 2 == 1:
            k = (i - 1) // 2
            if n >= 3 * k + 2:
                return extended(f"Q2Odd({k})", 3 * k + 2)
            raise Unsupported(f"out of proven range: q=2, odd i={i} needs n >= {3 * k + 2}")
        k = (i - 2) // 2
        if k >= 1 and n >= 3 * k + 4:
            return extended(f"Q2Even({k})", 3 * k + 4)
        need = "no construction for i=2" if k == 0 else f"needs n >= {3 * k + 4}"
        raise Unsupported(f"out of proven range: q=2, even i={i} {need}")
    if q == 3:
        if i == n:
            raise Unsupported("open case q=3, i=n")
        if i == 2:
            return extended("U233", 3)
        return extended(f"Q3({i - 2})", i + 1)
    return extended(f"QGe4({i})", i)


def construct_snd2(n: int, q: int, i: int) -> CertifiedFunction:
    """A (q·i)-eigenfunction of H(n, q) with SND = 2, re-verified from scratch."""
    route = plan_route(n, q, i)
    f = build_route(route, q)
    lam = eigenvalue(f.params, i)
    if not is_eigenfunction(f, lam):
        raise RuntimeError(f"route {route} did not produce a {lam}-eigenfunction")
    count = snd(f)
    if count != 2:
        raise RuntimeError(f"route {route} produced SND={count}")
    return CertifiedFunction(f, i, count, wnd(f), ConstructionRecipe((n, q, i), route))
