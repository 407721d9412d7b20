"""Hamming graph H(n, q): vertex encoding, vertex sets, exact functions.

Vertex ``(x_1, ..., x_n)`` has index ``x_1 + x_2 q + ... + x_n q^(n-1)``, so
fixing the last coordinates selects a contiguous block of indices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import (
    AlphabetMismatch,
    BadCoordinate,
    CoordOutOfRange,
    LengthMismatch,
    ParamError,
)

MAX_VERTICES = 2**40
_INT64_HEADROOM = 2**62


@dataclass(frozen=True)
class GraphParams:
    n: int
    q: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ParamError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.q, int) or self.q < 2:
            raise ParamError(f"q must be an integer >= 2, got {self.q!r}")
        if self.q**self.n > MAX_VERTICES:
            raise ParamError(f"H({self.n},{self.q}) has more than 2^40 vertices")

    @property
    def size(self) -> int:
        return self.q**self.n

    @property
    def degree(self) -> int:
        return self.n * (self.q - 1)

    @property
    def strides(self) -> list[int]:
        return [self.q**t for t in range(self.n)]


@dataclass(frozen=True)
class Vertex:
    coords: tuple[int, ...]
    index: int


def encode(coords: Sequence[int], params: GraphParams) -> Vertex:
    coords = tuple(int(c) for c in coords)
    if len(coords) != params.n:
        raise LengthMismatch(f"expected {params.n} coordinates, got {len(coords)}")
    index = 0
    for c, stride in zip(coords, params.strides):
        if not 0 <= c < params.q:
            raise CoordOutOfRange(f"coordinate {c} outside Z_{params.q}")
        index += c * stride
    return Vertex(coords, index)


def decode(index: int, params: GraphParams) -> Vertex:
    if not 0 <= index < params.size:
        raise CoordOutOfRange(f"index {index} outside [0, {params.size})")
    coords = []
    rest = index
    for _ in range(params.n):
        rest, c = divmod(rest, params.q)
        coords.append(c)
    return Vertex(tuple(coords), index)


def _as_index(v, params: GraphParams) -> int:
    if isinstance(v, Vertex):
        return v.index
    if isinstance(v, (tuple, list)):
        return encode(v, params).index
    return int(v)


def neighbor_indices(index: int, params: GraphParams) -> list[int]:
    """Neighbours by coordinate ascending, then replacement value ascending."""
    out = []
    q = params.q
    for stride in params.strides:
        d = (index // stride) % q
        base = index - d * stride
        out.extend(base + a * stride for a in range(q) if a != d)
    return out


def neighbors(v, params: GraphParams) -> list[Vertex]:
    return [decode(w, params) for w in neighbor_indices(_as_index(v, params), params)]


def _check_coordinate(t: int, params: GraphParams) -> None:
    if not isinstance(t, int) or not 1 <= t <= params.n:
        raise BadCoordinate(f"coordinate {t!r} outside [1, {params.n}]")


def _shift_permutation(params: GraphParams, t: int) -> np.ndarray:
    """perm[x] = index of x + e_t."""
    idx = np.arange(params.size, dtype=np.int64)
    stride = params.q ** (t - 1)
    digit = (idx // stride) % params.q
    return idx + np.where(digit == params.q - 1, -(params.q - 1) * stride, stride)


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices stored as a Python-int bit mask (bit ``i`` = index ``i``)."""

    params: GraphParams
    mask: int = 0

    @classmethod
    def from_indices(cls, params: GraphParams, indices: Iterable[int]) -> "VertexSet":
        mask = 0
        for i in indices:
            i = int(i)
            if not 0 <= i < params.size:
                raise CoordOutOfRange(f"index {i} outside [0, {params.size})")
            mask |= 1 << i
        return cls(params, mask)

    @classmethod
    def from_coords(cls, params: GraphParams, coords: Iterable[Sequence[int]]) -> "VertexSet":
        return cls.from_indices(params, (encode(c, params).index for c in coords))

    @classmethod
    def from_bool(cls, params: GraphParams, flags) -> "VertexSet":
        flags = np.asarray(flags, dtype=bool)
        if flags.shape != (params.size,):
            raise LengthMismatch(f"expected {params.size} flags, got {flags.shape}")
        packed = np.packbits(flags, bitorder="little")
        return cls(params, int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def full(cls, params: GraphParams) -> "VertexSet":
        return cls(params, (1 << params.size) - 1)

    def to_bool(self) -> np.ndarray:
        size = self.params.size
        raw = self.mask.to_bytes((size + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return np.ascontiguousarray(bits[:size])

    def indices(self) -> list[int]:
        return np.flatnonzero(self.to_bool()).tolist()

    def coords(self) -> list[tuple[int, ...]]:
        return [decode(i, self.params).coords for i in self.indices()]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, v) -> bool:
        i = _as_index(v, self.params)
        return 0 <= i < self.params.size and bool((self.mask >> i) & 1)

    def _same(self, other: "VertexSet") -> None:
        if other.params != self.params:
            raise ValueError("vertex sets live on different graphs")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.params, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.params, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._same(other)
        return VertexSet(self.params, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.params, ((1 << self.params.size) - 1) & ~self.mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: "VertexSet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "VertexSet") -> bool:
        return self.issubset(other) and self.mask != other.mask

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._same(other)
        return self.mask & other.mask == 0

    def __repr__(self) -> str:
        return f"VertexSet(H({self.params.n},{self.params.q}), size={len(self)})"


def translate_set(s: VertexSet, t: int) -> VertexSet:
    """``{x + e_t : x in s}`` with addition modulo q in coordinate ``t`` (1-based)."""
    _check_coordinate(t, s.params)
    flags = s.to_bool()
    out = np.zeros_like(flags)
    out[_shift_permutation(s.params, t)] = flags
    return VertexSet.from_bool(s.params, out)


def induced_components(s: VertexSet) -> list[VertexSet]:
    """Connected components of the subgraph induced by ``s``, ordered by smallest index."""
    if not s:
        return []
    params = s.params
    labels, count = kernels.label_components(s.to_bool(), params.n, params.q)
    labels = np.asarray(labels)
    return [VertexSet.from_bool(params, labels == c) for c in range(count)]


def _normalize(v):
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        v = Fraction(v)
    elif isinstance(v, Rational):
        v = Fraction(v)
    elif isinstance(v, np.integer):
        return int(v)
    else:
        raise TypeError(f"exact rational value required, got {type(v).__name__}")
    return v.numerator if v.denominator == 1 else v


@dataclass(frozen=True)
class GridFunction:
    """An exact rational function on the vertices of H(n, q).

    Integer values are stored as ``int`` and everything else as ``Fraction``.
    """

    params: GraphParams
    values: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.values) != self.params.size:
            raise LengthMismatch(
                f"H({self.params.n},{self.params.q}) needs {self.params.size} values, "
                f"got {len(self.values)}"
            )

    @classmethod
    def from_values(cls, params: GraphParams, values: Iterable) -> "GridFunction":
        return cls(params, tuple(_normalize(v) for v in values))

    @classmethod
    def constant(cls, params: GraphParams, c=1) -> "GridFunction":
        return cls(params, (_normalize(c),) * params.size)

    @classmethod
    def from_mapping(cls, params: GraphParams, mapping: dict, default=0) -> "GridFunction":
        values = [default] * params.size
        for coords, v in mapping.items():
            values[encode(coords, params).index] = v
        return cls.from_values(params, values)

    def __getitem__(self, v):
        return self.values[_as_index(v, self.params)]

    def __len__(self) -> int:
        return len(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self.values)

    def to_int64(self) -> np.ndarray | None:
        """Values as an int64 array, or None if they are not integers that fit."""
        if not self.is_integral():
            return None
        if max((abs(v) for v in self.values), default=0) >= _INT64_HEADROOM:
            return None
        return np.fromiter(self.values, dtype=np.int64, count=len(self.values))

    def _check(self, other: "GridFunction") -> None:
        if other.params != self.params:
            raise AlphabetMismatch("functions live on different graphs")

    def __add__(self, other: "GridFunction") -> "GridFunction":
        self._check(other)
        return GridFunction.from_values(self.params, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self._check(other)
        return GridFunction.from_values(self.params, (a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "GridFunction":
        return GridFunction(self.params, tuple(-a for a in self.values))

    def scale(self, c) -> "GridFunction":
        c = _normalize(c)
        return GridFunction.from_values(self.params, (c * a for a in self.values))

    def __mul__(self, c) -> "GridFunction":
        return self.scale(c)

    __rmul__ = __mul__

    def positive_set(self) -> VertexSet:
        return VertexSet.from_bool(self.params, [v > 0 for v in self.values])

    def negative_set(self) -> VertexSet:
        return VertexSet.from_bool(self.params, [v < 0 for v in self.values])

    def nonnegative_set(self) -> VertexSet:
        return VertexSet.from_bool(self.params, [v >= 0 for v in self.values])

    def nonpositive_set(self) -> VertexSet:
        return VertexSet.from_bool(self.params, [v <= 0 for v in self.values])

    def to_json(self) -> dict:
        return {"n": self.params.n, "q": self.params.q, "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, doc: dict) -> "GridFunction":
        try:
            params = GraphParams(int(doc["n"]), int(doc["q"]))
            values = doc["values"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed GridFunction document: {exc}") from None
        return cls.from_values(params, (Fraction(str(v)) for v in values))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self) -> str:
        return f"GridFunction(H({self.params.n},{self.params.q}))"


def load_function(path) -> GridFunction:
    with open(path) as fh:
        return GridFunction.from_json(json.load(fh))


def save_function(f: GridFunction, path) -> None:
    with open(path, "w") as fh:
        json.dump(f.to_json(), fh, sort_keys=True)
        fh.write("\n")


def translate_function(f: GridFunction, t: int) -> GridFunction:
    """g(x) = f(x + e_t)."""
    _check_coordinate(t, f.params)
    perm = _shift_permutation(f.params, t)
    return GridFunction(f.params, tuple(f.values[j] for j in perm.tolist()))


def laplacian_apply(f: GridFunction) -> GridFunction:
    """(L f)(x) = sum_{y ~ x} (f(x) - f(y)), exactly."""
    params = f.params
    arr = f.to_int64()
    if arr is not None and (not arr.size or int(np.abs(arr).max()) * 2 * params.degree < _INT64_HEADROOM):
        out = kernels.laplacian(arr, params.n, params.q)
        return GridFunction(params, tuple(int(v) for v in out))
    # Arbitrary-precision path: per-axis sums over an object array.
    cube = np.array(f.values, dtype=object).reshape((params.q,) * params.n, order="F")
    acc = cube * (params.n * params.q)
    for axis in range(params.n):
        acc = acc - cube.sum(axis=axis, keepdims=True)
    return GridFunction.from_values(params, acc.reshape(-1, order="F").tolist())


def fiber_offset(params: GraphParams, fixed: Sequence[int]) -> int:
    """Start index of the block where the last ``len(fixed)`` coordinates equal ``fixed``."""
    k = len(fixed)
    if k > params.n:
        raise LengthMismatch(f"cannot fix {k} of {params.n} coordinates")
    offset = 0
    for j, a in enumerate(fixed):
        if not 0 <= a < params.q:
            raise CoordOutOfRange(f"coordinate {a} outside Z_{params.q}")
        offset += a * params.q ** (params.n - k + j)
    return offset


def restrict(f: GridFunction, fixed: Sequence[int]) -> GridFunction:
    """f_{a_1..a_k}: restriction to x_{n-k+1} = a_1, ..., x_n = a_k, as a function on H(n-k, q)."""
    params = f.params
    k = len(fixed)
    if k >= params.n:
        raise LengthMismatch("restriction must leave at least one free coordinate")
    block = params.q ** (params.n - k)
    start = fiber_offset(params, fixed)
    return GridFunction(GraphParams(params.n - k, params.q), f.values[start:start + block])


def fiber_set(params: GraphParams, fixed: Sequence[int]) -> VertexSet:
    """All vertices whose last coordinates equal ``fixed``."""
    block = params.q ** (params.n - len(fixed))
    start = fiber_offset(params, fixed)
    return VertexSet(params, ((1 << block) - 1) << start)


def has_edge_between(a: VertexSet, b: VertexSet) -> bool:
    """True if some vertex of ``a`` is adjacent to some vertex of ``b``."""
    return any(w in b for v in a for w in neighbor_indices(v, a.params))
