"""Eigenfunctions of Hamming graphs H(n, q) with few strong nodal domains."""
from .core import (
    GraphParams,
    GridFunction,
    Vertex,
    VertexSet,
    decode,
    encode,
    induced_components,
    laplacian_apply,
    neighbors,
    translate_function,
    translate_set,
)
from .kernels import BACKEND
from .nodal import check_courant, nodal_report, snd, wnd
from .spectra import (
    courant_position,
    eigenspace_basis,
    eigenvalue,
    extend_by_constant,
    is_eigenfunction,
    multiplicity,
    tensor_product,
)

__version__ = "0.1.0"
