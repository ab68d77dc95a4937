"""Tensor basisoperaties (float64, row-major)."""

from .tensor import Region, Tensor, elementwise, matmul, reduce, reshape, tensor_new

__all__ = [
    "Tensor",
    "Region",
    "tensor_new",
    "reshape",
    "matmul",
    "elementwise",
    "reduce",
]
