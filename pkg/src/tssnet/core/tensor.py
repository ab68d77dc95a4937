"""
Tensor operaties waar alle andere modules op bouwen.

Een Tensor is hier een NumPy array met dtype float64 in row-major (C)
layout. De functies valideren vormen en geven altijd een nieuwe array
terug; inputs worden nooit gemuteerd.
"""

from typing import Literal, Sequence

import numpy as np
from numpy.typing import NDArray

from ..utils.errors import InvalidConfigError, InvalidShapeError, OutOfBoundsError, ShapeMismatchError

Tensor = NDArray[np.float64]

# Per as een half-open bereik (start, stop); None betekent de hele tensor
Region = Sequence[tuple[int, int]] | None

ElementwiseOp = Literal["add", "sub", "mul", "scale"]
ReduceOp = Literal["sum", "max", "argmax"]


def _check_shape(shape: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in shape)
    if not dims or any(d < 1 for d in dims):
        raise InvalidShapeError(dims)
    return dims


def tensor_new(shape: Sequence[int], values) -> Tensor:
    """
    Maak een tensor met een kopie van de waarden in row-major volgorde.

    Args:
        shape: Dimensies, allemaal >= 1
        values: Platte reeks van getallen, lengte = product(shape)

    Returns:
        Nieuwe float64 tensor

    Raises:
        InvalidShapeError: Bij een dimensie < 1
        ShapeMismatchError: Als het aantal waarden niet klopt
    """
    dims = _check_shape(shape)
    flat = np.array(values, dtype=np.float64).ravel()
    expected = int(np.prod(dims))
    if flat.size != expected:
        raise ShapeMismatchError("Aantal waarden past niet bij de vorm", expected, flat.size)
    return flat.reshape(dims).copy(order="C")


def reshape(t: Tensor, new_shape: Sequence[int]) -> Tensor:
    """Geef dezelfde datareeks terug in een nieuwe vorm."""
    dims = _check_shape(new_shape)
    if int(np.prod(dims)) != t.size:
        raise ShapeMismatchError("Reshape verandert het aantal elementen", t.size, int(np.prod(dims)))
    return np.ascontiguousarray(t).reshape(dims).copy()


def matmul(a: Tensor, b: Tensor) -> Tensor:
    """Standaard matrixproduct van twee 2D tensors."""
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeMismatchError("matmul verwacht 2D tensors", 2, (a.ndim, b.ndim))
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatchError("Binnenste dimensies van matmul", a.shape[1], b.shape[0])
    return np.matmul(a, b)


def elementwise(op: ElementwiseOp, a: Tensor, b) -> Tensor:
    """
    Puntsgewijze operatie zonder broadcasting.

    Args:
        op: "add", "sub", "mul" of "scale" (b is dan een scalar)
        a: Eerste tensor
        b: Tweede tensor met dezelfde vorm, of scalar bij "scale"

    Returns:
        Nieuwe tensor met de vorm van a
    """
    if op == "scale":
        return np.multiply(a, float(b))
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"Vormen voor '{op}' verschillen", a.shape, b.shape)
    if op == "add":
        return np.add(a, b)
    if op == "sub":
        return np.subtract(a, b)
    if op == "mul":
        return np.multiply(a, b)
    raise InvalidConfigError(f"Onbekende elementwise operatie: {op}")


def _region_slices(t: Tensor, region: Region) -> tuple[slice, ...]:
    if region is None:
        return tuple(slice(0, d) for d in t.shape)
    if len(region) != t.ndim:
        raise OutOfBoundsError(f"Regio heeft {len(region)} assen, tensor heeft er {t.ndim}.")
    slices = []
    for axis, (start, stop) in enumerate(region):
        if start < 0 or stop > t.shape[axis] or start >= stop:
            raise OutOfBoundsError(
                f"Regio ({start}, {stop}) valt buiten as {axis} met lengte {t.shape[axis]} of is leeg."
            )
        slices.append(slice(start, stop))
    return tuple(slices)


def reduce(op: ReduceOp, t: Tensor, region: Region = None):
    """
    Reductie over een regio van de tensor.

    argmax geeft de platte row-major index in de volledige tensor terug;
    bij gelijke maxima wint de laagste index.

    Raises:
        OutOfBoundsError: Bij een lege regio of een regio buiten de tensor
    """
    if t.size == 0:
        raise OutOfBoundsError("Reductie over een lege tensor.")
    slices = _region_slices(t, region)
    block = t[slices]
    if op == "sum":
        return float(block.sum())
    if op == "max":
        return float(block.max())
    if op == "argmax":
        local = np.unravel_index(int(np.argmax(block)), block.shape)
        absolute = tuple(int(i) + s.start for i, s in zip(local, slices))
        return int(np.ravel_multi_index(absolute, t.shape))
    raise InvalidConfigError(f"Onbekende reductie: {op}")
