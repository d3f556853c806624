"""Exact rational linear algebra on top of sympy's DomainMatrix over QQ."""
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..exceptions import InvalidInputError

Number = Union[int, Fraction]


def to_domain_matrix(rows: Sequence[Sequence[Number]], width: int = None) -> DomainMatrix:
    rows = [list(row) for row in rows]
    width = len(rows[0]) if rows else (width or 0)
    if any(len(row) != width for row in rows):
        raise InvalidInputError("Matrix rows must all have the same length.")
    elements = [[QQ(Fraction(value).numerator, Fraction(value).denominator) for value in row] for row in rows]
    return DomainMatrix(elements, (len(rows), width), QQ)


def to_fraction(element) -> Fraction:
    return Fraction(int(QQ.numer(element)), int(QQ.denom(element)))


def rational_rank(rows: Sequence[Sequence[Number]]) -> int:
    rows = list(rows)
    if not rows or not len(rows[0]):
        return 0
    return to_domain_matrix(rows).rank()


def independent_rows(rows: Sequence[Sequence[Number]]) -> List[int]:
    """Indices of the greedy (first-come) maximal linearly independent subset of ``rows``."""
    rows = list(rows)
    if not rows:
        return []
    _, pivots = to_domain_matrix(rows).transpose().rref()
    return list(pivots)


def rational_inverse(rows: Sequence[Sequence[Number]]) -> List[List[Fraction]]:
    matrix = to_domain_matrix(rows)
    if matrix.shape[0] != matrix.shape[1]:
        raise InvalidInputError(f"Only square matrices have inverses, got shape {matrix.shape}.")
    if matrix.rank() < matrix.shape[0]:
        raise InvalidInputError("Matrix is singular.")
    inverse = matrix.inv()
    return [[to_fraction(element) for element in row] for row in inverse.to_list()]


def primitive_integer_vector(values: Sequence[Number]) -> Tuple[int, ...]:
    """The positive multiple of ``values`` with coprime integer entries (zero stays zero)."""
    fractions = [Fraction(value) for value in values]
    scale = 1
    for value in fractions:
        scale = scale * value.denominator // gcd(scale, value.denominator)
    integers = [int(value * scale) for value in fractions]
    divisor = 0
    for value in integers:
        divisor = gcd(divisor, value)
    if divisor == 0:
        return tuple(integers)
    return tuple(value // divisor for value in integers)
