from typing import List


def mean(values: List[float]) -> float:
    total = 0.0
    for value in values:
        total += value
    return total / len(values)


def placeholder() -> None:
    ...


def product(matrix, other):
    return matrix @ other


def update(matrix, other):
    matrix @= other
    return matrix
