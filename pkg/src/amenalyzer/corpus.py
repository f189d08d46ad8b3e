"""Built-in corpus of small algebras exercised by the cross-check suite."""

from __future__ import annotations

from .algebra import (
    FiniteAlgebra,
    matrix_algebra,
    pointwise_algebra,
    semigroup_algebra,
    tensor_product,
    truncated_polynomial,
    unitize,
    upper_triangular,
    zero_algebra,
)
from .scalars import ONE, ZERO, qq

HALF = qq("1/2")


def _ef_algebra() -> FiniteAlgebra:
    # span{e, f} with e*e = e and every other basis product zero
    c = [[[ZERO, ZERO], [ZERO, ZERO]], [[ZERO, ZERO], [ZERO, ZERO]]]
    c[0][0] = [ONE, ZERO]
    return FiniteAlgebra(
        name="EF",
        dim=2,
        sc=tuple(tuple(tuple(row) for row in plane) for plane in c),
        labels=("e", "f"),
    )


def _z2_table():
    return [[0, 1], [1, 0]]


def _z3_table():
    return [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def _s3_table():
    from itertools import permutations

    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(p[q[x]] for x in range(3))
            row.append(index[comp])
        table.append(row)
    return table


def _with_idempotent_span(a: FiniteAlgebra, vectors) -> FiniteAlgebra:
    from dataclasses import replace

    return replace(a, idempotent_span=tuple(tuple(v) for v in vectors))


def _build_corpus():
    entries = []

    entries.append(truncated_polynomial(1, name="C1"))
    entries.append(zero_algebra(1, name="Czero1"))
    entries.append(zero_algebra(2, name="Czero2"))
    entries.append(truncated_polynomial(2))
    entries.append(truncated_polynomial(3))
    entries.append(truncated_polynomial(4))
    entries.append(pointwise_algebra(2))
    entries.append(pointwise_algebra(3))
    entries.append(pointwise_algebra(4))

    m2 = matrix_algebra(2)
    m2 = _with_idempotent_span(
        m2,
        [
            (ONE, ZERO, ZERO, ZERO),
            (ZERO, ZERO, ZERO, ONE),
            (ONE, ONE, ZERO, ZERO),
            (ZERO, ZERO, ONE, ONE),
        ],
    )
    entries.append(m2)

    entries.append(upper_triangular(2))
    entries.append(_ef_algebra())

    z2 = semigroup_algebra(_z2_table(), name="Z2")
    z2 = _with_idempotent_span(z2, [(HALF, HALF), (HALF, -HALF)])
    entries.append(z2)

    entries.append(semigroup_algebra(_z3_table(), name="Z3"))
    entries.append(semigroup_algebra(_s3_table(), name="S3"))
    entries.append(
        semigroup_algebra(_z2_table(), weight=[1, 2], name="Z2w")
    )

    tp2 = truncated_polynomial(2)
    entries.append(tensor_product(tp2, tp2, name="TensorTP2TP2"))

    # unitizations of the non-unital members
    entries.append(unitize(zero_algebra(1, name="Czero1")))
    entries.append(unitize(zero_algebra(2, name="Czero2")))
    entries.append(unitize(_ef_algebra()))

    return {a.name: a for a in entries}


_CORPUS = None


def corpus() -> dict:
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = _build_corpus()
    return _CORPUS


def corpus_names():
    return sorted(corpus().keys())


def get(name: str) -> FiniteAlgebra:
    try:
        return corpus()[name]
    except KeyError:
        raise KeyError(f"unknown builtin algebra {name!r}; see `corpus list`") from None
