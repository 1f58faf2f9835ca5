"""Sparse multilinear elements.

A vector is a dict ``{index: coeff}``; an element of a tensor product is a
dict keyed by index tuples, one entry per tensor leg.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .linalg import TensorIndex


def add_into(acc: dict, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def combine(terms: Iterable[tuple[object, object]]) -> dict:
    acc: dict = {}
    for k, c in terms:
        if c:
            add_into(acc, k, c)
    return acc


def scale(x: Mapping, c) -> dict:
    return {k: v * c for k, v in x.items() if v * c}


def add(*xs: Mapping) -> dict:
    acc: dict = {}
    for x in xs:
        for k, v in x.items():
            add_into(acc, k, v)
    return acc


def sub(x: Mapping, y: Mapping) -> dict:
    acc = dict(x)
    for k, v in y.items():
        add_into(acc, k, -v)
    return acc


def as_legs(key) -> tuple:
    return key if isinstance(key, tuple) else (key,)


def tensor(*xs: Mapping) -> dict:
    """Tensor product of sparse elements; keys concatenate into tuples."""
    out: dict = {(): 1}
    for x in xs:
        nxt: dict = {}
        for k1, c1 in out.items():
            for k2, c2 in x.items():
                add_into(nxt, k1 + as_legs(k2), c1 * c2)
        out = nxt
    return out


def flatten(x: Mapping, dims: Sequence[int]) -> dict[int, object]:
    ti = TensorIndex(dims)
    acc: dict[int, object] = {}
    for k, c in x.items():
        add_into(acc, ti.flat(*as_legs(k)), c)
    return acc


def unflatten(x: Mapping[int, object], dims: Sequence[int]) -> dict:
    ti = TensorIndex(dims)
    return {ti.split(k): c for k, c in x.items()}


def apply_leg(x: Mapping, leg: int, f) -> dict:
    """Apply a linear map ``f: index -> sparse vector`` to one leg."""
    acc: dict = {}
    for k, c in x.items():
        for i, d in f(k[leg]).items():
            add_into(acc, k[:leg] + (i,) + k[leg + 1:], c * d)
    return acc


def permute(x: Mapping, order: Sequence[int]) -> dict:
    """Reorder legs: output leg ``n`` is input leg ``order[n]``."""
    return {tuple(k[o] for o in order): c for k, c in x.items()}
