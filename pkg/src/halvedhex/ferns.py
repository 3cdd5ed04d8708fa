"""Fern side-length sequences.

Indices are 1-based in the math and 0-based in Python; ``entry(k)`` bridges the two
and returns 0 past the end.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class FernSums(NamedTuple):
    total: int
    even_sum: int
    odd_sum: int
    positive_count: int


@dataclass(frozen=True)
class Fern:
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        ents = tuple(int(e) for e in self.entries)
        if any(e < 0 for e in ents):
            raise ValueError(f"fern entries must be nonnegative: {ents}")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def of(cls, *entries: int) -> "Fern":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "Fern":
        """Parse ``"2,3,1"``; empty text or ``"()"`` is the empty fern."""
        text = text.strip().strip("()").strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok) for tok in text.split(",") if tok.strip()))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def entry(self, k: int) -> int:
        """k-th term, 1-based; zero outside 1..len."""
        return self.entries[k - 1] if 1 <= k <= len(self.entries) else 0

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def even(self) -> int:
        return sum(self.entries[1::2])

    @property
    def odd(self) -> int:
        return sum(self.entries[0::2])


def as_fern(f) -> Fern:
    if isinstance(f, Fern):
        return f
    if isinstance(f, str):
        return Fern.parse(f)
    return Fern(tuple(f))


def fern_sums(f) -> FernSums:
    f = as_fern(f)
    return FernSums(f.total, f.even, f.odd, sum(1 for e in f if e > 0))


def partial_sum(f, k: int) -> int:
    """s_k = t_1 + ... + t_k, with terms past the end read as 0."""
    if k < 0:
        raise ValueError(f"partial_sum needs k >= 0, got {k}")
    return sum(as_fern(f).entries[:k])


def plus_one(f) -> Fern:
    """Bump the last term when the length is even, else append a 1.

    The empty fern counts as even length but has no last term; it maps to (1).
    """
    ents = list(as_fern(f).entries)
    if ents and len(ents) % 2 == 0:
        ents[-1] += 1
    else:
        ents.append(1)
    return Fern(tuple(ents))


def concat(*parts: Iterable[int]) -> Fern:
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return Fern(tuple(out))
