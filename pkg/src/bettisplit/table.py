"""Sparse graded Betti tables at ideal level.

Entries map ``(i, j)`` to a positive multiplicity.  The zero ideal is the
table ``{(-1, 0): 1}``; nonzero ideals never store the ``(-1, 0)`` entry but
:meth:`BettiTable.beta` still answers 1 there, which is the convention the
recursion formulas are written against.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from typing import Iterable

ZERO_KEY = (-1, 0)


class BettiTable(Mapping):
    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping | Iterable = ()):
        data: dict[tuple[int, int], int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (i, j), v in items:
            if v < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if v:
                data[(int(i), int(j))] = data.get((int(i), int(j)), 0) + int(v)
        if ZERO_KEY in data and len(data) > 1:
            del data[ZERO_KEY]
        if not data:
            data = {ZERO_KEY: 1}
        self._entries = dict(sorted(data.items()))
        self._hash = None

    @classmethod
    def zero(cls) -> "BettiTable":
        return cls({ZERO_KEY: 1})

    # Mapping protocol
    def __getitem__(self, key):
        return self._entries[key]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == BettiTable(other)._entries
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __repr__(self):
        return f"BettiTable({self._entries})"

    @property
    def is_zero_ideal(self) -> bool:
        return ZERO_KEY in self._entries

    def beta(self, i: int, j: int) -> int:
        if (i, j) == ZERO_KEY:
            return 1
        return self._entries.get((i, j), 0)

    def nonzero(self):
        """Entries with i >= 0."""
        return {k: v for k, v in self._entries.items() if k[0] >= 0}

    @property
    def reg(self) -> int | None:
        """max(j - i); None for the zero ideal."""
        nz = self.nonzero()
        return max(j - i for i, j in nz) if nz else None

    @property
    def pd(self) -> int | None:
        nz = self.nonzero()
        return max(i for i, _ in nz) if nz else None

    @property
    def max_degree(self) -> int:
        return max(j for _, j in self._entries)

    def shift(self, di: int, dj: int) -> "BettiTable":
        """Shift all nonzero-ideal entries; (i, j) -> (i + di, j + dj)."""
        return BettiTable({(i + di, j + dj): v for (i, j), v in self.nonzero().items()})

    def __add__(self, other: "BettiTable") -> "BettiTable":
        merged = dict(self.nonzero())
        for k, v in other.nonzero().items():
            merged[k] = merged.get(k, 0) + v
        return BettiTable(merged)

    def quotient(self) -> dict[tuple[int, int], int]:
        """Betti numbers of R/I: beta_{i,j}(R/I) = beta_{i-1,j}(I), beta_{0,0} = 1."""
        out = {(0, 0): 1}
        for (i, j), v in self.nonzero().items():
            out[(i + 1, j)] = v
        return out

    @classmethod
    def from_quotient(cls, q: Mapping) -> "BettiTable":
        if q.get((0, 0)) != 1 or any(i == 0 and j != 0 for i, j in q if q[(i, j)]):
            raise ValueError("not the table of a cyclic quotient R/I")
        return cls({(i - 1, j): v for (i, j), v in q.items() if i >= 1})

    def linear_strand(self, d: int, i_max: int | None = None) -> list[int]:
        top = self.pd if i_max is None else i_max
        if top is None:
            return []
        return [self.beta(i, i + d) for i in range(top + 1)]

    def has_linear_resolution(self, d: int) -> bool:
        return all(j == i + d for i, j in self.nonzero())

    # rendering

    def render(self) -> str:
        """Macaulay2-style diagram: columns are i, rows are j - i."""
        nz = self.nonzero()
        if not nz:
            return "zero ideal"
        cols = range(0, self.pd + 1)
        rows = range(min(j - i for i, j in nz), self.reg + 1)
        cells = [[str(nz[(i, i + r)]) if (i, i + r) in nz else "." for i in cols] for r in rows]
        totals = [str(sum(v for (i, _), v in nz.items() if i == c)) for c in cols]
        width = max(len(c) for row in cells + [totals, [str(c) for c in cols]] for c in row)
        label_w = max(len("total:"), max(len(f"{r}:") for r in rows))

        def line(label, items):
            return label.rjust(label_w) + " " + " ".join(x.rjust(width) for x in items)

        out = [line("", [str(c) for c in cols]), line("total:", totals)]
        out += [line(f"{r}:", row) for r, row in zip(rows, cells)]
        return "\n".join(s.rstrip() for s in out)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "betti": [{"i": i, "j": j, "value": v} for (i, j), v in self._entries.items()],
            "reg": self.reg,
            "pd": self.pd,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        return cls({(e["i"], e["j"]): e["value"] for e in data["betti"]})
