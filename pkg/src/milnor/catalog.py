"""Bundled PD codes of named links.

Names follow the usual link tables (``5_1^2``, ``6_2^3``, ``9_n25^3``).  A
``_r`` suffix marks a second diagram of the same link obtained by
Reidemeister moves.  Orientations and mirror images are pinned so that the
first non-vanishing invariants carry the signs used throughout the tests.
Set ``MILNOR_CATALOG`` to the path of another JSON file to replace the
bundled one.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .diagram import PDCode, PDError, build, linking_matrix, parse_pd

ENV_VAR = "MILNOR_CATALOG"


class UnknownLink(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown link name {self.name!r}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pd: PDCode
    components: int
    crossings: int
    linking: list[list[int]]


def catalog_path() -> Path | None:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else None


def _read(path: Path | None) -> dict[str, str]:
    if path is None:
        text = resources.files("milnor").joinpath("data/catalog.json").read_text()
    else:
        text = path.read_text()
    data = json.loads(text)
    if not isinstance(data, dict) or not all(isinstance(v, str) for v in data.values()):
        raise PDError("catalog must map link names to PD strings")
    return data


@lru_cache(maxsize=8)
def _load(path: str | None) -> dict[str, PDCode]:
    raw = _read(Path(path) if path else None)
    return {name: parse_pd(text) for name, text in raw.items()}


def load_catalog() -> dict[str, PDCode]:
    p = catalog_path()
    return _load(str(p) if p else None)


def names() -> list[str]:
    return list(load_catalog())


def catalog_lookup(name: str) -> PDCode:
    cat = load_catalog()
    if name not in cat:
        raise UnknownLink(name)
    return cat[name]


def entries(substring: str = "") -> list[CatalogEntry]:
    out = []
    for name, pd in load_catalog().items():
        if substring and substring not in name:
            continue
        d = build(pd)
        lk = linking_matrix(d)
        for i in range(d.q):
            lk[i][i] = 0
        out.append(CatalogEntry(name, pd, d.q, len(pd.crossings), lk))
    return out
