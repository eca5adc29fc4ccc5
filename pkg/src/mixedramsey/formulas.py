"""Closed-form spectra and minimum color counts for the catalog pairs.

Every lookup returns a :class:`KnownValue` carrying the value, the range
in which it is valid, and whether it is a proved result
(``"paper-theorem"``) or a cited constant (``"literature-cited"``).
Queries outside a guard raise :class:`NotCovered`; no number is ever
extrapolated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .graph import Pattern, parse_pattern

__all__ = [
    "KnownValue",
    "NotCovered",
    "PAPER",
    "LITERATURE",
    "ramsey_matching",
    "lambda_value",
    "f_value",
    "known_min_colors",
    "known_spectrum",
    "literature_values",
    "anti_ramsey",
    "lookup",
]

PAPER = "paper-theorem"
LITERATURE = "literature-cited"

PatternLike = Union[Pattern, str]


class NotCovered(LookupError):
    """The query falls outside every known formula's validity range."""


@dataclass(frozen=True)
class KnownValue:
    value: Union[int, frozenset, str]
    guard: str
    provenance: str

    @property
    def is_set(self) -> bool:
        return isinstance(self.value, frozenset)

    def format_value(self) -> str:
        if not self.is_set:
            return str(self.value)
        if not self.value:
            return "empty"
        return "{" + ",".join(map(str, sorted(self.value))) + "}"

    def __str__(self) -> str:
        return f"value: {self.format_value()}\nguard: {self.guard}\nprovenance: {self.provenance}"


def _pattern(p: PatternLike) -> Pattern:
    return parse_pattern(p) if isinstance(p, str) else p


def _family(p: Pattern) -> tuple[str, int]:
    """("P4", 0), ("C4", 0), ("K3", 0), ("star", l), ("matching", l) or ("custom", 0)."""
    tag = p.tag
    if tag in ("P4", "C4", "K3", "K3+e"):
        return tag, 0
    m = re.fullmatch(r"K1,(\d+)", tag)
    if m:
        return "star", int(m.group(1))
    m = re.fullmatch(r"(\d+)K2", tag)
    if m:
        return "matching", int(m.group(1))
    return "custom", 0


def _catalog(g: PatternLike, h: PatternLike) -> tuple[str, int, str]:
    g, h = _pattern(g), _pattern(h)
    fam, ell = _family(g)
    if h.tag not in ("K3", "K3+e") or fam in ("custom", "K3+e"):
        raise NotCovered(f"pair ({g}, {h}) is not in the catalog")
    return fam, ell, h.tag


def ramsey_matching(k: int, ell: int) -> int:
    """k-color Ramsey number of a matching with ``ell`` edges: ``(k-1)(ell-1) + 2 ell``."""
    if k < 1 or ell < 2:
        raise ValueError("ramsey_matching needs k >= 1 and ell >= 2")
    return (k - 1) * (ell - 1) + 2 * ell


def lambda_value(k: int) -> int:
    if k < 1:
        raise ValueError("lambda_value needs k >= 1")
    if k % 2 == 0:
        return 5 ** (k // 2)
    return 2 * 5 ** ((k - 1) // 2)


def _lambda_inverse(n: int) -> int:
    k = 1
    while lambda_value(k) < n:
        k += 1
    return k


def f_value(k: int, g: PatternLike, h: PatternLike) -> KnownValue:
    """Largest ``n`` admitting a good coloring of ``K_n`` with exactly ``k`` colors."""
    fam, ell, _ = _catalog(g, h)
    if fam == "P4" and k >= 1:
        return KnownValue(k + 2, "k >= 1", LITERATURE)
    if fam == "C4" and k >= 4:
        return KnownValue(k + 3, "k >= 4", LITERATURE)
    if fam == "K3" and k >= 4:
        return KnownValue(lambda_value(k), "k >= 4", LITERATURE)
    if fam == "matching" and k >= 1:
        return KnownValue(ramsey_matching(k, ell) - 1, "k >= 1, l >= 2", PAPER)
    raise NotCovered(f"f({k}; {g}, {h}) not covered")


def _matching_min(n: int, ell: int) -> int:
    # ceil((n - 2l + 1) / (l - 1)) + 1
    return -(-(n - 2 * ell + 1) // (ell - 1)) + 1


def known_min_colors(n: int, g: PatternLike, h: PatternLike) -> KnownValue:
    fam, ell, htag = _catalog(g, h)
    if fam == "P4" and n >= 4:
        return KnownValue(n - 2, "n >= 4", PAPER)
    if fam == "C4":
        if n == 10 and htag == "K3+e":
            return KnownValue(3, "n = 10, H = K3+e", PAPER)
        if n >= 11:
            return KnownValue(n - 3, "n >= r3(C4) = 11", PAPER)
    if fam == "K3" and n >= 17:
        return KnownValue(_lambda_inverse(n), "n >= r3(K3) = 17", PAPER)
    if fam == "matching" and n >= max(4, 2 * ell - 1):
        return KnownValue(_matching_min(n, ell), "n >= max(4, 2l - 1)", PAPER)
    if fam == "star" and n >= 3 * ell + 1:
        return KnownValue(frozenset(), "n >= 3l + 1", PAPER)
    raise NotCovered(f"min S({n}; {g}, {h}) not covered")


def known_spectrum(n: int, g: PatternLike, h: PatternLike) -> KnownValue:
    fam, _, htag = _catalog(g, h)
    if fam == "C4" and n == 10 and htag == "K3+e":
        return KnownValue(frozenset({3, 7, 8, 9}), "n = 10, H = K3+e", PAPER)
    if fam == "C4" and n == 10:
        raise NotCovered(f"S(10; C4, {htag}) not covered")
    low = known_min_colors(n, g, h)
    if low.is_set:
        return low
    return KnownValue(frozenset(range(low.value, n)), low.guard, PAPER)


def anti_ramsey(n: int, h: PatternLike) -> KnownValue:
    """Most colors in a coloring of ``K_n`` with no rainbow ``h`` (``h`` in {K3, K3+e})."""
    tag = _pattern(h).tag
    if tag == "K3" and n >= 2:
        return KnownValue(n - 1, "n >= 2", LITERATURE)
    if tag == "K3+e" and n >= 4:
        return KnownValue(n - 1, "n >= 4", LITERATURE)
    raise NotCovered(f"AR({n}, {h}) not covered")


_RAMSEY = {
    "r2(C4)": KnownValue(6, "exact constant", LITERATURE),
    "r3(C4)": KnownValue(11, "exact constant", LITERATURE),
    "r3(K3)": KnownValue(17, "exact constant", LITERATURE),
}


def literature_values() -> dict[str, KnownValue]:
    """The cited constants, plus the anti-Ramsey formulas keyed by their symbolic form."""
    table = dict(_RAMSEY)
    table["AR(n,K3)"] = KnownValue("n-1", "n >= 2", LITERATURE)
    table["AR(n,K3+e)"] = KnownValue("n-1", "n >= 4", LITERATURE)
    return table


def _split_args(body: str) -> list[str]:
    parts = [p.strip() for p in body.split(",")]
    out: list[str] = []
    i = 0
    while i < len(parts):
        # "K1,3" is one pattern, not two arguments
        if parts[i] == "K1" and i + 1 < len(parts) and parts[i + 1].isdigit():
            out.append(f"K1,{parts[i + 1]}")
            i += 2
        else:
            out.append(parts[i])
            i += 1
    return out


def lookup(query: str) -> KnownValue:
    """Evaluate a textual query.

    Accepted forms: ``r2(C4)``, ``r3(C4)``, ``r3(K3)``, ``r<k>(<l>K2)``,
    ``AR(<n>,<H>)``, ``lambda(<k>)``, ``f(<k>,<G>,<H>)``, ``min(<n>,<G>,<H>)``,
    ``S(<n>,<G>,<H>)``.
    """
    q = query.replace(" ", "")
    if q in _RAMSEY:
        return _RAMSEY[q]
    m = re.fullmatch(r"([A-Za-z]+|r\d+)\((.*)\)", q)
    if not m:
        raise NotCovered(f"unrecognized query {query!r}")
    head, args = m.group(1), _split_args(m.group(2))
    try:
        if re.fullmatch(r"r\d+", head) and len(args) == 1:
            g = parse_pattern(args[0])
            fam, ell = _family(g)
            if fam == "matching":
                return KnownValue(ramsey_matching(int(head[1:]), ell), "k >= 1, l >= 2", LITERATURE)
        elif head == "AR" and len(args) == 2:
            return anti_ramsey(int(args[0]), args[1])
        elif head == "lambda" and len(args) == 1:
            return KnownValue(lambda_value(int(args[0])), "k >= 1", PAPER)
        elif head == "f" and len(args) == 3:
            return f_value(int(args[0]), args[1], args[2])
        elif head == "min" and len(args) == 3:
            return known_min_colors(int(args[0]), args[1], args[2])
        elif head == "S" and len(args) == 3:
            return known_spectrum(int(args[0]), args[1], args[2])
    except ValueError as exc:
        raise NotCovered(str(exc)) from None
    raise NotCovered(f"unrecognized query {query!r}")
