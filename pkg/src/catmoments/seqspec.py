"""Finite descriptions of infinite weight sequences, plus the catalog of
classical sequence families.

A recursive matrix is driven by two weight sequences: diagonal weights
(s_k) indexed from 0 and subdiagonal weights (t_k) indexed from 1.  A
SequenceSpec describes such a sequence by an explicit finite prefix followed
by a tail rule, either a constant or a polynomial in the index k (degree at
most 4; the catalog needs at most k**2).  Specs serialize to JSON with
rationals as "p/q" strings.

The catalog maps the eight classical names (catalan, central_binomial,
delannoy, schroder_large, schroder_little, hexagonal, bell, factorial) to
their weight pairs, frozen reference terms, and, for the five families with
a classical closed form, a generating function spec.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import as_rat, format_rat
from .series import NamedGF

MAX_TAIL_DEGREE = 4


@dataclass(frozen=True)
class ConstantTail:
    """Tail rule: every index past the prefix gets the same value."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_rat(self.value))

    def eval(self, k: int) -> Fraction:
        return self.value

    def to_json(self) -> dict:
        return {"kind": "constant", "value": format_rat(self.value)}


@dataclass(frozen=True)
class PolynomialTail:
    """Tail rule: value at index k is the polynomial evaluated at k.

    coeffs[i] is the coefficient of k**i; degree is capped at 4.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_rat(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("polynomial tail needs at least one coefficient")
        if len(coeffs) > MAX_TAIL_DEGREE + 1:
            raise ValueError(f"polynomial tail degree is capped at {MAX_TAIL_DEGREE}")
        object.__setattr__(self, "coeffs", coeffs)

    def eval(self, k: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def to_json(self) -> dict:
        return {"kind": "polynomial", "coeffs": [format_rat(c) for c in self.coeffs]}


def tail_from_json(data: dict):
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("tail JSON needs a 'kind' field")
    kind = data["kind"]
    if kind == "constant":
        if "value" not in data:
            raise ValueError("constant tail JSON needs a 'value' field")
        return ConstantTail(as_rat(data["value"]))
    if kind == "polynomial":
        if "coeffs" not in data or not isinstance(data["coeffs"], list):
            raise ValueError("polynomial tail JSON needs a 'coeffs' list")
        return PolynomialTail(tuple(as_rat(c) for c in data["coeffs"]))
    raise ValueError(f"unknown tail kind {kind!r}")


@dataclass(frozen=True)
class SequenceSpec:
    """Prefix-plus-tail description of an infinite sequence u_k, k >= start.

    start is 0 for diagonal weight sequences and 1 for subdiagonal ones; the
    prefix covers indices start, start+1, ... in order.  With the
    nonnegative flag set, evaluation raises on any negative value.
    """

    prefix: tuple[Fraction, ...]
    tail: object
    start: int = 0
    nonnegative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(as_rat(c) for c in self.prefix))
        if not isinstance(self.tail, (ConstantTail, PolynomialTail)):
            raise ValueError("tail must be a ConstantTail or PolynomialTail")
        if self.start not in (0, 1):
            raise ValueError(f"start must be 0 or 1, got {self.start}")

    @classmethod
    def constant(cls, value, start: int = 0, nonnegative: bool = False) -> "SequenceSpec":
        return cls((), ConstantTail(as_rat(value)), start, nonnegative)

    @classmethod
    def first_then_constant(
        cls, first, rest, start: int = 0, nonnegative: bool = False
    ) -> "SequenceSpec":
        return cls((as_rat(first),), ConstantTail(as_rat(rest)), start, nonnegative)

    @classmethod
    def polynomial(cls, coeffs, start: int = 0, nonnegative: bool = False) -> "SequenceSpec":
        return cls((), PolynomialTail(tuple(as_rat(c) for c in coeffs)), start, nonnegative)

    def eval(self, k: int) -> Fraction:
        """Value at index k; k must be >= start."""
        if k < self.start:
            raise ValueError(f"index {k} below start index {self.start}")
        offset = k - self.start
        if offset < len(self.prefix):
            value = self.prefix[offset]
        else:
            value = self.tail.eval(k)
        if self.nonnegative and value < 0:
            raise ValueError(f"negative value {format_rat(value)} at index {k}")
        return value

    def values(self, count: int) -> list[Fraction]:
        """The first `count` values, starting at the start index."""
        return [self.eval(self.start + i) for i in range(count)]

    def tail_start(self) -> int:
        """First index governed by the tail rule."""
        return self.start + len(self.prefix)

    def as_first_plus_constant(self) -> Optional[tuple[Fraction, Fraction]]:
        """Collapse to (first value, constant rest) if the spec has that shape.

        Returns None when the tail is a nonconstant polynomial or the prefix
        holds more than one distinct value beyond the first.
        """
        if isinstance(self.tail, ConstantTail):
            rest = self.tail.value
        elif len(self.tail.coeffs) == 1:
            rest = self.tail.coeffs[0]
        else:
            return None
        if any(v != rest for v in self.prefix[1:]):
            return None
        first = self.prefix[0] if self.prefix else rest
        return (first, rest)

    def to_json(self) -> dict:
        return {
            "prefix": [format_rat(c) for c in self.prefix],
            "tail": self.tail.to_json(),
            "start": self.start,
        }

    @classmethod
    def from_json(cls, data: dict, nonnegative: bool = False) -> "SequenceSpec":
        if not isinstance(data, dict):
            raise ValueError("sequence spec JSON must be an object")
        missing = [key for key in ("prefix", "tail", "start") if key not in data]
        if missing:
            raise ValueError(f"sequence spec JSON lacks fields: {', '.join(missing)}")
        if not isinstance(data["prefix"], list):
            raise ValueError("sequence spec 'prefix' must be a list")
        prefix = tuple(as_rat(c) for c in data["prefix"])
        tail = tail_from_json(data["tail"])
        start = data["start"]
        if start not in (0, 1):
            raise ValueError(f"sequence spec 'start' must be 0 or 1, got {start!r}")
        return cls(prefix, tail, start, nonnegative)


def pqst_of(sigma: SequenceSpec, tau: SequenceSpec) -> Optional[tuple]:
    """Extract (p, q, s, t) when the weights are constant after their first
    entries: sigma = (p, s, s, ...), tau = (q, t, t, ...)."""
    sig = sigma.as_first_plus_constant()
    tav = tau.as_first_plus_constant()
    if sig is None or tav is None:
        return None
    p, s = sig
    q, t = tav
    return (p, q, s, t)


@dataclass(frozen=True)
class CatalogEntry:
    """A named classical sequence: its weight pair, frozen reference terms,
    and (when one exists in closed form) its generating function."""

    name: str
    description: str
    sigma: SequenceSpec
    tau: SequenceSpec
    reference_terms: tuple[Fraction, ...]
    gf: Optional[NamedGF] = None
    aliases: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        data = {
            "name": self.name,
            "description": self.description,
            "sigma": self.sigma.to_json(),
            "tau": self.tau.to_json(),
            "reference_terms": [format_rat(v) for v in self.reference_terms],
            "gf": None if self.gf is None else {"kind": "named", "name": self.gf.name},
        }
        if self.aliases:
            data["aliases"] = list(self.aliases)
        return data


def _entry(name, description, sigma, tau, terms, gf=None, aliases=()):
    return CatalogEntry(
        name=name,
        description=description,
        sigma=sigma,
        tau=tau,
        reference_terms=tuple(Fraction(v) for v in terms),
        gf=gf,
        aliases=tuple(aliases),
    )


# reference_terms were computed by the weighted-path oracle (explicit
# enumeration, independent of the recurrence) and frozen here; the test
# suite re-derives them from both routes.
CATALOG: dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        _entry(
            "catalan",
            "Catalan numbers",
            SequenceSpec.first_then_constant(1, 2, start=0),
            SequenceSpec.constant(1, start=1),
            (1, 1, 2, 5, 14, 42, 132, 429),
            gf=NamedGF("catalan"),
        ),
        _entry(
            "central_binomial",
            "central binomial coefficients",
            SequenceSpec.constant(2, start=0),
            SequenceSpec.first_then_constant(2, 1, start=1),
            (1, 2, 6, 20, 70, 252, 924, 3432),
            gf=NamedGF("central_binomial"),
        ),
        _entry(
            "delannoy",
            "central Delannoy numbers",
            SequenceSpec.constant(3, start=0),
            SequenceSpec.first_then_constant(4, 2, start=1),
            (1, 3, 13, 63, 321, 1683, 8989, 48639),
            gf=NamedGF("delannoy"),
        ),
        _entry(
            "schroder_large",
            "large Schroeder numbers",
            SequenceSpec.first_then_constant(2, 3, start=0),
            SequenceSpec.constant(2, start=1),
            (1, 2, 6, 22, 90, 394, 1806, 8558),
            gf=NamedGF("schroder_large"),
        ),
        _entry(
            "schroder_little",
            "little Schroeder numbers",
            SequenceSpec.first_then_constant(1, 3, start=0),
            SequenceSpec.constant(2, start=1),
            (1, 1, 3, 11, 45, 197, 903, 4279),
            gf=NamedGF("schroder_little"),
        ),
        _entry(
            "hexagonal",
            "restricted hexagonal numbers",
            SequenceSpec.constant(3, start=0),
            SequenceSpec.constant(1, start=1),
            (1, 3, 10, 36, 137, 543, 2219, 9285),
            aliases=("restricted_hexagonal",),
        ),
        _entry(
            "bell",
            "Bell numbers",
            SequenceSpec.polynomial([1, 1], start=0),
            SequenceSpec.polynomial([0, 1], start=1),
            (1, 1, 2, 5, 15, 52, 203, 877),
        ),
        _entry(
            "factorial",
            "factorial numbers",
            SequenceSpec.polynomial([1, 2], start=0),
            SequenceSpec.polynomial([0, 0, 1], start=1),
            (1, 1, 2, 6, 24, 120, 720, 5040),
        ),
    )
}

CATALOG_NAMES = tuple(CATALOG)

_ALIASES = {
    alias: entry.name for entry in CATALOG.values() for alias in entry.aliases
}


def catalog_lookup(name: str) -> CatalogEntry:
    """Fetch a catalog entry by canonical name or recorded alias."""
    key = name if name in CATALOG else _ALIASES.get(name)
    if key is None:
        raise KeyError(
            f"unknown catalog name {name!r}; choose from {', '.join(CATALOG_NAMES)}"
        )
    return CATALOG[key]
