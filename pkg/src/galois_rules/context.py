"""Binary context (individuals × properties) and its derivation operators.

The context is the ground truth everything else is computed from: images of
property sets, intents of individual sets, closures and exact rational
supports.  Incidence is stored twice, as per-individual and per-property
bitmasks, because image/closure dominate the runtime of lattice construction
and rule extraction.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "FormalContext",
    "Thresholds",
    "ContextParseError",
    "UnknownPropertyError",
    "UnknownIndividualError",
    "parse_context",
    "serialize_context",
    "parse_fraction",
]


class ContextParseError(ValueError):
    """Malformed context document; carries the offending line/column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class UnknownPropertyError(LookupError):
    def __init__(self, name: str):
        super().__init__(f"unknown property: {name!r}")
        self.name = name


class UnknownIndividualError(LookupError):
    def __init__(self, name: str):
        super().__init__(f"unknown individual: {name!r}")
        self.name = name


def parse_fraction(text: str | float | Fraction) -> Fraction:
    """Parse a threshold given as '1/2', '0.5' or a number into an exact rational."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        return Fraction(str(text))
    return Fraction(str(text).strip())


@dataclass(frozen=True)
class Thresholds:
    """Validity thresholds: minimum support and minimum confidence, both in [0, 1]."""

    minsupp: Fraction
    minconf: Fraction

    def __post_init__(self):
        object.__setattr__(self, "minsupp", parse_fraction(self.minsupp))
        object.__setattr__(self, "minconf", parse_fraction(self.minconf))
        for name in ("minsupp", "minconf"):
            value = getattr(self, name)
            if not 0 <= value <= 1:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")


class FormalContext:
    """An immutable binary relation between named individuals and properties.

    Rows and columns keep their document order.  All query methods accept
    property/individual *names*; bitmask-level accessors are exposed for the
    lattice and rule modules, which do tight loops over masks.
    """

    def __init__(
        self,
        individuals: Sequence[str],
        properties: Sequence[str],
        incidence: Sequence[Sequence[int | bool]],
    ):
        individuals = tuple(individuals)
        properties = tuple(properties)
        if not individuals:
            raise ValueError("context needs at least one individual")
        if not properties:
            raise ValueError("context needs at least one property")
        if len(set(individuals)) != len(individuals):
            raise ValueError("duplicate individual identifiers")
        if len(set(properties)) != len(properties):
            raise ValueError("duplicate property identifiers")
        if len(incidence) != len(individuals):
            raise ValueError("incidence row count does not match individuals")

        row_masks = []
        for i, row in enumerate(incidence):
            if len(row) != len(properties):
                raise ValueError(f"incidence row {i} has {len(row)} cells, expected {len(properties)}")
            mask = 0
            for j, cell in enumerate(row):
                if cell not in (0, 1, False, True):
                    raise ValueError(f"non-binary incidence cell at ({i}, {j}): {cell!r}")
                if cell:
                    mask |= 1 << j
            row_masks.append(mask)

        self.individuals = individuals
        self.properties = properties
        self._ind_index = {name: i for i, name in enumerate(individuals)}
        self._prop_index = {name: j for j, name in enumerate(properties)}
        self._row_masks = tuple(row_masks)
        col_masks = []
        for j in range(len(properties)):
            mask = 0
            for i, row_mask in enumerate(row_masks):
                if row_mask >> j & 1:
                    mask |= 1 << i
            col_masks.append(mask)
        self._col_masks = tuple(col_masks)
        self.all_individuals_mask = (1 << len(individuals)) - 1
        self.all_properties_mask = (1 << len(properties)) - 1

    # -- raw incidence ----------------------------------------------------

    @property
    def n_individuals(self) -> int:
        return len(self.individuals)

    @property
    def n_properties(self) -> int:
        return len(self.properties)

    def is_property(self, name: str) -> bool:
        return name in self._prop_index

    def incidence(self, individual: str, prop: str) -> bool:
        """True iff the individual holds the property."""
        i = self._ind_index.get(individual)
        if i is None:
            raise UnknownIndividualError(individual)
        j = self._prop_index.get(prop)
        if j is None:
            raise UnknownPropertyError(prop)
        return bool(self._row_masks[i] >> j & 1)

    def incidence_matrix(self) -> list[list[int]]:
        return [[self._row_masks[i] >> j & 1 for j in range(self.n_properties)]
                for i in range(self.n_individuals)]

    # -- mask helpers ------------------------------------------------------

    def property_mask(self, props: Iterable[str]) -> int:
        mask = 0
        for name in props:
            j = self._prop_index.get(name)
            if j is None:
                raise UnknownPropertyError(name)
            mask |= 1 << j
        return mask

    def individual_mask(self, inds: Iterable[str]) -> int:
        mask = 0
        for name in inds:
            i = self._ind_index.get(name)
            if i is None:
                raise UnknownIndividualError(name)
            mask |= 1 << i
        return mask

    def property_names(self, mask: int) -> frozenset[str]:
        return frozenset(self.properties[j] for j in _bits(mask))

    def individual_names(self, mask: int) -> frozenset[str]:
        return frozenset(self.individuals[i] for i in _bits(mask))

    def extent_mask(self, prop_mask: int) -> int:
        """Individuals holding every property of the mask (all of them for the empty mask)."""
        out = self.all_individuals_mask
        for j in _bits(prop_mask):
            out &= self._col_masks[j]
            if not out:
                break
        return out

    def intent_mask(self, ind_mask: int) -> int:
        """Properties shared by every individual of the mask (all of them for the empty mask)."""
        out = self.all_properties_mask
        for i in _bits(ind_mask):
            out &= self._row_masks[i]
            if not out:
                break
        return out

    def closure_mask(self, prop_mask: int) -> int:
        return self.intent_mask(self.extent_mask(prop_mask))

    def row_mask(self, i: int) -> int:
        return self._row_masks[i]

    # -- named derivation operators ---------------------------------------

    def image(self, motif: Iterable[str]) -> frozenset[str]:
        """Individuals containing every property of the motif; image(∅) is everyone."""
        return self.individual_names(self.extent_mask(self.property_mask(motif)))

    def intent_of(self, inds: Iterable[str]) -> frozenset[str]:
        """Properties shared by all given individuals; intent_of(∅) is every property."""
        return self.property_names(self.intent_mask(self.individual_mask(inds)))

    def closure(self, motif: Iterable[str]) -> frozenset[str]:
        """Smallest closed motif containing the given one: intent_of(image(motif))."""
        return self.property_names(self.closure_mask(self.property_mask(motif)))

    def motif_support(self, motif: Iterable[str]) -> Fraction:
        """|image(motif)| / |I| as an exact rational."""
        count = _popcount(self.extent_mask(self.property_mask(motif)))
        return Fraction(count, self.n_individuals)

    def support_of_mask(self, prop_mask: int) -> Fraction:
        return Fraction(_popcount(self.extent_mask(prop_mask)), self.n_individuals)

    def __repr__(self):
        return f"FormalContext({self.n_individuals} individuals × {self.n_properties} properties)"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


# -- parsing / serialization ----------------------------------------------


def parse_context(doc: str, format: str = "csv") -> FormalContext:
    """Parse a context document.

    ``csv``: header row of property names whose first cell is blank or "R",
    then one row per individual with 0/1 cells.  ``cxt``: Burmeister format
    ("B" header, two dimension lines, names, then 'X'/'.' rows).
    """
    if format == "csv":
        return _parse_csv(doc)
    if format == "cxt":
        return _parse_cxt(doc)
    raise ValueError(f"unknown context format: {format!r}")


def serialize_context(ctx: FormalContext, format: str = "csv") -> str:
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["R", *ctx.properties])
        for i, name in enumerate(ctx.individuals):
            writer.writerow([name] + [ctx.row_mask(i) >> j & 1 for j in range(ctx.n_properties)])
        return buf.getvalue()
    if format == "cxt":
        lines = ["B", "", str(ctx.n_individuals), str(ctx.n_properties), ""]
        lines.extend(ctx.individuals)
        lines.extend(ctx.properties)
        for i in range(ctx.n_individuals):
            lines.append("".join("X" if ctx.row_mask(i) >> j & 1 else "."
                                 for j in range(ctx.n_properties)))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown context format: {format!r}")


def _parse_csv(doc: str) -> FormalContext:
    rows = list(csv.reader(io.StringIO(doc)))
    rows = [row for row in rows if row and any(cell.strip() for cell in row)]
    if not rows:
        raise ContextParseError("empty context document", line=1)
    header = [cell.strip() for cell in rows[0]]
    if header[0] not in ("", "R"):
        raise ContextParseError(f"first header cell must be blank or 'R', got {header[0]!r}",
                                line=1, column=1)
    properties = header[1:]
    if not properties:
        raise ContextParseError("header declares no properties", line=1)
    _check_unique(properties, "property", line=1)

    individuals = []
    incidence = []
    for lineno, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row]
        if len(cells) != len(properties) + 1:
            raise ContextParseError(
                f"row has {len(cells) - 1} cells, expected {len(properties)}", line=lineno)
        name = cells[0]
        if not name:
            raise ContextParseError("missing individual identifier", line=lineno, column=1)
        individuals.append(name)
        bits = []
        for col, cell in enumerate(cells[1:], start=2):
            if cell not in ("0", "1"):
                raise ContextParseError(f"non-binary cell {cell!r}", line=lineno, column=col)
            bits.append(int(cell))
        incidence.append(bits)
    if not individuals:
        raise ContextParseError("document has no individual rows", line=2)
    _check_unique(individuals, "individual", line=2)
    return FormalContext(individuals, properties, incidence)


def _parse_cxt(doc: str) -> FormalContext:
    lines = doc.splitlines()
    pos = 0

    def next_line(expect: str, skip_blank: bool = True) -> tuple[str, int]:
        nonlocal pos
        while pos < len(lines):
            line = lines[pos]
            pos += 1
            if skip_blank and not line.strip():
                continue
            return line, pos
        raise ContextParseError(f"unexpected end of document, expected {expect}", line=len(lines))

    head, lineno = next_line("'B' header")
    if head.strip() != "B":
        raise ContextParseError(f"bad header {head.strip()!r}, expected 'B'", line=lineno)
    counts = []
    for what in ("individual count", "property count"):
        raw, lineno = next_line(what)
        try:
            counts.append(int(raw.strip()))
        except ValueError:
            raise ContextParseError(f"bad {what}: {raw.strip()!r}", line=lineno) from None
    n_ind, n_prop = counts
    if n_ind < 1 or n_prop < 1:
        raise ContextParseError("dimensions must be positive", line=lineno)

    individuals = []
    for k in range(n_ind):
        raw, lineno = next_line(f"individual name {k + 1}")
        individuals.append(raw.strip())
    properties = []
    for k in range(n_prop):
        raw, lineno = next_line(f"property name {k + 1}")
        properties.append(raw.strip())
    _check_unique(individuals, "individual", line=lineno)
    _check_unique(properties, "property", line=lineno)

    incidence = []
    for k in range(n_ind):
        raw, lineno = next_line(f"incidence row {k + 1}")
        row = raw.strip()
        if len(row) != n_prop:
            raise ContextParseError(
                f"incidence row has {len(row)} cells, expected {n_prop}", line=lineno)
        bits = []
        for col, ch in enumerate(row, start=1):
            if ch not in "X.":
                raise ContextParseError(f"bad incidence mark {ch!r}", line=lineno, column=col)
            bits.append(1 if ch == "X" else 0)
        incidence.append(bits)
    return FormalContext(individuals, properties, incidence)


def _check_unique(names: Sequence[str], kind: str, line: int):
    seen = set()
    for name in names:
        if name in seen:
            raise ContextParseError(f"duplicate {kind} identifier {name!r}", line=line)
        seen.add(name)
