"""Finite meet-semilattices with a least element.

Carriers are small ordered tuples of opaque string identifiers.  The
order relation is stored as bitmask rows and the full meet table is
precomputed at construction time, so every downstream algorithm is a
table lookup.  Construction validates everything: reflexive-transitive
closure of the generating pairs, antisymmetry, the designated least
element, and existence of all pairwise greatest lower bounds.

The carrier order (the order elements were listed in) is the tie-break
used by all deterministic algorithms in this package.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    CycleError,
    NoMeetError,
    NotComplemented,
    NoZeroError,
    ParseError,
    SizeLimit,
    UnknownElement,
)

ENUMERATION_CAP = 5


class Semilattice:
    """Immutable finite meet-semilattice with least element.

    Construct from the element names, the designated zero, and any set of
    generating order pairs; the stored relation is the reflexive-transitive
    closure of the pairs.
    """

    __slots__ = ("names", "zero", "_index", "_up", "_down", "_meet")

    def __init__(self, elements: Iterable[str], zero: str, pairs: Iterable[tuple[str, str]] = ()):
        names = tuple(elements)
        if not names:
            raise ParseError("empty carrier")
        if len(set(names)) != len(names):
            raise ParseError("duplicate element names")
        self.names = names
        self._index = {x: i for i, x in enumerate(names)}
        if zero not in self._index:
            raise UnknownElement(zero)
        self.zero = zero
        n = len(names)
        up = [1 << i for i in range(n)]  # up[i] = mask of j with names[i] <= names[j]
        for a, b in pairs:
            up[self.index(a)] |= 1 << self.index(b)
        for k in range(n):  # Warshall closure on bitmask rows
            bit = 1 << k
            for i in range(n):
                if up[i] & bit:
                    up[i] |= up[k]
        for i in range(n):
            for j in range(i + 1, n):
                if up[i] >> j & 1 and up[j] >> i & 1:
                    raise CycleError(f"{names[i]!r} and {names[j]!r} lie on a cycle")
        if up[self._index[zero]] != (1 << n) - 1:
            bad = next(x for x in names if not up[self._index[zero]] >> self._index[x] & 1)
            raise NoZeroError(f"designated zero {zero!r} is not below {bad!r}")
        self._up = tuple(up)
        down = [0] * n
        for i in range(n):
            for j in range(n):
                if up[j] >> i & 1:
                    down[i] |= 1 << j
        self._down = tuple(down)
        self._meet = self._meet_table()

    def _meet_table(self):
        n = len(self.names)
        down = self._down
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                lower = down[i] & down[j]
                m = -1
                rest = lower
                while rest:
                    k = (rest & -rest).bit_length() - 1
                    if lower & ~down[k] == 0:  # k is above every common lower bound
                        m = k
                        break
                    rest &= rest - 1
                if m < 0:
                    raise NoMeetError(self.names[i], self.names[j])
                row.append(m)
            table.append(tuple(row))
        return tuple(table)

    # Basic queries

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __repr__(self):
        return f"Semilattice({list(self.names)!r}, zero={self.zero!r})"

    def __eq__(self, other):
        if not isinstance(other, Semilattice):
            return NotImplemented
        return (self.names, self.zero, self._up) == (other.names, other.zero, other._up)

    def __hash__(self):
        return hash((self.names, self.zero, self._up))

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def leq(self, x: str, y: str) -> bool:
        return bool(self._up[self.index(x)] >> self.index(y) & 1)

    def meet(self, x: str, y: str) -> str:
        return self.names[self._meet[self.index(x)][self.index(y)]]

    def orthogonal(self, x: str, y: str) -> bool:
        return self.meet(x, y) == self.zero

    def nonzero(self) -> tuple[str, ...]:
        return tuple(x for x in self.names if x != self.zero)

    def down_set(self, x: str) -> tuple[str, ...]:
        m = self._down[self.index(x)]
        return tuple(y for i, y in enumerate(self.names) if m >> i & 1)

    def up_set(self, x: str) -> tuple[str, ...]:
        m = self._up[self.index(x)]
        return tuple(y for i, y in enumerate(self.names) if m >> i & 1)

    def atoms(self) -> tuple[str, ...]:
        zi = self._index[self.zero]
        out = []
        for i, x in enumerate(self.names):
            if i != zi and self._down[i] == (1 << i | 1 << zi):
                out.append(x)
        return tuple(out)


class Splitting(NamedTuple):
    """Outcome of the downward-splitting scan."""

    holds: bool
    witnesses: dict  # non-atom nonzero element -> (y0, y1) with meet zero
    violator: Optional[str]


def is_downward_splitting(lat: Semilattice) -> Splitting:
    """Check that below every nonzero non-atom there are two nonzero
    orthogonal elements, returning witnesses or the first violator."""
    atoms = set(lat.atoms())
    witnesses = {}
    for x in lat.names:
        if x == lat.zero or x in atoms:
            continue
        strictly_below = [y for y in lat.down_set(x) if y != lat.zero]
        found = None
        for y0, y1 in itertools.combinations(strictly_below, 2):
            if lat.orthogonal(y0, y1):
                found = (y0, y1)
                break
        if found is None:
            return Splitting(False, {}, x)
        witnesses[x] = found
    return Splitting(True, witnesses, None)


def complementation(lat: Semilattice):
    """Search for an order-reversing complement map.

    For each x the only possible value of ~x is the maximum of the
    orthogonal set {y : y meet x = zero}, so the candidate map is forced;
    it is then verified to be an involution whose down-sets equal the
    orthogonal sets exactly.  Returns (mapping, None) on success or
    (None, first_failing_element).
    """
    n = len(lat.names)
    down = lat._down
    orth_masks = []
    cand = []
    for i in range(n):
        orth = 0
        for j in range(n):
            if lat._meet[i][j] == lat._index[lat.zero]:
                orth |= 1 << j
        orth_masks.append(orth)
        m = -1
        rest = orth
        while rest:
            k = (rest & -rest).bit_length() - 1
            if orth & ~down[k] == 0:
                m = k
                break
            rest &= rest - 1
        if m < 0:
            return None, lat.names[i]
        cand.append(m)
    for i in range(n):
        if cand[cand[i]] != i:  # not an involution
            return None, lat.names[i]
        if orth_masks[i] != down[cand[i]]:  # orthogonality law fails at i
            return None, lat.names[i]
    return {lat.names[i]: lat.names[cand[i]] for i in range(n)}, None


def verify_complementation(lat: Semilattice, mapping: dict) -> Optional[str]:
    """Return the first element violating the complement laws, or None."""
    for x in lat.names:
        if mapping.get(x) not in lat._index:
            return x
    for x in lat.names:
        if mapping[mapping[x]] != x:
            return x
        for y in lat.names:
            if (lat.meet(y, x) == lat.zero) != lat.leq(y, mapping[x]):
                return x
    return None


def reversed_semilattice(lat: Semilattice, mapping: dict) -> Semilattice:
    """The same carrier under the reversed order x <=' y iff ~x <= ~y,
    with least element ~zero.  Verifies that ~ is an isomorphism."""
    bad = verify_complementation(lat, mapping)
    if bad is not None:
        raise NotComplemented(f"complement map fails at {bad!r}")
    pairs = [
        (x, y)
        for x in lat.names
        for y in lat.names
        if lat.leq(mapping[x], mapping[y])
    ]
    rev = Semilattice(lat.names, mapping[lat.zero], pairs)
    for x in lat.names:
        for y in lat.names:
            assert lat.leq(x, y) == rev.leq(mapping[x], mapping[y])
            assert rev.meet(mapping[x], mapping[y]) == mapping[lat.meet(x, y)]
    return rev


# Generators for the test corpus

def chain(n: int) -> Semilattice:
    """The n-element chain c0 < c1 < ... < c{n-1}."""
    if n < 1:
        raise ValueError("chain size must be at least 1")
    names = tuple(f"c{i}" for i in range(n))
    return Semilattice(names, names[0], zip(names, names[1:]))


def _subset_name(mask: int) -> str:
    return "{" + ",".join(str(i) for i in range(mask.bit_length()) if mask >> i & 1) + "}"


def powerset_lattice(n: int) -> Semilattice:
    """All subsets of {0..n-1} under inclusion; zero is the empty set."""
    if n < 1:
        raise ValueError("ground set size must be at least 1")
    masks = range(1 << n)
    names = [_subset_name(m) for m in masks]
    pairs = [
        (names[a], names[b])
        for a in masks
        for b in masks
        if a != b and a & ~b == 0
    ]
    return Semilattice(names, names[0], pairs)


def _set_partitions(n: int):
    """All set partitions of range(n) as block tuples, in restricted-growth
    order (blocks sorted by minimum)."""
    def grow(codes):
        if len(codes) == n:
            blocks = {}
            for i, c in enumerate(codes):
                blocks.setdefault(c, []).append(i)
            yield tuple(tuple(blocks[c]) for c in sorted(blocks))
            return
        top = max(codes) if codes else -1
        for c in range(top + 2):
            yield from grow(codes + [c])

    yield from grow([])


def finite_partition_lattice(n: int) -> Semilattice:
    """Partitions of {0..n-1} under the coarsening order; zero is the
    one-block partition, the top is all singletons."""
    if n < 1:
        raise ValueError("ground set size must be at least 1")
    parts = list(_set_partitions(n))
    names = ["|".join(",".join(map(str, b)) for b in blocks) for blocks in parts]
    block_of = []
    for blocks in parts:
        owner = {}
        for k, b in enumerate(blocks):
            for i in b:
                owner[i] = k
        block_of.append(owner)

    def coarser(a: int, b: int) -> bool:
        # every block of parts[b] sits inside one block of parts[a]
        return all(len({block_of[a][i] for i in blk}) == 1 for blk in parts[b])

    pairs = [
        (names[a], names[b])
        for a in range(len(parts))
        for b in range(len(parts))
        if a != b and coarser(a, b)
    ]
    zero = names[next(i for i, blocks in enumerate(parts) if len(blocks) == 1)]
    return Semilattice(names, zero, pairs)


def all_semilattices(max_size: int):
    """Stream every labeled meet-semilattice with zero on carriers of size
    1..max_size (element names e0, e1, ...).  Capped at 5 elements."""
    if max_size > ENUMERATION_CAP:
        raise SizeLimit(f"exhaustive enumeration capped at {ENUMERATION_CAP} elements")
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    for k in range(1, max_size + 1):
        yield from _semilattices_of_size(k)


def _semilattices_of_size(k: int):
    names = tuple(f"e{i}" for i in range(k))
    full = (1 << k) - 1
    pair_slots = list(itertools.combinations(range(k), 2))
    # each unordered pair is below / above / incomparable
    for states in itertools.product((0, 1, 2), repeat=len(pair_slots)):
        up = [1 << i for i in range(k)]
        for (i, j), s in zip(pair_slots, states):
            if s == 1:
                up[i] |= 1 << j
            elif s == 2:
                up[j] |= 1 << i
        if not _is_transitive(up, k):
            continue
        zero_i = next((i for i in range(k) if up[i] == full), None)
        if zero_i is None:
            continue
        down = [0] * k
        for i in range(k):
            for j in range(k):
                if up[j] >> i & 1:
                    down[i] |= 1 << j
        if not _meets_total(down, k):
            continue
        pairs = [
            (names[i], names[j])
            for i in range(k)
            for j in range(k)
            if i != j and up[i] >> j & 1
        ]
        yield Semilattice(names, names[zero_i], pairs)


def _is_transitive(up, k) -> bool:
    for i in range(k):
        acc = up[i]
        rest = up[i] & ~(1 << i)
        while rest:
            b = rest & -rest
            rest ^= b
            acc |= up[b.bit_length() - 1]
        if acc != up[i]:
            return False
    return True


def _meets_total(down, k) -> bool:
    for i in range(k):
        for j in range(i + 1, k):
            lower = down[i] & down[j]
            rest = lower
            ok = False
            while rest:
                m = (rest & -rest).bit_length() - 1
                if lower & ~down[m] == 0:
                    ok = True
                    break
                rest &= rest - 1
            if not ok:
                return False
    return True


# Line-based file format

def parse_semilattice(text: str) -> Semilattice:
    """Parse the `semilattice v1` file format.

    Lines: header, `elements <id> ...`, `zero <id>`, and zero or more
    `leq <id> <id>` generating pairs; `#` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "semilattice v1":
        raise ParseError("expected 'semilattice v1' header line")
    elements: list[str] = []
    zero = None
    pairs = []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "elements":
            if len(parts) < 2:
                raise ParseError("elements line lists no identifiers")
            elements.extend(parts[1:])
        elif parts[0] == "zero":
            if len(parts) != 2:
                raise ParseError("zero line takes exactly one identifier")
            if zero is not None:
                raise ParseError("duplicate zero line")
            zero = parts[1]
        elif parts[0] == "leq":
            if len(parts) != 3:
                raise ParseError("leq line takes exactly two identifiers")
            pairs.append((parts[1], parts[2]))
        else:
            raise ParseError(f"unknown directive {parts[0]!r}")
    if not elements:
        raise ParseError("missing elements line")
    if zero is None:
        raise ParseError("missing zero line")
    return Semilattice(elements, zero, pairs)
