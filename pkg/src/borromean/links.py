"""
Oriented link diagrams from PD codes, and the groups read off them.

PD text is a sequence of records::

    X[a,b,c,d]     crossing; slots counterclockwise starting at the incoming
                   under-edge, so the under-strand runs a -> c
    O[k]           a circle with no crossings, edge label k
    N[e,Name]      name the Wirtinger arc containing edge e (optional; the
                   order of N records is the generator order)

``#`` starts a comment.  Each edge label must occur exactly twice among the
crossing slots.  A crossing is positive (right-handed) when the over-strand
runs from slot d to slot b.

Wirtinger arcs run between consecutive under-crossings: the two over-edges of
a crossing belong to the same arc.  The relation at a crossing with over-arc
g, incoming under-arc x and outgoing under-arc y is ``y = g^-e * x * g^e``
for crossing sign e.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .presentation import Presentation, simplify as simplify_presentation
from .words import IDENTITY, ParseError, Word, is_generator_name

__all__ = [
    "Crossing",
    "LinkDiagram",
    "MeridianMap",
    "BadArcDegree",
    "InconsistentOrientation",
    "MissingLabel",
    "SameComponent",
    "MissingFraming",
    "parse_pd",
    "wirtinger",
    "crossing_relator",
    "linking_number",
    "writhe",
    "zero_framed_longitude",
    "surgery_presentation",
]


class BadArcDegree(ValueError):
    pass


class InconsistentOrientation(ValueError):
    pass


class MissingLabel(KeyError):
    pass


class SameComponent(ValueError):
    pass


class MissingFraming(KeyError):
    pass


@dataclass(frozen=True)
class Crossing:
    slots: tuple
    under_in: int
    under_out: int
    over_in: int
    over_out: int
    sign: int


@dataclass(frozen=True)
class MeridianMap:
    """Edge label -> generator name, and each component's chosen meridian."""

    edges: Mapping[int, str]
    components: tuple

    def __getitem__(self, edge):
        return self.edges[edge]


class LinkDiagram:
    """
    A validated, oriented link diagram.

    ``components`` lists each component's edges in orientation order;
    ``arcs`` lists the Wirtinger arcs the same way, in generator order.
    """

    def __init__(self, crossings: Sequence, loops: Sequence[int] = (), names: Sequence = ()):
        raw = [tuple(int(x) for x in c) for c in crossings]
        loops = [int(k) for k in loops]
        self._check_degrees(raw, loops)
        slot_edge = {(i, s): c[s] for i, c in enumerate(raw) for s in range(4)}
        edge_slots: dict = {}
        for key, e in slot_edge.items():
            edge_slots.setdefault(e, []).append(key)

        # walk each strand cycle, then orient it
        components = []
        head_slot: dict = {}  # edge -> slot where the edge enters a crossing
        seen = set()
        for start in sorted(edge_slots):
            if start in seen:
                continue
            cycle, passes = self._walk(start, edge_slots, slot_edge)
            cycle, passes = self._orient(cycle, passes)
            for e, (enter, leave) in zip(cycle, passes):
                head_slot[e] = enter
            seen.update(cycle)
            components.append(tuple(cycle))
        for k in loops:
            components.append((k,))
        components.sort(key=min)

        crossings_out = []
        for i, c in enumerate(raw):
            over_in_slot = 1 if head_slot[c[1]] == (i, 1) else 3
            over_in = c[over_in_slot]
            over_out = c[4 - over_in_slot]
            sign = 1 if over_in_slot == 3 else -1
            crossings_out.append(Crossing(c, c[0], c[2], over_in, over_out, sign))
        self.crossings = tuple(crossings_out)
        self.loops = tuple(loops)
        self.components = tuple(components)
        self.component_of = {e: k for k, comp in enumerate(components) for e in comp}

        # Wirtinger arcs: split each component after every under-crossing
        under_out_edges = {c.under_out for c in self.crossings}
        arcs = []
        for comp in components:
            starts = [i for i, e in enumerate(comp) if e in under_out_edges]
            if not starts:
                arcs.append(comp)
                continue
            for j, s in enumerate(starts):
                t = starts[(j + 1) % len(starts)]
                arc = comp[s:t] if s < t else comp[s:] + comp[:t]
                arcs.append(arc)
        arc_index = {e: a for a, arc in enumerate(arcs) for e in arc}

        named: dict = {}
        order = []
        for e, name in names:
            if e not in arc_index:
                raise ParseError(f"N[{e},{name}] names an unknown edge")
            if not is_generator_name(name):
                raise ParseError(f"bad generator name {name!r}")
            a = arc_index[e]
            if a in named and named[a] != name:
                raise ParseError(f"arc of edge {e} named both {named[a]} and {name}")
            if a not in named:
                named[a] = name
                order.append(a)
        rest = sorted((a for a in range(len(arcs)) if a not in named), key=lambda a: min(arcs[a]))
        used = set(named.values())
        counter = 1
        for a in rest:
            while f"x{counter}" in used:
                counter += 1
            named[a] = f"x{counter}"
            used.add(named[a])
        if len(used) != len(arcs):
            raise ParseError("two arcs share a generator name")
        order += rest
        self.arcs = tuple(arcs[a] for a in order)
        self.arc_names = tuple(named[a] for a in order)
        self.edge_name = {e: named[arc_index[e]] for e in arc_index}

    @staticmethod
    def _check_degrees(raw, loops):
        counts: dict = {}
        for c in raw:
            if len(c) != 4:
                raise ParseError(f"crossing needs 4 labels: {c}")
            for e in c:
                counts[e] = counts.get(e, 0) + 1
        bad = {e: n for e, n in counts.items() if n != 2}
        if bad:
            raise BadArcDegree(f"edge labels not used exactly twice: {bad}")
        if len(set(loops)) != len(loops) or set(loops) & set(counts):
            raise BadArcDegree("circle labels must be unique and unused by crossings")

    @staticmethod
    def _walk(start, edge_slots, slot_edge):
        cycle, passes = [], []
        e, enter = start, edge_slots[start][0]
        while True:
            leave = (enter[0], (enter[1] + 2) % 4)
            cycle.append(e)
            passes.append((enter, leave))
            nxt = slot_edge[leave]
            a, b = edge_slots[nxt]
            enter = b if a == leave else a
            e = nxt
            if e == start and enter == edge_slots[start][0]:
                return cycle, passes

    @staticmethod
    def _orient(cycle, passes):
        # passes[i] = (slot where cycle[i] ends, slot where cycle[i+1] starts)
        votes = set()
        for enter, leave in passes:
            if enter[1] == 0:
                votes.add(1)
            elif enter[1] == 2:
                votes.add(-1)
        if len(votes) > 1:
            raise InconsistentOrientation(f"under-strands disagree along component {sorted(cycle)}")
        if votes:
            forward = votes.pop() == 1
        else:
            ordered = sorted(cycle)
            succ = {e: ordered[(i + 1) % len(ordered)] for i, e in enumerate(ordered)}
            n = len(cycle)
            up = sum(succ[cycle[i]] == cycle[(i + 1) % n] for i in range(n))
            down = sum(succ[cycle[(i + 1) % n]] == cycle[i] for i in range(n))
            forward = up >= down
        if forward:
            return cycle, passes
        # reversed: edge cycle[i] now enters at passes[i-1].leave
        n = len(cycle)
        rcycle = [cycle[(-i) % n] for i in range(n)]
        rpasses = []
        for i in range(n):
            j = (-i) % n
            enter, leave = passes[(j - 1) % n]
            rpasses.append((leave, enter))
        return rcycle, rpasses

    # -- queries ---------------------------------------------------------------

    @property
    def num_components(self) -> int:
        return len(self.components)

    def meridian(self, component: int) -> str:
        """The first generator (in generator order) lying on ``component``."""
        for arc, name in zip(self.arcs, self.arc_names):
            if self.component_of[arc[0]] == component:
                return name
        raise IndexError(component)

    def meridian_map(self) -> MeridianMap:
        return MeridianMap(dict(self.edge_name), tuple(self.meridian(k) for k in range(self.num_components)))

    def to_pd(self) -> str:
        lines = [f"X[{','.join(map(str, c.slots))}]" for c in self.crossings]
        lines += [f"O[{k}]" for k in self.loops]
        lines += [f"N[{min(arc)},{name}]" for arc, name in zip(self.arcs, self.arc_names)]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return (
            f"LinkDiagram({len(self.crossings)} crossings, {len(self.arcs)} arcs, "
            f"{self.num_components} components)"
        )


_RECORD = re.compile(
    r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]"
    r"|O\[\s*(-?\d+)\s*\]"
    r"|N\[\s*(-?\d+)\s*,\s*([^\]\s]+)\s*\]"
)


def parse_pd(text: str) -> LinkDiagram:
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    crossings, loops, names = [], [], []
    for m in _RECORD.finditer(body):
        if m.group(1) is not None:
            crossings.append(tuple(int(m.group(i)) for i in range(1, 5)))
        elif m.group(5) is not None:
            loops.append(int(m.group(5)))
        else:
            names.append((int(m.group(6)), m.group(7)))
    leftover = _RECORD.sub("", body)
    leftover = re.sub(r"PD\[|\]|,|\s", "", leftover)
    if leftover:
        raise ParseError(f"unrecognised PD text: {leftover[:40]!r}")
    return LinkDiagram(crossings, loops, names)


def _letter(name: str, power: int) -> Word:
    return Word.generator(name, power)


def crossing_relator(c: Crossing, labels: Mapping[int, str]) -> Word:
    """
    ``out^-1 * over_in^-e * in * over_out^e`` for crossing sign e.

    ``labels`` maps edge labels to generator names; the two over-edges may
    carry different names (loops on either side of the over-strand).
    """
    try:
        out, o_in, u_in, o_out = (labels[e] for e in (c.under_out, c.over_in, c.under_in, c.over_out))
    except KeyError as exc:
        raise MissingLabel(exc.args[0]) from None
    return _letter(out, -1) * _letter(o_in, -c.sign) * _letter(u_in, 1) * _letter(o_out, c.sign)


def wirtinger(d: LinkDiagram):
    """One generator per arc, one relator per crossing."""
    relators = [crossing_relator(c, d.edge_name) for c in d.crossings]
    return Presentation(d.arc_names, relators), d.meridian_map()


def linking_number(d: LinkDiagram, c1: int, c2: int) -> int:
    if c1 == c2:
        raise SameComponent(c1)
    total = 0
    for c in d.crossings:
        pair = {d.component_of[c.under_in], d.component_of[c.over_in]}
        if pair == {c1, c2}:
            total += c.sign
    return total // 2


def writhe(d: LinkDiagram, component: int) -> int:
    return sum(
        c.sign
        for c in d.crossings
        if d.component_of[c.under_in] == component == d.component_of[c.over_in]
    )


def zero_framed_longitude(d: LinkDiagram, component: int, substitution: Optional[Mapping] = None) -> Word:
    """
    Longitude of ``component`` with linking number 0 against it.

    Walk the component from the start of its meridian arc; at each
    under-crossing record the over-arc generator to the crossing sign; then
    append ``meridian^-writhe``.  ``substitution`` rewrites eliminated
    generators into surviving ones.
    """
    comp = d.components[component]
    meridian = d.meridian(component)
    arc = d.arcs[d.arc_names.index(meridian)]
    i = comp.index(arc[0])
    walk = comp[i:] + comp[:i]
    by_under_in = {c.under_in: c for c in d.crossings}
    word = IDENTITY
    for e in walk:
        c = by_under_in.get(e)
        if c is not None:
            word = word * _letter(d.edge_name[c.over_in], c.sign)
    word = word * _letter(meridian, -writhe(d, component))
    if substitution:
        word = word.substitute(substitution)
    return word


def surgery_presentation(d: LinkDiagram, framings, simplify: bool = False) -> Presentation:
    """
    Add ``meridian^f * longitude`` for each component with framing f.

    With ``simplify=True`` the Wirtinger presentation is first reduced by
    generator elimination (earlier generators survive) and the surgery
    relators are rewritten in the surviving generators.
    """
    if not isinstance(framings, Mapping):
        framings = dict(enumerate(framings))
    missing = [k for k in range(d.num_components) if k not in framings]
    if missing:
        raise MissingFraming(missing[0])
    P, _ = wirtinger(d)
    subs: dict = {}
    if simplify:
        P, subs = simplify_presentation(P, keep=[d.meridian(k) for k in range(d.num_components)])
    extra = []
    for k in range(d.num_components):
        m = _letter(d.meridian(k), int(framings[k]))
        extra.append((m * zero_framed_longitude(d, k)).substitute(subs))
    return Presentation(P.generators, list(P.relators) + extra)
