"""Braid words, sliced (Morse) diagrams and link bookkeeping.

A strand at a level is a (color, up) pair.  Its *module color*, the color of
the module it carries when read upward, is ``color`` for an upward strand and
``-1 - color`` for a downward one.  Slices are read bottom to top.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from sl21inv.ring import ColorForm

__all__ = [
    "BadComponent", "BraidWord", "Strand", "Cross", "Cup", "Cap", "Split",
    "Merge", "MorseWord", "LinkMeta", "Report", "braid_to_morse",
    "linking_data", "validate", "generic_colors", "Fixture", "FixtureError",
    "load_fixture", "bundled_fixtures",
]


class BadComponent(ValueError):
    """Requested component index does not exist."""


@dataclass(frozen=True)
class Strand:
    color: ColorForm
    up: bool = True

    def __post_init__(self):
        object.__setattr__(self, "color", ColorForm.lift(self.color))

    @property
    def module(self):
        return self.color if self.up else self.color.dual()

    def turned(self):
        """The same edge continued through a cup or cap (direction flips)."""
        return Strand(self.color, not self.up)

    def to_json_obj(self):
        return {"color": str(self.color), "up": self.up}


@dataclass(frozen=True)
class Cross:
    """Crossing of positions pos, pos+1: kind +1 is the braiding, -1 its inverse."""
    pos: int
    kind: int


@dataclass(frozen=True)
class Cup:
    """New strands at pos, pos+1; ``left`` is the left leg, the right leg is ``left.turned()``."""
    pos: int
    left: Strand


@dataclass(frozen=True)
class Cap:
    pos: int


@dataclass(frozen=True)
class Split:
    """Trivalent vertex: the strand at pos becomes (left, right)."""
    pos: int
    sign: int
    left: Strand
    right: Strand


@dataclass(frozen=True)
class Merge:
    """Trivalent vertex: the strands at pos, pos+1 become ``out``."""
    pos: int
    sign: int
    out: Strand


_SLICES = {"cross": Cross, "cup": Cup, "cap": Cap, "split": Split, "merge": Merge}


@dataclass(frozen=True)
class Report:
    ok: bool
    kind: str = "OK"
    message: str = ""
    slice_index: int = -1

    def __bool__(self):
        return self.ok


class MorseWord:
    """A sliced diagram: bottom strands plus a sequence of slice events."""

    def __init__(self, bottom, slices=()):
        self.bottom = tuple(bottom)
        self.slices = tuple(slices)

    def then(self, *slices):
        return MorseWord(self.bottom, self.slices + tuple(slices))

    def levels(self):
        """Strand lists between slices (len(slices) + 1 levels); no validation."""
        cur = list(self.bottom)
        out = [tuple(cur)]
        for s in self.slices:
            cur = _step(cur, s)
            out.append(tuple(cur))
        return out

    @property
    def top(self):
        return self.levels()[-1]

    @property
    def max_width(self):
        return max(len(lv) for lv in self.levels())

    def crossing_signs(self):
        """Topological sign of each crossing (None for non-crossing slices)."""
        out = []
        cur = list(self.bottom)
        for s in self.slices:
            if isinstance(s, Cross):
                l, r = cur[s.pos], cur[s.pos + 1]
                out.append(s.kind if l.up == r.up else -s.kind)
            else:
                out.append(None)
            cur = _step(cur, s)
        return out

    def to_json_obj(self):
        sl = []
        for s in self.slices:
            name = type(s).__name__.lower()
            d = {"type": name, "pos": s.pos}
            if isinstance(s, Cross):
                d["kind"] = s.kind
            elif isinstance(s, Cup):
                d["left"] = s.left.to_json_obj()
            elif isinstance(s, Split):
                d.update(sign=s.sign, left=s.left.to_json_obj(), right=s.right.to_json_obj())
            elif isinstance(s, Merge):
                d.update(sign=s.sign, out=s.out.to_json_obj())
            sl.append(d)
        return {"bottom": [b.to_json_obj() for b in self.bottom], "slices": sl}

    def to_json(self):
        return json.dumps(self.to_json_obj())

    def __repr__(self):
        return f"MorseWord(bottom={len(self.bottom)}, slices={len(self.slices)})"


def _step(cur, s):
    cur = list(cur)
    p = s.pos
    if isinstance(s, Cross):
        cur[p], cur[p + 1] = cur[p + 1], cur[p]
    elif isinstance(s, Cup):
        cur[p:p] = [s.left, s.left.turned()]
    elif isinstance(s, Cap):
        del cur[p:p + 2]
    elif isinstance(s, Split):
        cur[p:p + 1] = [s.left, s.right]
    elif isinstance(s, Merge):
        cur[p:p + 2] = [s.out]
    else:
        raise TypeError(f"unknown slice {s!r}")
    return cur


def validate(m):
    """Check arities, cap matching, vertex admissibility and typicality."""
    cur = list(m.bottom)
    for b in cur:
        if not b.color.is_typical:
            return Report(False, "AtypicalEdge", f"bottom edge colored {b.color}", -1)
    for idx, s in enumerate(m.slices):
        need = 1 if isinstance(s, Split) else 0 if isinstance(s, Cup) else 2
        if s.pos < 0 or s.pos + need > len(cur) or (isinstance(s, Cup) and s.pos > len(cur)):
            return Report(False, "BadSlice", f"{s!r} out of range for width {len(cur)}", idx)
        if isinstance(s, Cap):
            l, r = cur[s.pos], cur[s.pos + 1]
            if l.up == r.up or l.color != r.color:
                return Report(False, "BadSlice", f"cap joins incompatible strands {l}, {r}", idx)
        if isinstance(s, (Split, Merge)):
            if isinstance(s, Split):
                below, above = [cur[s.pos]], [s.left, s.right]
            else:
                below, above = [cur[s.pos], cur[s.pos + 1]], [s.out]
            outward = sum((a.module for a in above), ColorForm(0))
            outward = outward + sum((b.module.dual() for b in below), ColorForm(0))
            want = -1 if s.sign > 0 else -2
            if outward != ColorForm(want):
                return Report(False, "Inadmissible",
                              f"vertex sum {outward}, expected {want}", idx)
            for e in above:
                if not e.color.is_typical:
                    return Report(False, "AtypicalEdge", f"edge colored {e.color}", idx)
        if isinstance(s, Cup) and not s.left.color.is_typical:
            return Report(False, "AtypicalEdge", f"edge colored {s.left.color}", idx)
        cur = _step(cur, s)
    return Report(True)


# braids

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} invalid on {self.strands} strands")

    @classmethod
    def parse(cls, text, strands=None):
        letters = [int(t) for t in text.replace(",", " ").split()]
        n = strands if strands is not None else max((abs(x) for x in letters), default=0) + 1
        return cls(n, tuple(letters))

    def permutation(self):
        """perm[j] = top position of the strand starting at bottom position j."""
        pos = list(range(self.strands))  # pos[j]: current position of strand j
        at = list(range(self.strands))   # at[p]: strand currently at position p
        for x in self.letters:
            i = abs(x) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
            pos[at[i]], pos[at[i + 1]] = i, i + 1
        return pos

    def components(self):
        """Cycles of the closure, each a sorted list of bottom positions.

        Components are ordered by their smallest strand index.
        """
        perm = self.permutation()
        seen, comps = set(), []
        for j in range(self.strands):
            if j in seen:
                continue
            cyc, k = [], j
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = perm[k]
            comps.append(sorted(cyc))
        return comps

    def component_of(self):
        out = {}
        for c, cyc in enumerate(self.components(), start=1):
            for j in cyc:
                out[j] = c
        return out

    @property
    def n_components(self):
        return len(self.components())


@dataclass(frozen=True)
class LinkMeta:
    n: int
    lk: tuple  # symmetric n x n with zero diagonal, 0-based rows
    writhe: tuple
    colors: tuple

    def lk_star(self, i, j):
        """Linking matrix with the writhe on the diagonal (1-based indices)."""
        return self.writhe[i - 1] if i == j else self.lk[i - 1][j - 1]


def generic_colors(n):
    return tuple(ColorForm.var(i) for i in range(1, n + 1))


def linking_data(b, colors=None):
    comp = b.component_of()
    n = b.n_components
    twice = [[0] * n for _ in range(n)]
    w = [0] * n
    at = list(range(b.strands))
    for x in b.letters:
        i = abs(x) - 1
        ci, cj = comp[at[i]], comp[at[i + 1]]
        sign = 1 if x > 0 else -1
        if ci == cj:
            w[ci - 1] += sign
        else:
            twice[ci - 1][cj - 1] += sign
            twice[cj - 1][ci - 1] += sign
        at[i], at[i + 1] = at[i + 1], at[i]
    lk = tuple(tuple(int(Fraction(v, 2)) for v in row) for row in twice)
    if any(v % 2 for row in twice for v in row):
        raise AssertionError("odd inter-component crossing count")
    return LinkMeta(n, lk, tuple(w), tuple(colors or generic_colors(n)))


def braid_to_morse(b, k=1, colors=None):
    """(1,1)-tangle whose closure is the closure of ``b``, open along component k.

    The open strand is the lowest bottom position s of component k.  Strands
    left of s close around the left side, strands right of s around the
    right side, each side nested so that no arcs cross.
    """
    comps = b.components()
    if not 1 <= k <= len(comps):
        raise BadComponent(f"component {k} not in 1..{len(comps)}")
    colors = tuple(colors or generic_colors(len(comps)))
    comp = b.component_of()
    col = [ColorForm.lift(colors[comp[j] - 1]) for j in range(b.strands)]
    n, s = b.strands, comps[k - 1][0]

    level = [("b", s)]
    slices = []
    for j in range(s + 1, n):  # right side, outermost first
        p = level.index(("b", j - 1)) + 1
        slices.append(Cup(p, Strand(col[j], True)))
        level[p:p] = [("b", j), ("r", j)]
    for j in range(s - 1, -1, -1):  # left side, outermost first
        p = level.index(("b", j + 1))
        slices.append(Cup(p, Strand(col[j], False)))
        level[p:p] = [("r", j), ("b", j)]
    for x in b.letters:
        p = level.index(("b", abs(x) - 1))
        slices.append(Cross(p, 1 if x > 0 else -1))
    for j in range(n - 1, s, -1):  # innermost first
        p = level.index(("b", j))
        slices.append(Cap(p))
        del level[p:p + 2]
    for j in range(0, s):
        p = level.index(("r", j))
        slices.append(Cap(p))
        del level[p:p + 2]
    return MorseWord((Strand(col[s], True),), slices)


# fixtures

class FixtureError(ValueError):
    """A fixture file does not match the schema."""


_FIXTURE_KEYS = {"name", "strands", "braid", "components", "colors"}


@dataclass(frozen=True)
class Fixture:
    name: str
    braid: BraidWord
    components: int
    colors: object = "generic"

    @classmethod
    def from_obj(cls, obj):
        if not isinstance(obj, dict):
            raise FixtureError("fixture must be a JSON object")
        extra = set(obj) - _FIXTURE_KEYS
        missing = {"name", "strands", "braid"} - set(obj)
        if extra or missing:
            raise FixtureError(f"unknown fields {sorted(extra)}, missing {sorted(missing)}")
        try:
            b = BraidWord(int(obj["strands"]), tuple(obj["braid"]))
        except (TypeError, ValueError) as exc:
            raise FixtureError(str(exc)) from None
        n = obj.get("components", b.n_components)
        if n != b.n_components:
            raise FixtureError(f"fixture says {n} components, braid closes to {b.n_components}")
        colors = obj.get("colors", "generic")
        if colors != "generic":
            if not isinstance(colors, list) or len(colors) != n:
                raise FixtureError("colors must be 'generic' or one entry per component")
        return cls(obj["name"], b, n, colors)

    def color_forms(self):
        if self.colors == "generic":
            return generic_colors(self.components)
        return tuple(_parse_color(c) for c in self.colors)


def _parse_color(c):
    if isinstance(c, int):
        return ColorForm(c)
    if isinstance(c, str) and c.startswith("a") and c[1:].isdigit():
        return ColorForm.var(int(c[1:]))
    raise FixtureError(f"cannot read color {c!r}")


def bundled_fixtures():
    """Names of the fixtures shipped with the package."""
    root = resources.files("sl21inv") / "data"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(ref):
    """Load a fixture from a path, or by bundled name ("hopf", "hopf.json")."""
    path = Path(ref)
    if path.is_file():
        text = path.read_text()
    else:
        name = path.name[:-5] if path.name.endswith(".json") else path.name
        res = resources.files("sl21inv") / "data" / f"{name}.json"
        if not res.is_file():
            raise FixtureError(f"no fixture file or bundled fixture named {ref!r}")
        text = res.read_text()
    try:
        return Fixture.from_obj(json.loads(text))
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{ref}: {exc}") from None
