"""Named rings with their expected total-graph structure and genus, plus the torus fixtures."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Optional

from .embedding import RotationSystem, parse_rotation
from .evidence import SubdivisionMapping
from .graph import (
    Graph,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    graph_union,
    parse_edge_list,
    total_graph,
)
from .ring import FiniteRing, RingSpec, build_ring
from .ringexpr import parse_ring_expression


class Role(str, Enum):
    PLANAR_LOCAL = "PlanarLocal"
    PLANAR_NONLOCAL = "PlanarNonlocal"
    TOROIDAL_LOCAL = "ToroidalLocal"
    TOROIDAL_NONLOCAL = "ToroidalNonlocal"
    PLANAR_CANDIDATE_REJECTED = "PlanarCandidateRejected"
    TOROIDAL_CANDIDATE_REJECTED = "ToroidalCandidateRejected"


GENUS_AT_LEAST_2 = 2  # genus class "2" means "at least 2"

_ROLE_CLASS = {
    Role.PLANAR_LOCAL: 0,
    Role.PLANAR_NONLOCAL: 0,
    Role.TOROIDAL_LOCAL: 1,
    Role.TOROIDAL_NONLOCAL: 1,
    Role.PLANAR_CANDIDATE_REJECTED: None,  # non-planar; the exact class is stated per entry
    Role.TOROIDAL_CANDIDATE_REJECTED: GENUS_AT_LEAST_2,
}


@dataclass(frozen=True)
class CatalogEntry:
    """A ring named in the classification together with what is expected of it.

    ``evidence`` names the kind of lower-bound evidence expected for rejected
    candidates: ``"subdivision"`` (machine-verified) or ``"trusted-formula"``.
    """

    name: str
    expr: str
    role: Role
    structure: Optional[str]
    genus_class: int
    field: bool = False
    evidence: Optional[str] = None

    @property
    def spec(self) -> RingSpec:
        return parse_ring_expression(self.expr)

    def build(self) -> FiniteRing:
        return build_ring(self.spec)

    @property
    def local(self) -> bool:
        return self.role in (Role.PLANAR_LOCAL, Role.TOROIDAL_LOCAL)


def _entry(name, role, structure, genus_class=None, expr=None, **kw) -> CatalogEntry:
    if genus_class is None:
        genus_class = _ROLE_CLASS[role]
    return CatalogEntry(name, expr or name, role, structure, genus_class, **kw)


PLANAR_LOCAL_RINGS = (
    "Z4",
    "Z2[x]/(x^2)",
    "Z2[x]/(x^3)",
    "Z2[x,y]/(x,y)^2",
    "Z4[x]/(2x,x^2)",
    "Z4[x]/(2x,x^2-2)",
    "Z8",
    "F4[x]/(x^2)",
    "Z4[x]/(x^2+x+1)",
)

_LOCAL_STRUCTURE = {
    "Z4": "2K_2",
    "Z2[x]/(x^2)": "2K_2",
    "F4[x]/(x^2)": "4K_4",
    "Z4[x]/(x^2+x+1)": "4K_4",
}

FIELDS = ("Z2", "Z3", "F4", "Z5", "Z7", "F8", "F9")

TOROIDAL_RINGS = ("Z9", "Z3[x]/(x^2)", "Z2xF4", "Z3xZ3", "Z2xZ4", "Z2xZ2[x]/(x^2)", "Z2xZ2xZ2")

REJECTED_TOROIDAL_CANDIDATES = ("Z2xZ5", "Z3xF4", "F4xF4")


def _field_structure(q: int) -> str:
    if q % 2 == 0:
        return f"{q}K_1"
    return f"K_1 u {(q - 1) // 2}K_{{1,1}}" if q > 3 else "K_1 u K_{1,1}"


@lru_cache(maxsize=None)
def catalog_entries() -> tuple[CatalogEntry, ...]:
    entries = [_entry(name, Role.PLANAR_LOCAL, _LOCAL_STRUCTURE.get(name, "2K_4")) for name in PLANAR_LOCAL_RINGS]
    for name in FIELDS:
        q = int(name[1:])
        entries.append(_entry(name, Role.PLANAR_LOCAL, _field_structure(q), field=True))
    entries += [
        _entry("Z2xZ2", Role.PLANAR_NONLOCAL, "C_4"),
        _entry("Z6", Role.PLANAR_NONLOCAL, "K_2 x K_3"),
        _entry("Z9", Role.TOROIDAL_LOCAL, "K_3 u K_{3,3}"),
        _entry("Z3[x]/(x^2)", Role.TOROIDAL_LOCAL, "K_3 u K_{3,3}"),
        _entry("Z2xF4", Role.TOROIDAL_NONLOCAL, "K_2 x K_4"),
        _entry("Z3xZ3", Role.TOROIDAL_NONLOCAL, None),
        _entry("Z2xZ4", Role.TOROIDAL_NONLOCAL, None),
        _entry("Z2xZ2[x]/(x^2)", Role.TOROIDAL_NONLOCAL, None),
        _entry("Z2xZ2xZ2", Role.TOROIDAL_NONLOCAL, "K_{2,2,2,2}"),
        _entry("Z2xZ5", Role.TOROIDAL_CANDIDATE_REJECTED, "K_2 x K_5", evidence="trusted-formula"),
        _entry("Z3xF4", Role.TOROIDAL_CANDIDATE_REJECTED, None, evidence="subdivision"),
        _entry("F4xF4", Role.TOROIDAL_CANDIDATE_REJECTED, None, evidence="trusted-formula"),
    ]
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    return tuple(entries)


def catalog_entry(name: str) -> CatalogEntry:
    for e in catalog_entries():
        if e.name == name:
            return e
    raise KeyError(name)


def local_catalog_rings() -> list[CatalogEntry]:
    return [e for e in catalog_entries() if e.local]


# ---------------------------------------------------------------------------
# Structure descriptions such as "2K_4", "K_3 u K_{3,3}", "K_2 x K_4"
# ---------------------------------------------------------------------------

_TERM = re.compile(r"^(\d*)(K_\{[\d,]+\}|K_\d+|C_\d+|K_\d+ x K_\d+)$")


def _simple(text: str) -> Graph:
    if text.startswith("C_"):
        return cycle_graph(int(text[2:]))
    if text.startswith("K_{"):
        parts = [int(p) for p in text[3:-1].split(",")]
        return complete_multipartite(parts)
    return complete_graph(int(text[2:]))


def structure_graph(text: str) -> Graph:
    """Build the graph named by a structure description.

    Terms are joined with `` u `` (disjoint union); a term is an optional
    multiplicity followed by ``K_n``, ``K_{a,b,...}``, ``C_n`` or ``K_a x K_b``.
    """
    pieces = []
    for term in text.split(" u "):
        term = term.strip()
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"unrecognized structure term {term!r}")
        count = int(m.group(1) or 1)
        body = m.group(2)
        if " x " in body:
            left, right = body.split(" x ")
            g = cartesian_product(_simple(left), _simple(right))
        else:
            g = _simple(body)
        pieces.append(disjoint_union(count, g) if count > 1 else g)
    return graph_union(*pieces) if len(pieces) > 1 else pieces[0]


# ---------------------------------------------------------------------------
# Torus fixtures
# ---------------------------------------------------------------------------


def _data(name: str) -> str:
    return resources.files("totalgraph").joinpath("data", name).read_text()


@dataclass(frozen=True)
class EmbeddingFixture:
    name: str
    ring: str
    rotation_file: str
    edges_file: str
    expected_genus: int = 1

    def graph(self) -> Graph:
        return total_graph(build_ring(parse_ring_expression(self.ring)))

    def stored_graph(self) -> Graph:
        return parse_edge_list(_data(self.edges_file))

    def rotation_text(self) -> str:
        return _data(self.rotation_file)

    def rotation(self) -> RotationSystem:
        return parse_rotation(self.rotation_text(), self.graph())


@dataclass(frozen=True)
class SubdivisionFixture:
    name: str
    ring: str
    pattern_parts: tuple[int, int]
    mapping_file: str

    def host(self) -> Graph:
        return total_graph(build_ring(parse_ring_expression(self.ring)))

    def pattern(self) -> Graph:
        return complete_bipartite(*self.pattern_parts)

    def mapping(self) -> SubdivisionMapping:
        return complete_subdivision_paths(parse_subdivision(_data(self.mapping_file), self.host()), self.pattern())


def parse_subdivision(text: str, host: Graph) -> SubdivisionMapping:
    """Read ``branch: v0 v1 ...`` and ``a b: path...`` lines (host vertices by label).

    Pattern edges not listed map to the direct host edge between their branch images.
    """
    branch: list[int] | None = None
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        try:
            verts = tuple(host.index(tok) for tok in rest.split())
        except KeyError as exc:
            raise ValueError(f"line {lineno}: unknown vertex {exc.args[0]!r}") from None
        if head.strip() == "branch":
            branch = list(verts)
        else:
            a, b = (int(t) for t in head.split())
            paths[(min(a, b), max(a, b))] = verts if a < b else verts[::-1]
    if branch is None:
        raise ValueError("missing 'branch:' line")
    return SubdivisionMapping(tuple(branch), tuple(sorted(paths.items())))


def complete_subdivision_paths(mapping: SubdivisionMapping, pattern: Graph) -> SubdivisionMapping:
    """Fill in direct edges for pattern edges the mapping leaves implicit."""
    paths = mapping.path_map()
    for a, b in pattern.edges:
        paths.setdefault((a, b), (mapping.branch[a], mapping.branch[b]))
    return SubdivisionMapping(mapping.branch, tuple(sorted(paths.items())))


def figure1_fixtures() -> tuple[list[EmbeddingFixture], SubdivisionFixture]:
    embeddings = [
        EmbeddingFixture("a", "Z2xZ4", "figure1_a.rot", "figure1_a.edges"),
        EmbeddingFixture("b", "Z2xF4", "figure1_b.rot", "figure1_b.edges"),
        EmbeddingFixture("c", "Z3xZ3", "figure1_c.rot", "figure1_c.edges"),
    ]
    return embeddings, SubdivisionFixture("d", "Z3xF4", (5, 4), "figure1_d.sub")
