"""Evidence objects attached to genus verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .embedding import RotationSystem


@dataclass(frozen=True)
class SubdivisionMapping:
    """A subdivision of ``pattern`` inside a host graph.

    ``branch[i]`` is the host image of pattern vertex ``i``; ``paths[(a, b)]``
    (``a < b``, a pattern edge) is the host path from ``branch[a]`` to ``branch[b]``.
    """

    branch: tuple[int, ...]
    paths: tuple[tuple[tuple[int, int], tuple[int, ...]], ...]

    def path_map(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(self.paths)


@dataclass(frozen=True)
class SubdivisionWitness:
    """Host contains a subdivision of ``pattern_name``; so genus(host) >= ``bound``."""

    pattern_name: str
    mapping: SubdivisionMapping
    bound: int
    kuratowski: bool = False
    trusted: bool = False

    @property
    def kind(self) -> str:
        return "kuratowski-subdivision" if self.kuratowski else "subdivision"

    def describe(self) -> str:
        return f"contains a subdivision of {self.pattern_name} (genus {self.bound})"


@dataclass(frozen=True)
class FormulaChain:
    """A chain of named inequalities ending in ``genus >= bound``.

    ``trusted`` marks chains that use a formula taken from the literature
    without machine verification (the Cartesian product bound).
    """

    steps: tuple[str, ...]
    bound: int
    trusted: bool = False
    label: str = "formula-chain"

    @property
    def kind(self) -> str:
        return "formula-chain"

    def describe(self) -> str:
        tag = " [trusted-formula]" if self.trusted else ""
        return "; ".join(self.steps) + tag


@dataclass(frozen=True)
class SearchExhausted:
    """The embedding search proved that no embedding of genus < ``bound`` exists."""

    bound: int
    nodes: int
    trusted: bool = False

    @property
    def kind(self) -> str:
        return "exhaustive-search"

    def describe(self) -> str:
        return f"no embedding of genus < {self.bound} (search exhausted, {self.nodes} nodes)"


Witness = SubdivisionWitness | FormulaChain | SearchExhausted


@dataclass(frozen=True)
class ComponentGenus:
    vertices: tuple[int, ...]
    lower: int
    upper: Optional[int]
    nodes: int


@dataclass
class GenusEvidence:
    """Verdict about the genus of a graph.

    ``verdict`` is ``"exact"`` (``lower == upper`` and ``rotation`` attains it),
    ``"bounds"`` or ``"timed_out"``.  ``rotation`` is a rotation system for the
    whole graph whose per-component genera sum to ``upper``.
    """

    verdict: str
    lower: int
    upper: Optional[int] = None
    rotation: Optional[RotationSystem] = None
    witnesses: list = field(default_factory=list)
    components: list = field(default_factory=list)
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.verdict == "exact"

    @property
    def genus(self) -> Optional[int]:
        return self.lower if self.exact else None

    @property
    def trusted(self) -> bool:
        """Whether the lower bound rests on a trusted (unverified) formula."""
        best = [w for w in self.witnesses if w.bound >= self.lower]
        return bool(best) and all(w.trusted for w in best)
