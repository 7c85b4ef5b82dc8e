"""Problem records, corpora, the problem-type taxonomy and per-type k-fold splits."""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence


class CorpusError(ValueError):
    """Raised for invalid records or corpus-level precondition violations."""


class Category(str, enum.Enum):
    BASIC_ARITHMETIC = "BasicArithmetic"
    AGGREGATIVE = "Aggregative"
    DOMAIN_KNOWLEDGE = "DomainKnowledge"


_BASIC = (
    "Addition", "Subtraction", "Difference", "Multiplication",
    "Common-Division", "Floor-Division", "Ceil-Division", "Sum", "Surplus",
    "Number-Operation", "TVQ-Initial", "TVQ-Change", "TVQ-Final", "Multi-Step",
)
_AGGREGATIVE = (
    "Comparison", "Set-Operation", "Ratio", "Number-Pattern", "Algebra-1", "Algebra-2",
)
_DOMAIN = ("GCD", "LCM", "Geometry", "UnitTrans")

TYPE_CATEGORIES: dict[str, Category] = {
    **{name: Category.BASIC_ARITHMETIC for name in _BASIC},
    **{name: Category.AGGREGATIVE for name in _AGGREGATIVE},
    **{name: Category.DOMAIN_KNOWLEDGE for name in _DOMAIN},
}
PROBLEM_TYPE_NAMES: tuple[str, ...] = _BASIC + _AGGREGATIVE + _DOMAIN


def _type_key(name: str) -> str:
    return re.sub(r"[^a-z0-9]", "", name.lower())


_ALIASES = {_type_key(n): n for n in PROBLEM_TYPE_NAMES}
_ALIASES.update({
    "greatestcommondivisor": "GCD",
    "leastcommonmultiple": "LCM",
    "multistep": "Multi-Step",
    "unittransformation": "UnitTrans",
    "unitconversion": "UnitTrans",
})


@dataclass(frozen=True)
class ProblemType:
    """A problem type; ``category`` is None for extension types."""

    name: str
    category: Category | None

    @classmethod
    def from_name(cls, name: str) -> "ProblemType":
        """Map a label onto the taxonomy.

        Matching ignores case and punctuation ("multi-step", "G.C.D."), so
        distribution spellings resolve to the canonical name. Labels outside
        the taxonomy are kept verbatim as extension types with no category.
        """
        name = name.strip()
        if not name:
            raise CorpusError("empty problem type")
        canonical = _ALIASES.get(_type_key(name))
        if canonical is None:
            return cls(name, None)
        return cls(canonical, TYPE_CATEGORIES[canonical])

    @property
    def is_extension(self) -> bool:
        return self.category is None

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ProblemRecord:
    id: str
    body: str
    question: str = ""
    equations: tuple[str, ...] = ()
    formula: str | None = None
    answer: str = ""
    problem_type: ProblemType | None = None
    grade: int | None = None
    source: str | None = None

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise CorpusError("problem id must be a non-empty string")
        if not isinstance(self.equations, tuple):
            object.__setattr__(self, "equations", tuple(self.equations))
        if self.equations and self.formula is not None:
            raise CorpusError(f"{self.id}: equations and formula are mutually exclusive")
        if isinstance(self.problem_type, str):
            object.__setattr__(self, "problem_type", ProblemType.from_name(self.problem_type))
        if self.grade is not None:
            if isinstance(self.grade, bool) or not isinstance(self.grade, int) or not 1 <= self.grade <= 6:
                raise CorpusError(f"{self.id}: grade must be an integer in 1..6, got {self.grade!r}")

    @property
    def text(self) -> str:
        """Body and question joined, the unit every analysis works on."""
        body, question = self.body.strip(), self.question.strip()
        if body and question:
            return f"{body} {question}"
        return body or question


@dataclass(frozen=True)
class Corpus:
    name: str
    problems: tuple[ProblemRecord, ...]

    def __post_init__(self):
        if not isinstance(self.problems, tuple):
            object.__setattr__(self, "problems", tuple(self.problems))
        seen: set[str] = set()
        for p in self.problems:
            if p.id in seen:
                raise CorpusError(f"duplicate problem id {p.id!r}")
            seen.add(p.id)

    def __len__(self) -> int:
        return len(self.problems)

    def __iter__(self):
        return iter(self.problems)

    def by_id(self) -> dict[str, ProblemRecord]:
        return {p.id: p for p in self.problems}

    def subset(self, ids: Iterable[str], name: str | None = None) -> "Corpus":
        """Records whose id is in ``ids``, in corpus order."""
        wanted = set(ids)
        return Corpus(name or self.name, tuple(p for p in self.problems if p.id in wanted))


def group_by_type(corpus: Corpus, use_types: bool) -> list[list[ProblemRecord]]:
    """Partition the corpus into problem-type groups.

    Groups come out sorted by type name; members keep corpus order. Without
    ``use_types``, or when no problem is annotated, the whole corpus is one group.
    """
    problems = list(corpus.problems)
    if not problems:
        return []
    if not use_types:
        return [problems]
    missing = [p.id for p in problems if p.problem_type is None]
    if len(missing) == len(problems):
        return [problems]
    if missing:
        raise CorpusError("problems without a problem type: " + ", ".join(missing))
    groups: dict[str, list[ProblemRecord]] = {}
    for p in problems:
        groups.setdefault(p.problem_type.name, []).append(p)
    return [groups[name] for name in sorted(groups)]


@dataclass(frozen=True)
class SplitSpec:
    fold_count: int
    seed: int
    assignment: Mapping[str, int]
    warnings: tuple[str, ...] = field(default=())

    def fold_ids(self, fold: int) -> list[str]:
        return [pid for pid, f in self.assignment.items() if f == fold]

    def fold_sizes(self) -> list[int]:
        sizes = [0] * self.fold_count
        for f in self.assignment.values():
            sizes[f] += 1
        return sizes


def seeded_shuffle(items: Sequence, seed: int) -> list:
    """Fisher-Yates shuffle driven by ``random.Random(seed).random()``.

    Only ``random()`` has a cross-version reproducibility guarantee in the
    stdlib, so the swap index is derived from it rather than from ``shuffle``.
    """
    rng = random.Random(seed)
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        out[i], out[j] = out[j], out[i]
    return out


def k_fold_split(corpus: Corpus, k: int, seed: int) -> SplitSpec:
    """Assign each problem to one of ``k`` folds, balanced within each type group.

    Each group is shuffled with a seed derived from ``seed`` and the group's
    position, then dealt round-robin. The dealing offset carries over between
    groups so the global fold sizes stay balanced too.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise CorpusError(f"fold count must be an integer >= 2, got {k!r}")
    use_types = any(p.problem_type is not None for p in corpus.problems)
    groups = group_by_type(corpus, use_types)
    assignment: dict[str, int] = {}
    warnings: list[str] = []
    offset = 0
    for g_index, group in enumerate(groups):
        if len(group) < k:
            label = group[0].problem_type.name if use_types else corpus.name
            warnings.append(f"group {label!r} has {len(group)} problems for {k} folds; some folds are empty")
        shuffled = seeded_shuffle([p.id for p in group], seed * 1_000_003 + g_index)
        for pos, pid in enumerate(shuffled):
            assignment[pid] = (offset + pos) % k
        offset = (offset + len(group)) % k
    ordered = {p.id: assignment[p.id] for p in corpus.problems}
    return SplitSpec(k, seed, ordered, tuple(warnings))
