from __future__ import annotations

from enum import Enum
from typing import Iterator, List, Literal, Optional, Tuple

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, RootModel, field_validator, model_validator

from app.utils.errors import LengthMismatch, NotNondecreasing


class BoundedSeq(RootModel[Tuple[int, ...]]):
    """A nondecreasing sequence a_0 <= ... <= a_k of natural numbers."""

    model_config = ConfigDict(frozen=True)

    @field_validator("root", mode="after")
    @classmethod
    def check_entries(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise NotNondecreasing("a sequence needs at least one entry")
        if v[0] < 0:
            raise NotNondecreasing(f"entries must be natural numbers, got {list(v)}")
        if any(x > y for x, y in zip(v, v[1:])):
            raise NotNondecreasing(f"entries must be nondecreasing, got {list(v)}")
        return v

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(self.root)

    def __getitem__(self, i: int) -> int:
        return self.root[i]

    def __len__(self) -> int:
        return len(self.root)

    @property
    def k(self) -> int:
        return len(self.root) - 1

    @property
    def total(self) -> int:
        return sum(self.root)


class SymbolPair(BaseModel):
    """A pair (a_*, a'_*) of equal-length bounded sequences."""

    model_config = ConfigDict(frozen=True)

    a: BoundedSeq
    a_prime: BoundedSeq

    @model_validator(mode="after")
    def check_lengths(self) -> "SymbolPair":
        if len(self.a) != len(self.a_prime):
            raise LengthMismatch(f"components have lengths {len(self.a)} and {len(self.a_prime)}")
        return self

    @classmethod
    def of(cls, a, a_prime) -> "SymbolPair":
        return cls(a=tuple(a), a_prime=tuple(a_prime))

    @property
    def k(self) -> int:
        return self.a.k

    @property
    def total_a(self) -> int:
        return self.a.total

    @property
    def total_a_prime(self) -> int:
        return self.a_prime.total

    @property
    def n(self) -> int:
        return self.a.total + self.a_prime.total

    @property
    def is_diagonal(self) -> bool:
        return self.a.root == self.a_prime.root

    @property
    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.a.root, self.a_prime.root)

    def __lt__(self, other: "SymbolPair") -> bool:
        return self.sort_key < other.sort_key

    def bipartition(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """The pair of partitions this pair renders, largest part first."""
        return (
            tuple(x for x in reversed(self.a.root) if x),
            tuple(x for x in reversed(self.a_prime.root) if x),
        )

    def text(self) -> str:
        return "({} | {})".format(" ".join(map(str, self.a)), " ".join(map(str, self.a_prime)))


class FamilyId(str, Enum):
    C = "c"
    D = "d"
    B = "b"
    B1 = "b1"
    B2 = "b2"
    C1 = "c1"
    DD = "dd"
    D1 = "d1"
    D2 = "d2"

    @property
    def label(self) -> str:
        return _FAMILY_LABELS[self]


_FAMILY_LABELS = {
    FamilyId.C: "C",
    FamilyId.D: "D",
    FamilyId.B: "bC",
    FamilyId.B1: "b1C",
    FamilyId.B2: "b2C",
    FamilyId.C1: "c1C",
    FamilyId.DD: "dD",
    FamilyId.D1: "d1D",
    FamilyId.D2: "d2D",
}


class ClosureRule(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: FamilyId
    right: FamilyId
    target: FamilyId

    def __str__(self) -> str:
        return f"{self.left.value}+{self.right.value}={self.target.value}"


class ClosureReport(BaseModel):
    rule: str
    max_n: int
    passed: bool = Field(serialization_alias="pass", validation_alias=AliasChoices("passed", "pass"))
    checked: int
    counterexample: Optional[Tuple[SymbolPair, SymbolPair]] = None


class Series(str, Enum):
    A = "a"
    B = "b"
    D = "d"

    @property
    def label(self) -> str:
        return f"{self.name}-case"


class Decomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["terminal", "split"]
    left: Optional[SymbolPair] = None
    right: Optional[SymbolPair] = None
    m: Optional[int] = None
    m_prime: Optional[int] = None
    proof_case: Optional[str] = None

    @property
    def is_split(self) -> bool:
        return self.kind == "split"

    def as_json(self) -> dict:
        if not self.is_split:
            return {"kind": "terminal"}
        return self.model_dump(mode="json")

    def text(self) -> str:
        if not self.is_split:
            return f"terminal [{self.proof_case}]" if self.proof_case else "terminal"
        return f"split [{self.proof_case}] m={self.m} m'={self.m_prime}: {self.left.text()} + {self.right.text()}"


class Leaf(BaseModel):
    pair: SymbolPair
    series: Series
    family: FamilyId


class DecompositionReport(BaseModel):
    series: Series
    max_n: int
    checked: int = 0
    terminal: int = 0
    split: int = 0
    oracle_checked: int = 0
    both: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class GroupSeries(str, Enum):
    B = "B"
    C = "C"
    D = "D"

    @property
    def min_rank(self) -> int:
        return 4 if self is GroupSeries.D else 2


class Side(str, Enum):
    GROUP = "group"
    ALGEBRA = "algebra"


class GroupType(BaseModel):
    model_config = ConfigDict(frozen=True)

    series: GroupSeries
    n: int = Field(ge=0)
    p: Literal[2] = 2

    @property
    def in_classical_range(self) -> bool:
        return self.n >= self.series.min_rank

    def __str__(self) -> str:
        return f"{self.series.value}_{self.n}"


class OrbitLabel(BaseModel):
    model_config = ConfigDict(frozen=True)

    pair: SymbolPair
    split: Optional[Literal["I", "II"]] = None
    series: GroupSeries
    n: int

    def text(self) -> str:
        return self.pair.text() + (f" {self.split}" if self.split else "")


class SpringerSet(BaseModel):
    group: GroupType
    side: Side
    labels: List[OrbitLabel]
    warnings: List[str] = Field(default_factory=list)


class TauMapping(BaseModel):
    group: GroupType
    pairs: List[Tuple[OrbitLabel, OrbitLabel]]
    unhit: List[OrbitLabel]

    @property
    def injective(self) -> bool:
        images = [target for _, target in self.pairs]
        return len(set(images)) == len(images)

    @property
    def bijective(self) -> bool:
        return self.injective and not self.unhit


class CountsRow(BaseModel):
    series: GroupSeries
    n: int
    card_group: int
    card_algebra: int
    difference: int


class DeltaEntry(BaseModel):
    name: str
    b_value: int


class ExceptionalDelta(BaseModel):
    group_type: Literal["G2", "F4", "E6", "E7", "E8"]
    p: int
    added: List[DeltaEntry] = Field(default_factory=list)
    note: Optional[str] = None


class CheckResult(BaseModel):
    name: str
    passed: bool = Field(serialization_alias="pass", validation_alias=AliasChoices("passed", "pass"))
    detail: str = ""


class VerificationReport(BaseModel):
    max_n: int
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)
