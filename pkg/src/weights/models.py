from enum import Enum
from typing import Dict, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

MAX_AFFINE_PARAMETERS = 2


class RootSystemType(str, Enum):
    A = "A"
    C = "C"


class RootSystem(BaseModel):
    """Root system tag together with the number of coordinates it acts on.

    ``A(n)`` is the root system of GL_n (n coordinates), ``C(n)`` the one of
    Sp_2n (n coordinates).
    """
    model_config = ConfigDict(frozen=True)

    kind: RootSystemType
    rank: int = Field(ge=1)

    @classmethod
    def type_a(cls, rank: int) -> "RootSystem":
        return cls(kind=RootSystemType.A, rank=rank)

    @classmethod
    def type_c(cls, rank: int) -> "RootSystem":
        return cls(kind=RootSystemType.C, rank=rank)

    @property
    def positive_root_count(self) -> int:
        n = self.rank
        if self.kind is RootSystemType.A:
            return n * (n - 1) // 2
        return n * n

    def __str__(self) -> str:
        return f"{self.kind.value}({self.rank})"


class Weight(BaseModel):
    """Integer weight in the standard coordinates of its root system"""
    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]
    root_system: RootSystem

    @model_validator(mode="after")
    def _check_length(self) -> "Weight":
        if len(self.entries) != self.root_system.rank:
            raise ValueError(
                f"weight {self.entries} has {len(self.entries)} entries, "
                f"root system {self.root_system} needs {self.root_system.rank}"
            )
        return self

    @classmethod
    def of(cls, kind: RootSystemType, entries) -> "Weight":
        entries = tuple(int(e) for e in entries)
        return cls(entries=entries, root_system=RootSystem(kind=kind, rank=len(entries)))

    @classmethod
    def type_a(cls, *entries: int) -> "Weight":
        return cls.of(RootSystemType.A, entries)

    @classmethod
    def type_c(cls, *entries: int) -> "Weight":
        return cls.of(RootSystemType.C, entries)

    def _check_compatible(self, other: "Weight") -> None:
        if other.root_system != self.root_system:
            raise ValueError(f"cannot combine weights of {self.root_system} and {other.root_system}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(
            entries=tuple(a + b for a, b in zip(self.entries, other.entries)),
            root_system=self.root_system,
        )

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(
            entries=tuple(a - b for a, b in zip(self.entries, other.entries)),
            root_system=self.root_system,
        )

    def __neg__(self) -> "Weight":
        return Weight(entries=tuple(-a for a in self.entries), root_system=self.root_system)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def reversed(self) -> "Weight":
        return Weight(entries=tuple(reversed(self.entries)), root_system=self.root_system)

    def dual(self) -> "Weight":
        """Highest weight of the dual representation (GL_n): negate and reverse"""
        return -self.reversed()

    def blocks(self, sizes: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
        if sum(sizes) != len(self.entries):
            raise ValueError(f"block sizes {sizes} do not cover {len(self.entries)} entries")
        out, start = [], 0
        for size in sizes:
            out.append(self.entries[start:start + size])
            start += size
        return tuple(out)

    def reversed_within_blocks(self, sizes: Tuple[int, ...]) -> "Weight":
        entries = tuple(e for block in self.blocks(sizes) for e in reversed(block))
        return Weight(entries=entries, root_system=self.root_system)

    def is_levi_dominant(self, sizes: Tuple[int, ...]) -> bool:
        return all(
            all(block[i] >= block[i + 1] for i in range(len(block) - 1))
            for block in self.blocks(sizes)
        )

    def is_dominant(self) -> bool:
        """Dominance for the full group: GL_n weakly decreasing, Sp_2n also nonnegative"""
        decreasing = all(a >= b for a, b in zip(self.entries, self.entries[1:]))
        if self.root_system.kind is RootSystemType.C:
            return decreasing and self.entries[-1] >= 0
        return decreasing

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


class AffineForm(BaseModel):
    """c0 + sum(c_j * p_j) over named integer parameters"""
    model_config = ConfigDict(frozen=True)

    constant: int = 0
    coefficients: Tuple[Tuple[str, int], ...] = ()

    @field_validator("coefficients", mode="before")
    @classmethod
    def _canonical(cls, value):
        if isinstance(value, Mapping):
            value = value.items()
        merged: Dict[str, int] = {}
        for name, coefficient in value:
            merged[str(name)] = merged.get(str(name), 0) + int(coefficient)
        return tuple(sorted((n, c) for n, c in merged.items() if c != 0))

    @classmethod
    def build(cls, constant: int = 0, **coefficients: int) -> "AffineForm":
        return cls(constant=constant, coefficients=tuple(coefficients.items()))

    @classmethod
    def lift(cls, value) -> "AffineForm":
        if isinstance(value, AffineForm):
            return value
        return cls(constant=int(value))

    @property
    def parameters(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.coefficients)

    def coefficient(self, name: str) -> int:
        return dict(self.coefficients).get(name, 0)

    def evaluate(self, point: Mapping[str, int]) -> int:
        try:
            return self.constant + sum(c * point[name] for name, c in self.coefficients)
        except KeyError as e:
            raise ValueError(f"parameter {e.args[0]!r} missing from point {dict(point)}") from None

    def __add__(self, other) -> "AffineForm":
        other = AffineForm.lift(other)
        return AffineForm(
            constant=self.constant + other.constant,
            coefficients=self.coefficients + other.coefficients,
        )

    def __radd__(self, other) -> "AffineForm":
        return self + other

    def __neg__(self) -> "AffineForm":
        return AffineForm(
            constant=-self.constant,
            coefficients=tuple((n, -c) for n, c in self.coefficients),
        )

    def __sub__(self, other) -> "AffineForm":
        return self + (-AffineForm.lift(other))

    def __str__(self) -> str:
        parts = []
        for name, c in self.coefficients:
            if c == 1:
                parts.append(f"+{name}")
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c:+d}{name}")
        if self.constant or not parts:
            parts.append(f"{self.constant:+d}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


class AffineWeight(BaseModel):
    """Weight whose entries are affine in at most two named parameters"""
    model_config = ConfigDict(frozen=True)

    entries: Tuple[AffineForm, ...]
    root_system: RootSystem

    @field_validator("entries", mode="before")
    @classmethod
    def _lift_entries(cls, value):
        return tuple(AffineForm.lift(v) for v in value)

    @model_validator(mode="after")
    def _check(self) -> "AffineWeight":
        if len(self.entries) != self.root_system.rank:
            raise ValueError(f"affine weight needs {self.root_system.rank} entries, got {len(self.entries)}")
        if len(self.parameters) > MAX_AFFINE_PARAMETERS:
            raise ValueError(f"at most {MAX_AFFINE_PARAMETERS} parameters supported, got {self.parameters}")
        return self

    @property
    def parameters(self) -> Tuple[str, ...]:
        return tuple(sorted({p for form in self.entries for p in form.parameters}))

    def instantiate(self, point: Mapping[str, int]) -> Weight:
        return Weight(
            entries=tuple(form.evaluate(point) for form in self.entries),
            root_system=self.root_system,
        )

    def shifted(self, weight: Weight) -> "AffineWeight":
        if weight.root_system != self.root_system:
            raise ValueError(f"cannot shift {self.root_system} affine weight by {weight.root_system} weight")
        return AffineWeight(
            entries=tuple(form + c for form, c in zip(self.entries, weight.entries)),
            root_system=self.root_system,
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(form) for form in self.entries) + ")"


class NormalizationResult(BaseModel):
    """Outcome of the dotted action: singular, or (length, strictly dominant w(v))"""
    model_config = ConfigDict(frozen=True)

    singular: bool
    length: Optional[int] = None
    dominant: Optional[Weight] = None

    @model_validator(mode="after")
    def _check(self) -> "NormalizationResult":
        if self.singular:
            if self.length is not None or self.dominant is not None:
                raise ValueError("a singular result carries no length or dominant weight")
            return self
        if self.length is None or self.dominant is None:
            raise ValueError("a regular result needs both length and dominant weight")
        entries = self.dominant.entries
        if not all(a > b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"{self.dominant} is not strictly dominant")
        if self.dominant.root_system.kind is RootSystemType.C and entries[-1] <= 0:
            raise ValueError(f"{self.dominant} is not strictly dominant for type C")
        if not 0 <= self.length <= self.dominant.root_system.positive_root_count:
            raise ValueError(f"length {self.length} out of range for {self.dominant.root_system}")
        return self

    @classmethod
    def make_singular(cls) -> "NormalizationResult":
        return cls(singular=True)

    @classmethod
    def regular(cls, length: int, dominant: Weight) -> "NormalizationResult":
        return cls(singular=False, length=length, dominant=dominant)
