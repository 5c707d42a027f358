"""Root-system combinatorics for types A and C.

Conventions: rho for A(n) is (n-1, ..., 1, 0) and for C(n) is (n, ..., 1).
Callers add rho themselves before calling :func:`dotted_normalize`, so the
singular test below is purely about equal (or, for C, opposite or zero) entries.
"""
import itertools
import math
from collections import deque
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple, Union

from src.core.exceptions import NonDominantWeightError, UnsupportedRootSystemError
from src.weights.models import NormalizationResult, RootSystem, RootSystemType, Weight


def _kind(root_system: Union[RootSystemType, RootSystem, str]) -> RootSystemType:
    if isinstance(root_system, RootSystem):
        return root_system.kind
    try:
        return RootSystemType(root_system)
    except ValueError:
        raise UnsupportedRootSystemError(f"unsupported root system tag {root_system!r}") from None


def rho(root_system: Union[RootSystemType, RootSystem, str], rank: Optional[int] = None) -> Weight:
    kind = _kind(root_system)
    if rank is None:
        if not isinstance(root_system, RootSystem):
            raise ValueError("rank is required when passing a bare root system tag")
        rank = root_system.rank
    if rank < 1:
        raise ValueError(f"rank must be at least 1, got {rank}")
    if kind is RootSystemType.A:
        return Weight.of(kind, range(rank - 1, -1, -1))
    return Weight.of(kind, range(rank, 0, -1))


def positive_roots(root_system: RootSystem) -> List[Tuple[int, ...]]:
    """Positive roots as coordinate vectors (e_i - e_j, and for C also e_i + e_j, 2e_i)"""
    n = root_system.rank
    roots = []
    for i, j in itertools.combinations(range(n), 2):
        root = [0] * n
        root[i], root[j] = 1, -1
        roots.append(tuple(root))
    if root_system.kind is RootSystemType.C:
        for i, j in itertools.combinations(range(n), 2):
            root = [0] * n
            root[i], root[j] = 1, 1
            roots.append(tuple(root))
        for i in range(n):
            root = [0] * n
            root[i] = 2
            roots.append(tuple(root))
    return roots


def _pairing(v: Tuple[int, ...], root: Tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(v, root))


def dotted_normalize(v: Weight) -> NormalizationResult:
    """Move a rho-shifted weight into the dominant chamber.

    Type A: singular iff two entries agree; otherwise the length is the
    inversion count and the dominant representative is the strictly
    decreasing sort. Type C: singular iff an entry is zero or two entries agree
    up to sign; otherwise the length counts positive roots pairing negatively
    with ``v`` and the representative sorts absolute values.
    """
    entries = v.entries
    kind = v.root_system.kind
    if kind is RootSystemType.A:
        if len(set(entries)) != len(entries):
            return NormalizationResult.make_singular()
        length = sum(1 for a, b in itertools.combinations(entries, 2) if a < b)
        dominant = tuple(sorted(entries, reverse=True))
        return NormalizationResult.regular(length, Weight(entries=dominant, root_system=v.root_system))

    absolute = [abs(e) for e in entries]
    if 0 in absolute or len(set(absolute)) != len(absolute):
        return NormalizationResult.make_singular()
    length = sum(1 for root in positive_roots(v.root_system) if _pairing(entries, root) < 0)
    dominant = tuple(sorted(absolute, reverse=True))
    return NormalizationResult.regular(length, Weight(entries=dominant, root_system=v.root_system))


def weyl_dim(root_system: Union[RootSystemType, RootSystem, str], dominant_weight: Weight) -> int:
    """Dimension of the irreducible representation with the given highest weight"""
    kind = _kind(root_system)
    if kind is not dominant_weight.root_system.kind:
        raise ValueError(f"weight {dominant_weight} belongs to {dominant_weight.root_system}, not type {kind.value}")
    if not dominant_weight.is_dominant():
        raise NonDominantWeightError(f"{dominant_weight} is not dominant for {dominant_weight.root_system}")

    shift = rho(dominant_weight.root_system)
    v = (dominant_weight + shift).entries
    r = shift.entries
    if kind is RootSystemType.A:
        numerator = math.prod(v[i] - v[j] for i, j in itertools.combinations(range(len(v)), 2))
        denominator = math.prod(r[i] - r[j] for i, j in itertools.combinations(range(len(r)), 2))
    else:
        # coroots: e_i - e_j, e_i + e_j and e_i (for the long root 2e_i)
        def product(x):
            pairs = math.prod((x[i] - x[j]) * (x[i] + x[j]) for i, j in itertools.combinations(range(len(x)), 2))
            return pairs * math.prod(x)
        numerator, denominator = product(v), product(r)
    dimension, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"Weyl dimension of {dominant_weight} is not an integer")
    return dimension


class SignedPermutation(NamedTuple):
    """Weyl group element of type C: (w v)_i = signs[i] * v[perm[i]]"""
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def act(self, entries: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(s * entries[p] for p, s in zip(self.perm, self.signs))

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other"""
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        return SignedPermutation(perm, signs)

    @classmethod
    def identity(cls, rank: int) -> "SignedPermutation":
        return cls(tuple(range(rank)), (1,) * rank)


def simple_reflections(root_system: RootSystem) -> List[SignedPermutation]:
    n = root_system.rank
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(SignedPermutation(tuple(perm), (1,) * n))
    if root_system.kind is RootSystemType.C:
        signs = [1] * n
        signs[-1] = -1
        gens.append(SignedPermutation(tuple(range(n)), tuple(signs)))
    return gens


def weyl_group(root_system: RootSystem) -> Iterator[SignedPermutation]:
    """All elements: permutations for A, signed permutations for C"""
    n = root_system.rank
    sign_choices = [(1,) * n] if root_system.kind is RootSystemType.A else itertools.product((1, -1), repeat=n)
    sign_choices = list(sign_choices)
    for perm in itertools.permutations(range(n)):
        for signs in sign_choices:
            yield SignedPermutation(perm, tuple(signs))


def reduced_word_lengths(root_system: RootSystem) -> Dict[SignedPermutation, int]:
    """Length of every group element as a word in simple reflections (BFS on the Cayley graph)"""
    start = SignedPermutation.identity(root_system.rank)
    gens = simple_reflections(root_system)
    lengths = {start: 0}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        for gen in gens:
            successor = gen.compose(element)
            if successor not in lengths:
                lengths[successor] = lengths[element] + 1
                queue.append(successor)
    return lengths
