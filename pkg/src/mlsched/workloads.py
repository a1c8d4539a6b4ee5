"""Seeded instance generators.

Randomness comes from :class:`SplitMix64`, a fixed 64-bit recurrence, so a
``GenSpec`` yields the same instance on every platform and in any language
that follows the draw order below.

Draw order for the random families (each step only when needed):

1. ``n`` -- ``uniform_int(k, n_max)`` (``single_batch``: ``uniform_int(1, n_max)``;
   ``equal_lists``: per-list length ``uniform_int(1, n_max // k)``).
2. list lengths -- every list starts with one job; each of the remaining
   ``n - k`` jobs goes to list ``uniform_int(0, k - 1)``.
3. processing times -- list by list, job by job, ``uniform_int(lo, hi)``.
   The ``unit`` family draws nothing here.

``uniform_int(lo, hi)`` takes raw 64-bit outputs ``x`` and rejects those with
``x >= span * (2**64 // span)`` where ``span = hi - lo + 1``; the first
accepted draw maps to ``lo + x % span``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .model import Instance, build_instance

__all__ = [
    "SplitMix64",
    "GenSpec",
    "FAMILIES",
    "InconsistentSpec",
    "generate",
    "ls_adversarial",
    "single_batch_of",
    "figure2",
]

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

FAMILIES = ("uniform", "unit", "equal_lists", "single_batch", "ls_adversarial", "figure2")


class SplitMix64:
    """``state += 0x9E3779B97F4A7C15``; output is the state passed through
    two xor-shift-multiply rounds and a final xor-shift."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform_int(self, lo: int, hi: int) -> int:
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = span * ((1 << 64) // span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


class InconsistentSpec(ValueError):
    """The generator spec contradicts its family's constraints."""


@dataclass(frozen=True)
class GenSpec:
    """Parameters for :func:`generate`.

    ``k``, ``lengths`` and ``n`` are optional; whatever is left open is drawn
    from the seed (bounded by ``n_max``).
    """

    family: str
    m: int = 2
    k: int | None = None
    lengths: tuple[int, ...] | None = None
    n: int | None = None
    lo: int = 1
    hi: int = 10
    seed: int = 0
    n_max: int = 12

    def __post_init__(self):
        if self.lengths is not None:
            object.__setattr__(self, "lengths", tuple(self.lengths))

    def with_seed(self, seed: int) -> "GenSpec":
        return replace(self, seed=seed)

    def label(self) -> str:
        parts = [self.family, f"m={self.m}"]
        if self.k is not None:
            parts.append(f"k={self.k}")
        if self.lengths is not None:
            parts.append("lens=" + ",".join(map(str, self.lengths)))
        if self.n is not None:
            parts.append(f"n={self.n}")
        return " ".join(parts)


def figure2() -> Instance:
    """Two machines, lists <1,1,1> and <2,2,2>."""
    return build_instance(2, [[1, 1, 1], [2, 2, 2]])


def ls_adversarial(m: int) -> Instance:
    """One list of ``m*(m-1)`` unit jobs followed by a job of size ``m``.

    List scheduling spreads the unit jobs evenly and then stacks the big job
    on top, reaching ``2m - 1`` against an optimum of ``m``.
    """
    if m < 2:
        raise InconsistentSpec(f"ls_adversarial needs m >= 2, got {m}")
    return build_instance(m, [[1] * (m * (m - 1)) + [m]])


def single_batch_of(instance: Instance) -> Instance:
    """Same jobs, one per list, so everything arrives in the first batch."""
    return build_instance(instance.m, [[p] for p in instance.ptimes])


def _check_common(spec: GenSpec) -> None:
    if spec.family not in FAMILIES:
        raise InconsistentSpec(f"unknown family {spec.family!r}; expected one of {FAMILIES}")
    if spec.m < 1:
        raise InconsistentSpec(f"m must be >= 1, got {spec.m}")
    if spec.k is not None and spec.k < 1:
        raise InconsistentSpec(f"k must be >= 1, got {spec.k}")
    if spec.lo < 1 or spec.hi < spec.lo:
        raise InconsistentSpec(f"ptime range [{spec.lo}, {spec.hi}] must satisfy 1 <= lo <= hi")
    if spec.lengths is not None:
        if not spec.lengths or min(spec.lengths) < 1:
            raise InconsistentSpec(f"list lengths must be >= 1, got {list(spec.lengths)}")
        if spec.k is not None and spec.k != len(spec.lengths):
            raise InconsistentSpec(f"k={spec.k} but {len(spec.lengths)} lengths given")
        if spec.n is not None and spec.n != sum(spec.lengths):
            raise InconsistentSpec(f"n={spec.n} but lengths sum to {sum(spec.lengths)}")


def _spread(rng: SplitMix64, n: int, k: int) -> list[int]:
    lengths = [1] * k
    for _ in range(n - k):
        lengths[rng.uniform_int(0, k - 1)] += 1
    return lengths


def _lengths(spec: GenSpec, rng: SplitMix64) -> list[int]:
    if spec.lengths is not None:
        lengths = list(spec.lengths)
    elif spec.family == "single_batch":
        n = spec.n if spec.n is not None else spec.k
        if n is None:
            if spec.n_max < 1:
                raise InconsistentSpec(f"n_max must be >= 1, got {spec.n_max}")
            n = rng.uniform_int(1, spec.n_max)
        lengths = [1] * n
    elif spec.family == "equal_lists":
        k = spec.k if spec.k is not None else 1
        if spec.n is not None:
            if spec.n % k:
                raise InconsistentSpec(f"equal_lists needs k | n, got n={spec.n}, k={k}")
            per = spec.n // k
        else:
            if spec.n_max // k < 1:
                raise InconsistentSpec(f"n_max={spec.n_max} leaves no room for {k} lists")
            per = rng.uniform_int(1, spec.n_max // k)
        lengths = [per] * k
    else:
        k = spec.k if spec.k is not None else 1
        n = spec.n
        if n is None:
            if spec.n_max < k:
                raise InconsistentSpec(f"n_max={spec.n_max} is smaller than k={k}")
            n = rng.uniform_int(k, spec.n_max)
        elif n < k:
            raise InconsistentSpec(f"n={n} jobs cannot fill k={k} non-empty lists")
        lengths = _spread(rng, n, k)

    if spec.family == "single_batch":
        if any(length != 1 for length in lengths):
            raise InconsistentSpec("single_batch needs every list length to be 1")
        if spec.k is not None and spec.k != len(lengths):
            raise InconsistentSpec(f"single_batch needs k = n, got k={spec.k}, n={len(lengths)}")
    if spec.family == "equal_lists" and len(set(lengths)) != 1:
        raise InconsistentSpec(f"equal_lists needs equal lengths, got {lengths}")
    return lengths


def generate(spec: GenSpec) -> Instance:
    """Build the instance described by ``spec``; a pure function of it."""
    _check_common(spec)
    if spec.family == "figure2":
        if spec.m != 2:
            raise InconsistentSpec(f"figure2 is fixed at m=2, got m={spec.m}")
        return figure2()
    if spec.family == "ls_adversarial":
        return ls_adversarial(spec.m)

    rng = SplitMix64(spec.seed)
    lengths = _lengths(spec, rng)
    if spec.family == "unit":
        lists = [[1] * length for length in lengths]
    else:
        lists = [[rng.uniform_int(spec.lo, spec.hi) for _ in range(length)] for length in lengths]
    return build_instance(spec.m, lists)
