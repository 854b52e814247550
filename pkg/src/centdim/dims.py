"""Closed-form dimensions of tensor-power centralizer algebras.

The permutation module M of S_n on n letters has centralizer algebras
End(M^k) whose irreducible blocks are indexed by partitions of n; half
levels k+1/2 restrict the action to S_{n-1} and are indexed by partitions
of n-1. Everything here is a finite sum of Stirling numbers against Kostka
numbers of hook type, together with the binomial transforms that move
between the permutation module and the reflection module (quasi case) and
the conjugation-folding that moves from S to A.

Levels are fractions.Fraction values with denominator 1 or 2.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import bell_restricted, binomial, stirling2
from .branch import alt_labels
from .young import (
    check_partition,
    conjugate,
    involutions_with_fixed_points,
    num_syt,
    kostka_hook_type,
    partitions_of,
)

GROUPS = ("S", "A")
MODULES = ("perm", "refl")


def parse_level(text):
    """Read a level: "3", "7/2", or "3.5" (halves only)."""
    try:
        level = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse level {text!r}") from None
    return check_level(level)


def check_level(level):
    level = Fraction(level)
    if level < 0 or level.denominator not in (1, 2):
        raise ValueError(f"level must be a nonnegative half-integer, got {level}")
    return level


def format_level(level):
    return str(Fraction(level))


def level_floor(level):
    return int(math.floor(level))


def is_half(level):
    return Fraction(level).denominator == 2


@dataclass(frozen=True)
class GroupModuleContext:
    """Which algebra: group 'S' or 'A' on n letters, module 'perm' or 'refl',
    at an integer or half-integer level."""

    group: str
    n: int
    module: str
    level: Fraction

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValueError(f"group must be one of {GROUPS}, got {self.group!r}")
        if self.module not in MODULES:
            raise ValueError(f"module must be one of {MODULES}, got {self.module!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "level", check_level(self.level))

    @property
    def k(self):
        return level_floor(self.level)

    @property
    def half(self):
        return is_half(self.level)

    @property
    def label_size(self):
        """Size of the partitions indexing blocks at this level."""
        return self.n - 1 if self.half else self.n


def dim_z(n, k, lam):
    """Dimension of the irreducible block of End_{S_n}(M^k) at lam.

    Sum over t of S2(k, t) * K(lam, hook(n, t)); 0 when lam does not occur,
    including the k = 0 case where only lam = (n) survives.
    """
    lam = check_partition(lam)
    if sum(lam) != n:
        raise ValueError(f"expected a partition of {n}, got {lam}")
    return sum(
        stirling2(k, t) * kostka_hook_type(lam, n, t) for t in range(n + 1)
    )


def dim_z_half(n, k, mu):
    """Dimension of the block at mu for End_{S_{n-1}}(M^k), level k + 1/2."""
    mu = check_partition(mu) if mu else ()
    if sum(mu) != n - 1:
        raise ValueError(f"expected a partition of {n - 1}, got {mu}")
    return sum(
        stirling2(k + 1, t + 1) * kostka_hook_type(mu, n - 1, t)
        for t in range(n)
    )


def _fold_alt(base_dim, n, k, label):
    """Fold an S-level dimension function through conjugation for A."""
    lam = label.base
    if label.sign is not None:
        return base_dim(n, k, lam)
    star = conjugate(lam)
    if star == lam:
        # degenerate self-conjugate label (size <= 1): nothing to fold
        return base_dim(n, k, lam)
    return base_dim(n, k, lam) + base_dim(n, k, star)


def dim_z_alt(n, k, label):
    """Dimension of the block at an A_n label for End_{A_n}(M^k)."""
    if label.size != n:
        raise ValueError(f"expected a label of size {n}, got {label}")
    return _fold_alt(dim_z, n, k, label)


def dim_z_alt_half(n, k, label):
    """Level k + 1/2 for the alternating group: End_{A_{n-1}}(M^k)."""
    if label.size != n - 1:
        raise ValueError(f"expected a label of size {n - 1}, got {label}")
    return _fold_alt(dim_z_half, n, k, label)


def _quasi(base_dim, n, k, lam):
    """Alternating binomial transform moving perm-module data to the
    reflection module: M = trivial + R, so dimensions for R^k are
    sum_l (-1)^(k-l) C(k, l) * (value at M^l)."""
    return sum(
        (-1) ** (k - low) * binomial(k, low) * base_dim(n, low, lam)
        for low in range(k + 1)
    )


def dim_qz(n, k, lam):
    """Block dimension for End_{S_n}(R^k), R the reflection module."""
    return _quasi(dim_z, n, k, lam)


def dim_qz_half(n, k, mu):
    return _quasi(dim_z_half, n, k, mu)


def dim_qz_alt(n, k, label):
    return _quasi(dim_z_alt, n, k, label)


def dim_qz_alt_half(n, k, label):
    return _quasi(dim_z_alt_half, n, k, label)


def _perm_algebra_dim(group, n, tensor_exponent, acting_letters):
    """Multiplicity of the acting group's trivial module in M tensored
    tensor_exponent times; this is the algebra dimension at level
    tensor_exponent / 2.

    For S this is the restricted Bell number B(j, n). For A two extra
    Stirling terms appear, except when the acting group has at most one
    letter (A_0 and A_1 coincide with S_0 and S_1, so the S value stands).
    The acting letter count is passed explicitly because inside the
    alternating transform the exponent varies while the group does not.
    """
    value = bell_restricted(tensor_exponent, n)
    if group == "A" and acting_letters >= 2:
        value += stirling2(tensor_exponent, n - 1) + stirling2(tensor_exponent, n)
    return value


def dim_z_algebra(ctx):
    """Dimension of the whole centralizer algebra described by ctx."""
    twice = 2 * ctx.k + (1 if ctx.half else 0)
    acting = ctx.n - 1 if ctx.half else ctx.n
    if ctx.module == "perm":
        return _perm_algebra_dim(ctx.group, ctx.n, twice, acting)
    shift = 1 if ctx.half else 0
    doubled_k = 2 * ctx.k
    return sum(
        (-1) ** (doubled_k - low)
        * binomial(doubled_k, low)
        * _perm_algebra_dim(ctx.group, ctx.n, low + shift, acting)
        for low in range(doubled_k + 1)
    )


def _abacus_sum(k, half, nu_size):
    """sum_t C(t, |nu|) * S2-coefficient at level k (or k + 1/2)."""
    if half:
        return sum(
            binomial(t, nu_size) * stirling2(k + 1, t + 1)
            for t in range(nu_size, k + 1)
        )
    return sum(binomial(t, nu_size) * stirling2(k, t) for t in range(nu_size, k + 1))


def dim_partition_algebra_irr(level, nu):
    """Dimension of the partition-algebra irreducible labeled nu at the
    given (possibly half-integer) level.

    This is the stable large-n limit of dim_z at lam = (n - |nu|, nu):
    f^nu * sum_t C(t, |nu|) * S2(k, t), with the shifted Stirling numbers
    at half levels. Requires |nu| <= floor(level).
    """
    level = check_level(level)
    nu = check_partition(nu) if nu else ()
    k = level_floor(level)
    if sum(nu) > k:
        raise ValueError(f"|{nu}| exceeds the level floor {k}")
    return num_syt(nu) * _abacus_sum(k, is_half(level), sum(nu))


def dim_qp_irr(k, nu):
    """Dimension of the quasi partition algebra irreducible at nu, integer
    levels only: the alternating binomial transform of the stable sums."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"need an integer level k >= 0, got {k!r}")
    nu = check_partition(nu) if nu else ()
    if sum(nu) > k:
        raise ValueError(f"|{nu}| exceeds the level {k}")
    return num_syt(nu) * sum(
        (-1) ** (k - low) * binomial(k, low) * _abacus_sum(low, False, sum(nu))
        for low in range(k + 1)
    )


def dim_model_block(k, r, p):
    """Multiplicity-side block dimension of the partition algebra model:
    involutions with p fixed points among r points, against the stable sums.

    Integer levels only; requires 0 <= p <= r <= k and r - p even.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"need an integer level k >= 0, got {k!r}")
    if not 0 <= p <= r <= k:
        raise ValueError(f"need 0 <= p <= r <= k, got p={p}, r={r}, k={k}")
    if (r - p) % 2:
        raise ValueError(f"r - p must be even, got r={r}, p={p}")
    matchings = involutions_with_fixed_points(r, p)
    return matchings * sum(binomial(t, r) * stirling2(k, t) for t in range(r, k + 1))


def block_dimension(ctx, label):
    """Dispatch to the right dimension function for (ctx, label)."""
    n, k = ctx.n, ctx.k
    if ctx.group == "S":
        table = {
            ("perm", False): dim_z,
            ("perm", True): dim_z_half,
            ("refl", False): dim_qz,
            ("refl", True): dim_qz_half,
        }
    else:
        table = {
            ("perm", False): dim_z_alt,
            ("perm", True): dim_z_alt_half,
            ("refl", False): dim_qz_alt,
            ("refl", True): dim_qz_alt_half,
        }
    return table[(ctx.module, ctx.half)](n, k, label)


def labels_for(ctx):
    """All candidate labels at ctx's level, in display order."""
    if ctx.group == "S":
        return list(partitions_of(ctx.label_size))
    return alt_labels(ctx.label_size)


def decompose(ctx):
    """Nonzero blocks of the ctx algebra as (label, dimension) pairs.

    Labels with multiplicity 0 are dropped; order is decreasing
    lexicographic on the base partition, unsigned then '+' then '-'.
    """
    out = []
    for label in labels_for(ctx):
        d = block_dimension(ctx, label)
        if d:
            out.append((label, d))
    return out
