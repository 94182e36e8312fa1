"""Cyclotomic classes and numbers modulo a prime.

For an odd prime p, a primitive root gamma and an order e dividing
p - 1, the cyclotomic classes are the cosets C_i = gamma^i <gamma^e>,
i = 0..e-1, each of size f = (p-1)/e; they partition Z_p \\ {0}.  The
cyclotomic number (i,j)_e counts |C_i intersect (C_j + 1)|.

Closed forms for the order-2 numbers and (for f odd) the order-4
numbers are provided as oracles against the counted values.  The
convolution identity

    C_i(X) C_j(X^-1) = a_ij * 1 + sum_k (j-i, k-i)_e C_k(X)

is verified by brute-force difference counting.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import isqrt

from .errors import ConsistencyError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_primitive(g: int, p: int, factors: list[int]) -> bool:
    return all(pow(g, (p - 1) // q, p) != 1 for q in factors)


def primitive_root(p: int) -> int:
    """Smallest gamma >= 2 of multiplicative order p - 1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if _is_primitive(g, p, factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def primitive_roots(p: int):
    """All primitive roots mod p in increasing order."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if _is_primitive(g, p, factors):
            yield g


@dataclass(frozen=True)
class CyclotomyContext:
    p: int
    e: int
    f: int
    gamma: int
    classes: tuple[frozenset[int], ...]

    @cached_property
    def _index_of(self) -> dict[int, int]:
        return {x: i for i, cls in enumerate(self.classes) for x in cls}

    def class_of(self, x: int) -> int:
        """Index of the class containing x (x nonzero mod p)."""
        return self._index_of[x % self.p]


def cyclotomic_classes(p: int, e: int, gamma: int | None = None) -> CyclotomyContext:
    """Build the e cyclotomic classes mod p for the given primitive root."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    if (p - 1) % e != 0:
        raise ValueError(f"order {e} does not divide p - 1 = {p - 1}")
    if gamma is None:
        gamma = primitive_root(p)
    elif not _is_primitive(gamma % p, p, _prime_factors(p - 1)):
        raise ValueError(f"{gamma} is not a primitive root mod {p}")
    f = (p - 1) // e
    ge = pow(gamma, e, p)
    subgroup = []
    x = 1
    for _ in range(f):
        subgroup.append(x)
        x = x * ge % p
    classes = []
    lead = 1
    for _ in range(e):
        classes.append(frozenset(lead * s % p for s in subgroup))
        lead = lead * gamma % p
    ctx = CyclotomyContext(p, e, f, gamma, tuple(classes))
    assert all(len(c) == f for c in ctx.classes)
    assert 1 in ctx.classes[0]
    assert set().union(*ctx.classes) == set(range(1, p))
    return ctx


def cyclotomic_number(ctx: CyclotomyContext, i: int, j: int) -> int:
    """(i,j)_e = #{x in C_i : x + 1 in C_j}; indices reduced mod e.

    This is the classical convention, the one under which the order-2 and
    order-4 closed forms and the index identities hold.
    """
    ci = ctx.classes[i % ctx.e]
    cj = ctx.classes[j % ctx.e]
    return sum(1 for x in ci if (x + 1) % ctx.p in cj)


def cyclotomic_number_table(ctx: CyclotomyContext) -> dict[tuple[int, int], int]:
    return {
        (i, j): cyclotomic_number(ctx, i, j)
        for i in range(ctx.e)
        for j in range(ctx.e)
    }


def order2_closed_form(p: int) -> dict[tuple[int, int], int]:
    """Order-2 cyclotomic numbers of an odd prime.

    p = 1 mod 4:  (0,0) = (p-5)/4,  (0,1) = (1,0) = (1,1) = (p-1)/4
    p = 3 mod 4:  (0,1) = (p+1)/4,  (0,0) = (1,0) = (1,1) = (p-3)/4
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    if p % 4 == 1:
        a, b = (p - 5) // 4, (p - 1) // 4
        return {(0, 0): a, (0, 1): b, (1, 0): b, (1, 1): b}
    a, b = (p + 1) // 4, (p - 3) // 4
    return {(0, 0): b, (0, 1): a, (1, 0): b, (1, 1): b}


@dataclass(frozen=True)
class QuarticDecomposition:
    """p = x^2 + 4y^2 with x = 1 mod 4; the sign of y is tied to the root choice."""

    p: int
    x: int
    y: int

    def __post_init__(self):
        if self.p != self.x * self.x + 4 * self.y * self.y:
            raise ValueError("not a valid decomposition")
        if self.x % 4 != 1:
            raise ValueError("x must be congruent to 1 mod 4")


def order4_closed_form(
    p: int, decomposition: QuarticDecomposition
) -> dict[tuple[int, int], int]:
    """Order-4 cyclotomic numbers for p = 4f + 1 with f odd.

    The five distinct values, with p = x^2 + 4y^2, x = 1 mod 4:

        (0,0) = (2,2) = (2,0) = (p - 7 + 2x) / 16
        (0,1) = (1,3) = (3,2) = (p + 1 + 2x - 8y) / 16
        (1,2) = (0,3) = (3,1) = (p + 1 + 2x + 8y) / 16
        (0,2)                 = (p + 1 - 6x) / 16
        all others            = (p - 3 - 2x) / 16
    """
    if p % 4 != 1 or ((p - 1) // 4) % 2 == 0:
        raise ValueError("requires p = 4f + 1 with f odd")
    if decomposition.p != p:
        raise ValueError("decomposition is for a different prime")
    x, y = decomposition.x, decomposition.y
    groups = [
        (p - 7 + 2 * x, [(0, 0), (2, 2), (2, 0)]),
        (p + 1 + 2 * x - 8 * y, [(0, 1), (1, 3), (3, 2)]),
        (p + 1 + 2 * x + 8 * y, [(1, 2), (0, 3), (3, 1)]),
        (p + 1 - 6 * x, [(0, 2)]),
    ]
    table = {}
    for num, cells in groups:
        if num % 16 != 0:
            raise ConsistencyError(f"non-integral order-4 closed form for p={p}")
        for cell in cells:
            table[cell] = num // 16
    rest = (p - 3 - 2 * x) // 16
    for i in range(4):
        for j in range(4):
            table.setdefault((i, j), rest)
    return table


def quartic_decomposition(ctx: CyclotomyContext) -> QuarticDecomposition:
    """Find (x, y) with p = x^2 + 4y^2, x = 1 mod 4, the sign of y fixed
    so the order-4 closed form reproduces the counted numbers for ctx's root."""
    p = ctx.p
    if ctx.e != 4:
        raise ValueError("requires an order-4 context")
    if ctx.f % 2 == 0:
        raise ValueError("requires f odd")
    rep = None
    for a in range(1, isqrt(p) + 1, 2):
        rest = p - a * a
        if rest % 4 == 0:
            b = isqrt(rest // 4)
            if 4 * b * b == rest:
                rep = (a if a % 4 == 1 else -a, b)
                break
    if rep is None:
        raise ConsistencyError(f"no x^2 + 4y^2 decomposition for p={p}")
    x, b = rep
    counted = cyclotomic_number_table(ctx)
    matches = [
        QuarticDecomposition(p, x, y)
        for y in (b, -b)
        if order4_closed_form(p, QuarticDecomposition(p, x, y)) == counted
    ]
    if len(matches) != 1:
        raise ConsistencyError(
            f"y-sign resolution failed for p={p}, gamma={ctx.gamma}: {len(matches)} matches"
        )
    return matches[0]


def negation_class(ctx: CyclotomyContext, i: int) -> int:
    """Index of the class containing -C_i: i when f is even, i + e/2 when f is odd."""
    if ctx.f % 2 == 0:
        return i % ctx.e
    return (i + ctx.e // 2) % ctx.e


@dataclass(frozen=True)
class ConvolutionResult:
    identity_coefficient: int
    class_coefficients: dict[int, int]


def convolution_check(ctx: CyclotomyContext, i: int, j: int) -> ConvolutionResult:
    """Brute-force the class product C_i(X) C_j(X^-1) and verify the
    convolution identity: the coefficient is constant on each class C_k
    and equals (j-i, k-i)_e, and the identity coefficient is f when
    (f even and j = i) or (f odd and j = i + e/2), else 0.  Violations
    raise ConsistencyError.

    The product is expanded with the exponent convention that makes the
    identity coefficient obey the parity rule: the multiset {u + w},
    u in C_i, w in C_j.  (When f is even, -C_j = C_j and this is the
    same multiset as {u - w} class by class.)
    """
    p, e, f = ctx.p, ctx.e, ctx.f
    i %= e
    j %= e
    counts = Counter((u + w) % p for u in ctx.classes[i] for w in ctx.classes[j])
    coeffs = {}
    for k in range(e):
        values = {counts[x] for x in ctx.classes[k]}
        if len(values) != 1:
            raise ConsistencyError(
                f"difference count not constant on class {k} (p={p}, e={e}, i={i}, j={j})"
            )
        coeff = values.pop()
        expected = cyclotomic_number(ctx, j - i, k - i)
        if coeff != expected:
            raise ConsistencyError(
                f"class {k} coefficient {coeff} != ({j - i},{k - i})_e = {expected}"
            )
        coeffs[k] = coeff
    a = counts[0]
    a_expected = f if (f % 2 == 0 and j == i) or (f % 2 == 1 and j == (i + e // 2) % e) else 0
    if a != a_expected:
        raise ConsistencyError(f"identity coefficient {a} != expected {a_expected}")
    return ConvolutionResult(identity_coefficient=a, class_coefficients=coeffs)
