"""Generators for the defining sets behind every construction family.

Families (all yield special sets; the promised class refers to the
s-optimality of the resulting circulant):

    paley-a        QR(p) + {0}, p = 3 mod 4            DS,  near s-optimal
    singer-b       m-sequence support, period 2^t - 1  DS,  near s-optimal
    twin-prime-c   twin primes p, p+2                  DS,  near s-optimal
    hall-d         sextic classes 0,1,3 + {0},
                   p = 4s^2 + 27                       DS,  near s-optimal
    qr-plus0       QR(p) + {0}, p = 1 mod 4            ADS, s-optimal
    qnr            nonresidues, p = 1 mod 4            ADS, near s-optimal
    z4p            quadratic classes glued into Z_4p   ADS, s-optimal
    quartic-plus0  C_i + C_{i+1} + {0}, quartic        ADS, s-optimal
    quartic        C_i + C_{i+1}, quartic              ADS, near s-optimal
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomy import (
    cyclotomic_classes,
    is_prime,
    primitive_roots,
    quartic_decomposition,
)
from .designs import DesignClass, ResidueSet, classify
from .errors import ConsistencyError

# Primitive polynomials over GF(2), degree t as bit t down to the constant
# term; each is verified to give a maximal-period LFSR by the test suite.
PRIMITIVE_POLYS: dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


def m_sequence(t: int) -> list[int]:
    """One period (length 2^t - 1) of the maximal LFSR for PRIMITIVE_POLYS[t]."""
    if t not in PRIMITIVE_POLYS:
        raise ValueError(f"no primitive polynomial tabulated for t={t}")
    taps = PRIMITIVE_POLYS[t] >> 1
    state = 1
    out = []
    for _ in range((1 << t) - 1):
        bit = state & 1
        out.append(bit)
        state >>= 1
        if bit:
            state ^= taps
    return out


def quadratic_residues(p: int) -> set[int]:
    return {x * x % p for x in range(1, p)}


def paley_a(p: int) -> ResidueSet:
    """QR(p) with 0 adjoined, p prime, p = 3 mod 4."""
    if not is_prime(p) or p % 4 != 3:
        raise ValueError(f"paley-a requires a prime p = 3 mod 4, got {p}")
    return ResidueSet.of(p, quadratic_residues(p) | {0})


def singer_b(t: int) -> ResidueSet:
    """Support of one m-sequence period: a cyclic (2^t-1, 2^{t-1}, .) difference set."""
    if t < 3:
        raise ValueError("requires t >= 3")
    seq = m_sequence(t)
    return ResidueSet.of(len(seq), {i for i, b in enumerate(seq) if b})


def twin_prime_c(p: int) -> ResidueSet:
    """Twin-prime set in Z_{p(p+2)} via n -> (n mod p, n mod p+2).

    Membership: both coordinates nonzero with opposite quadratic
    character, or first coordinate 0 and second nonzero.
    """
    q = p + 2
    if not (is_prime(p) and is_prime(q)):
        raise ValueError(f"twin-prime-c requires p and p+2 prime, got {p}")
    sq_p = quadratic_residues(p)
    sq_q = quadratic_residues(q)
    elems = []
    for n in range(p * q):
        g, h = n % p, n % q
        if g and h:
            if (g in sq_p) != (h in sq_q):
                elems.append(n)
        elif g == 0 and h != 0:
            elems.append(n)
    return ResidueSet.of(p * q, elems)


def hall_d(p: int) -> ResidueSet:
    """Sextic-class set C_c + C_{c+1} + C_{c+3} + {0} for p = 4s^2 + 27.

    The class labeling depends on the primitive root, so roots and index
    rotations are searched until the (p, (p+1)/2, (p+1)/4) difference-set
    parameters verify.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s = 1
    while 4 * s * s + 27 < p:
        s += 1
    if 4 * s * s + 27 != p:
        raise ValueError(f"{p} is not of the form 4s^2 + 27")
    if (p - 1) % 6 != 0:
        raise ValueError(f"6 does not divide p - 1 for p={p}")
    target = DesignClass("difference-set", p, (p + 1) // 2, lam=(p + 1) // 4)
    for gamma in primitive_roots(p):
        ctx = cyclotomic_classes(p, 6, gamma)
        for c in range(6):
            elems = (
                {0}
                | ctx.classes[c]
                | ctx.classes[(c + 1) % 6]
                | ctx.classes[(c + 3) % 6]
            )
            D = ResidueSet.of(p, elems)
            if classify(D) == target:
                return D
    raise ConsistencyError(f"no class labeling yields the required design for p={p}")


def qr_variants(p: int, with_zero: bool) -> ResidueSet:
    """QR(p) + {0} (with_zero) or the nonresidues, p prime, p = 1 mod 4."""
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"requires a prime p = 1 mod 4, got {p}")
    qr = quadratic_residues(p)
    if with_zero:
        return ResidueSet.of(p, qr | {0})
    return ResidueSet.of(p, set(range(1, p)) - qr)


def z4p_ads(p: int) -> ResidueSet:
    """The (4p, 2p+1, p, p-1) almost difference set in Z_{4p}, p = 3 mod 4.

    ({0} x QR) + ({1,2,3} x QNR) + {(0,0), (1,0), (3,0)} inside
    Z_4 x Z_p, glued into Z_{4p} by the Chinese remainder isomorphism
    n -> (n mod 4, n mod p).
    """
    if not is_prime(p) or p % 4 != 3:
        raise ValueError(f"z4p requires a prime p = 3 mod 4, got {p}")
    qr = quadratic_residues(p)
    qnr = set(range(1, p)) - qr
    v = 4 * p
    inv_p = pow(p, -1, 4)
    inv_4 = pow(4, -1, p)

    def glue(a: int, b: int) -> int:
        return (a * p * inv_p + b * 4 * inv_4) % v

    elems = {glue(0, b) for b in qr}
    elems |= {glue(a, b) for a in (1, 2, 3) for b in qnr}
    elems |= {glue(0, 0), glue(1, 0), glue(3, 0)}
    return ResidueSet.of(v, elems)


def quartic_union(p: int, i: int = 0, with_zero: bool = False) -> ResidueSet:
    """C_i + C_{i+1} of order 4 (optionally with 0), under a primitive root
    whose quartic decomposition has y = -1.

    Requires p = 4f + 1 prime with f odd and p = x^2 + 4; roots are searched
    in increasing order until the y = -1 convention holds.
    """
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"requires a prime p = 1 mod 4, got {p}")
    f = (p - 1) // 4
    if f % 2 == 0:
        raise ValueError(f"requires (p-1)/4 odd, got p={p}")
    root = None
    x2 = p - 4
    if int(x2**0.5 + 0.5) ** 2 != x2:
        raise ValueError(f"p={p} has no x^2 + 4y^2 decomposition with y = +-1")
    for gamma in primitive_roots(p):
        ctx = cyclotomic_classes(p, 4, gamma)
        if quartic_decomposition(ctx).y == -1:
            root = ctx
            break
    if root is None:
        raise ConsistencyError(f"no primitive root mod {p} gives y = -1")
    elems = set(root.classes[i % 4]) | set(root.classes[(i + 1) % 4])
    if with_zero:
        elems.add(0)
    return ResidueSet.of(p, elems)


FAMILIES = (
    "paley-a",
    "singer-b",
    "twin-prime-c",
    "hall-d",
    "qr-plus0",
    "qnr",
    "z4p",
    "quartic",
    "quartic-plus0",
)

# s-optimality class each family's defining theorem promises.
PROMISED_CLASS = {
    "paley-a": "near-s-optimal",
    "singer-b": "near-s-optimal",
    "twin-prime-c": "near-s-optimal",
    "hall-d": "near-s-optimal",
    "qr-plus0": "s-optimal",
    "qnr": "near-s-optimal",
    "z4p": "s-optimal",
    "quartic": "near-s-optimal",
    "quartic-plus0": "s-optimal",
}


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    p: int | None = None
    t: int | None = None
    index: int = 0
    with_zero: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "singer-b":
            if self.t is None:
                raise ValueError("singer-b requires t")
        elif self.p is None:
            raise ValueError(f"{self.family} requires p")

    def describe(self) -> str:
        arg = f"t={self.t}" if self.family == "singer-b" else f"p={self.p}"
        if self.family in ("quartic", "quartic-plus0"):
            arg += f", i={self.index}"
        return f"{self.family}({arg})"


def generate(spec: ConstructionSpec) -> ResidueSet:
    if spec.family == "paley-a":
        return paley_a(spec.p)
    if spec.family == "singer-b":
        return singer_b(spec.t)
    if spec.family == "twin-prime-c":
        return twin_prime_c(spec.p)
    if spec.family == "hall-d":
        return hall_d(spec.p)
    if spec.family == "qr-plus0":
        return qr_variants(spec.p, with_zero=True)
    if spec.family == "qnr":
        return qr_variants(spec.p, with_zero=False)
    if spec.family == "z4p":
        return z4p_ads(spec.p)
    if spec.family == "quartic":
        return quartic_union(spec.p, spec.index, with_zero=False)
    if spec.family == "quartic-plus0":
        return quartic_union(spec.p, spec.index, with_zero=True)
    raise AssertionError("unreachable")
