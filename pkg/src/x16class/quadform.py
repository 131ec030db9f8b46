"""Binary quadratic forms of negative discriminant.

Reduction, Gauss/Dirichlet composition, enumeration of reduced forms, class
numbers, abelian group structure (elementary divisors) and the genus-theory
2-rank.  Everything is exact; the only performance-sensitive entry point is
class_number, which dispatches to a JIT kernel for large discriminants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt

from . import arith
from .arith import FactorBudget, DEFAULT_BUDGET
from .errors import DiscriminantMismatch, IncompleteFactorization


@dataclass(frozen=True)
class QuadForm:
    """Positive definite form a x^2 + b xy + c y^2 with b^2 - 4ac < 0."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.disc >= 0:
            raise ValueError(f"form {self} is not positive definite")

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return abs(b) <= a <= c and (b >= 0 or (abs(b) < a and a < c))

    def inverse(self) -> "QuadForm":
        return QuadForm(self.a, -self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def principal_form(disc: int) -> QuadForm:
    b0 = disc & 1
    return QuadForm(1, b0, (b0 * b0 - disc) // 4)


def reduce_form(f: QuadForm) -> QuadForm:
    """Gauss reduction: normalize b into (-a, a], swap while a > c."""
    a, b, c = f.a, f.b, f.c
    while True:
        if a > c:
            a, b, c = c, -b, a
            continue
        if b > a or b <= -a:
            # translate b into (-a, a]
            k = (a - b) // (2 * a)
            b2 = b + 2 * k * a
            c = c + k * b + k * k * a
            b = b2
            continue
        break
    if (b == -a) or (a == c and b < 0):
        b = -b
    return QuadForm(a, b, c)


def solve_linear_mod(a: int, b: int, m: int) -> tuple[int, int]:
    """Solutions of a*x = b (mod m) as x0 + m0*Z; requires gcd(a,m) | b."""
    g = gcd(a, m)
    if b % g:
        raise ValueError(f"{a}*x = {b} (mod {m}) has no solution")
    m0 = m // g
    x0 = (b // g) * pow((a // g) % m0, -1, m0) % m0 if m0 > 1 else 0
    return x0, m0


def _compose_raw(f: QuadForm, g: QuadForm) -> tuple[int, int, int]:
    """Gauss composition without the final reduction.

    Returns (a3, b3, w): the (not necessarily reduced) form (a3, b3, *) is
    the primitive part of the product of the corresponding ideal lattices
    a Z + ((b+sqrt(disc))/2) Z, and w = gcd(a1, a2, (b1+b2)/2) is the
    integer content, so the lattice product is exactly
    w * (a3 Z + ((b3+sqrt(disc))/2) Z) with a3 = a1*a2/w^2.
    """
    if f.disc != g.disc:
        raise DiscriminantMismatch(f"{f.disc} != {g.disc}")
    a1, b1, c1 = f.a, f.b, f.c
    a2, b2 = g.a, g.b
    gg = (b2 + b1) // 2
    h = (b2 - b1) // 2
    w = gcd(gcd(a1, a2), gg)
    s = a1 // w
    t = a2 // w
    u = gg // w
    k0, step = solve_linear_mod(t * u, h * u + s * c1, s * t)
    n, _ = solve_linear_mod(t * step, h - t * k0, s)
    k = k0 + step * n
    l = (t * k - h) // s
    m = (t * u * k - h * u - s * c1) // (s * t)
    a3 = s * t
    b3 = (w * u - k * t - l * s) % (2 * a3)
    return a3, b3, w


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Reduced representative of the product class."""
    a3, b3, _ = _compose_raw(f, g)
    if b3 > a3:
        b3 -= 2 * a3
    return reduce_form(QuadForm(a3, b3, (b3 * b3 - f.disc) // (4 * a3)))


def form_pow(f: QuadForm, k: int) -> QuadForm:
    """k-th power in the class group (k may be negative)."""
    if k < 0:
        return form_pow(f.inverse(), -k)
    result = principal_form(f.disc)
    base = reduce_form(f)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def _check_disc(disc: int):
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"{disc} is not a negative discriminant")


@lru_cache(maxsize=65536)
def _check_fundamental_disc(disc: int):
    """Counting and composition assume a maximal order: disc = 1 mod 4
    squarefree, or 4d with d = 2, 3 mod 4 squarefree."""
    _check_disc(disc)
    d = disc if disc % 4 == 1 else disc // 4
    if disc % 4 == 0 and d % 4 not in (2, 3):
        raise ValueError(f"{disc} is not a fundamental discriminant")
    if arith.squarefree_part(d).m != 1:
        raise ValueError(f"{disc} is not a fundamental discriminant")


def enumerate_reduced(disc: int) -> list[QuadForm]:
    """All reduced forms of the given negative discriminant.

    Loops over b of the right parity and splits (b^2 - disc)/4 = a*c over
    divisor pairs; intended for |disc| up to ~10^7 (class_number scales
    further).
    """
    _check_disc(disc)
    D = -disc
    forms = []
    bmax = isqrt(D // 3)
    for b in range(disc & 1, bmax + 1, 2):
        m = (b * b + D) // 4
        a = max(b, 1)
        while a * a <= m:
            if m % a == 0:
                c = m // a
                # reduced: |b| <= a <= c with sign convention
                forms.append(QuadForm(a, b, c))
                if b != 0 and a != b and a != c:
                    forms.append(QuadForm(a, -b, c))
            a += 1
    forms.sort(key=lambda f: (f.a, f.b))
    return forms


def _count_reduced_python(disc: int) -> int:
    """Pure-Python twin of the JIT kernel: per-a modular square roots."""
    D = -disc
    h = 0
    amax = isqrt(D // 3)
    for a in range(1, amax + 1):
        # factor 4a
        rem = a
        e2 = 2
        while rem % 2 == 0:
            rem //= 2
            e2 += 1
        # roots of x^2 = disc (mod 2^e2) by bit lifting
        mod = 2
        roots = [x for x in range(2) if (x * x + D) % 2 == 0]
        e = 1
        while e < e2 and roots:
            e += 1
            mod <<= 1
            half = mod >> 1
            nxt = set()
            for x in roots:
                for add in (0, half):
                    xx = x + add
                    if (xx * xx + D) % mod == 0:
                        nxt.add(xx)
            roots = sorted(nxt)
        if not roots:
            continue
        ok = True
        rem_odd = rem
        f = 2
        odd_blocks = []
        while f * f <= rem_odd:
            if rem_odd % f == 0:
                e = 0
                while rem_odd % f == 0:
                    rem_odd //= f
                    e += 1
                odd_blocks.append((f, e))
            f += 1
        if rem_odd > 1:
            odd_blocks.append((rem_odd, 1))
        for p, e in odd_blocks:
            r = arith.sqrt_mod_prime((-D) % p, p)
            if r is None:
                ok = False
                break
            if r == 0:
                if e >= 2:
                    ok = False
                    break
                pe, prts = p, [0]
            else:
                pe = p**e
                if e > 1:
                    r = arith.lift_sqrt_odd(-D, p, e)
                prts = [r, pe - r]
            inv = pow(mod % pe, -1, pe)
            roots = [
                x + mod * (((rt - x) % pe) * inv % pe)
                for x in roots
                for rt in prts
            ]
            mod *= pe
        if not ok or not roots:
            continue
        twoa, foura = 2 * a, 4 * a
        seen = set()
        for x in roots:
            b = x % twoa
            if b > a:
                b -= twoa
            if b in seen:
                continue
            seen.add(b)
            num = b * b + D
            if num % foura:
                continue
            c = num // foura
            if c < a or (c == a and b < 0):
                continue
            h += 1
    return h


@lru_cache(maxsize=65536)
def class_number(disc: int) -> int:
    """Class number h(disc) for a fundamental negative discriminant."""
    _check_fundamental_disc(disc)
    try:
        from ._kernels import HAVE_NUMBA, class_number_numba

        if HAVE_NUMBA and -disc < 2**62:
            return class_number_numba(disc)
    except ImportError:  # pragma: no cover
        pass
    return _count_reduced_python(disc)


@dataclass
class ClassGroup:
    disc: int
    reduced_forms: list[QuadForm]
    h: int
    elementary_divisors: list[int] = field(default_factory=list)


def class_group(disc: int) -> ClassGroup:
    _check_fundamental_disc(disc)
    forms = enumerate_reduced(disc)
    cg = ClassGroup(disc, forms, len(forms))
    cg.elementary_divisors = group_structure(cg)
    return cg


def form_order(f: QuadForm, h: int) -> int:
    """Order of the class of f in a group of order h."""
    one = principal_form(f.disc)
    f = reduce_form(f)
    for k in sorted(_divisors(h)):
        if form_pow(f, k) == one:
            return k
    raise AssertionError("element order does not divide group order")


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def group_structure(cg: ClassGroup) -> list[int]:
    """Elementary divisors d1 | d2 | ... of the class group.

    For each prime p | h the p-Sylow type is read off from the counts
    #{x : x^(p^k) = 1}; the partitions are then merged into one chain.
    """
    h = cg.h
    if h == 1:
        return []
    one = principal_form(cg.disc)
    hfac = arith.factor(h)
    if not hfac.complete:
        raise IncompleteFactorization(f"cannot factor group order {h}")
    partitions: dict[int, list[int]] = {}
    for p, e in hfac.factors:
        # counts[k] = number of classes killed by p^k
        counts = [1]
        for k in range(1, e + 1):
            pk = p**k
            counts.append(sum(1 for f in cg.reduced_forms if form_pow(f, pk) == one))
        # lam[k-1] = #{cyclic p-factors of order >= p^k} (conjugate partition)
        lam = [_plog(counts[k], p) - _plog(counts[k - 1], p) for k in range(1, e + 1)]
        sizes = [p ** sum(1 for r in lam if r > i) for i in range(lam[0] if lam else 0)]
        partitions[p] = sorted(sizes, reverse=True)
    nfac = max((len(v) for v in partitions.values()), default=0)
    chain = []
    for i in range(nfac):
        d = 1
        for p, sizes in partitions.items():
            if i < len(sizes):
                d *= sizes[i]
        chain.append(d)
    chain.reverse()  # ascending divisibility chain d1 | d2 | ...
    assert _prod(chain) == h
    return chain


def _plog(n: int, p: int) -> int:
    v = 0
    while n % p == 0 and n > 1:
        n //= p
        v += 1
    return v


def _prod(xs) -> int:
    r = 1
    for x in xs:
        r *= x
    return r


def two_rank_genus(d: int, effort: FactorBudget = DEFAULT_BUDGET) -> int:
    """Genus-theory 2-rank of the (narrow = ordinary) class group of
    Q(sqrt(d)) for squarefree d < 0: one less than the number of ramified
    primes, i.e. the distinct primes of the fundamental discriminant.

    For d = 1 mod 4 and even d these are exactly the primes of d; for
    d = 3 mod 4 the prime 2 ramifies as well and must be counted.
    """
    if d >= 0:
        raise ValueError("d must be negative")
    f = arith.factor(d, effort)
    if not f.complete:
        raise IncompleteFactorization(f"cannot factor {d}")
    if any(e > 1 for _, e in f.factors):
        raise ValueError(f"{d} is not squarefree")
    n = len(f.factors)
    if d % 4 == 3:  # negative d = 3 mod 4 in Python is d % 4 == 3
        n += 1
    return n - 1


def two_rank_of_group(cg: ClassGroup) -> int:
    """Exact 2-rank via counting ambiguous classes (order dividing 2)."""
    one = principal_form(cg.disc)
    amb = sum(1 for f in cg.reduced_forms if compose(f, f) == one)
    r = amb.bit_length() - 1
    assert 1 << r == amb, "ambiguous class count must be a power of 2"
    return r
