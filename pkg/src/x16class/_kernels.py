"""Optional numba-accelerated class-number kernel.

Counts reduced positive-definite forms of a negative discriminant by, for
each a up to sqrt(|D|/3), enumerating the square roots of D modulo 4a
(2-adic lifting at 2, Tonelli-Shanks plus Hensel at odd primes, CRT fold).
A pure-Python twin lives in quadform; this file only wins on speed and is
skipped entirely when numba is unavailable.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


@njit(cache=True)
def _build_spf(limit):
    spf = np.zeros(limit + 1, dtype=np.int32)
    i = 2
    while i * i <= limit:
        if spf[i] == 0:
            for j in range(i * i, limit + 1, i):
                if spf[j] == 0:
                    spf[j] = i
        i += 1
    for j in range(2, limit + 1):
        if spf[j] == 0:
            spf[j] = j
    return spf


@njit(cache=True)
def _powmod(b, e, m):
    r = 1
    b %= m
    while e > 0:
        if e & 1:
            r = (r * b) % m
        b = (b * b) % m
        e >>= 1
    return r


@njit(cache=True)
def _invmod(a, m):
    g, x = m, 0
    a %= m
    r, s = a, 1
    while r != 0:
        q = g // r
        g, r = r, g - q * r
        x, s = s, x - q * s
    return x % m


@njit(cache=True)
def _sqrt_mod_p(a, p):
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if _powmod(a, (p - 1) // 2, p) != 1:
        return -1
    if p % 4 == 3:
        return _powmod(a, (p + 1) // 4, p)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _powmod(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m = s
    c = _powmod(z, q, p)
    t = _powmod(a, q, p)
    r = _powmod(a, (q + 1) // 2, p)
    while t != 1:
        t2 = (t * t) % p
        i = 1
        while t2 != 1:
            t2 = (t2 * t2) % p
            i += 1
        b = c
        for _ in range(m - i - 1):
            b = (b * b) % p
        m = i
        c = (b * b) % p
        t = (t * c) % p
        r = (r * b) % p
    return r


@njit(cache=True)
def _class_number_kernel(D, spf, root_cache):
    """Number of reduced forms of discriminant -D (D > 0)."""
    amax = np.int64(np.sqrt(D / 3.0)) + 2
    while amax * amax * 3 > D:
        amax -= 1
    h = np.int64(0)
    cur = np.empty(1024, dtype=np.int64)
    nxt = np.empty(1024, dtype=np.int64)
    for a in range(1, amax + 1):
        rem = a
        e2 = 2
        while rem & 1 == 0:
            rem >>= 1
            e2 += 1
        ok = True
        # roots of x^2 = -D mod 2^e2, built bit by bit
        mod = 2
        ncur = 0
        for x in range(2):
            if (x * x + D) % 2 == 0:
                cur[ncur] = x
                ncur += 1
        e = 1
        while e < e2 and ncur > 0:
            e += 1
            mod <<= 1
            half = mod >> 1
            m2 = 0
            for i in range(ncur):
                for add in range(2):
                    xx = cur[i] + add * half
                    if (xx * xx + D) % mod == 0:
                        dup = False
                        for j in range(m2):
                            if nxt[j] == xx:
                                dup = True
                                break
                        if not dup:
                            nxt[m2] = xx
                            m2 += 1
            for j in range(m2):
                cur[j] = nxt[j]
            ncur = m2
        if ncur == 0:
            continue
        while rem > 1:
            p = np.int64(spf[rem])
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            r = root_cache[p]
            if r == -2:
                r = _sqrt_mod_p((p - D % p) % p, p)
                root_cache[p] = r
            if r == -1:
                ok = False
                break
            if r == 0:
                # ramified: a single root 0 mod p, none mod p^2
                if e >= 2:
                    ok = False
                    break
                pe = p
                nr = 1
            else:
                pe = p
                for _ in range(e - 1):
                    pe *= p
                if e > 1:
                    rr = r
                    m_ = p
                    while m_ < pe:
                        m2_ = m_ * p
                        fx = (rr * rr + D) % m2_
                        rr = (rr - fx * _invmod(2 * rr, m2_)) % m2_
                        m_ = m2_
                    r = rr % pe
                nr = 2
            inv = _invmod(mod % pe, pe)
            m2 = 0
            for i in range(ncur):
                x = cur[i]
                for sgn in range(nr):
                    rt = r if sgn == 0 else pe - r
                    k = ((rt - x) % pe) * inv % pe
                    nxt[m2] = x + mod * k
                    m2 += 1
            mod *= pe
            for j in range(m2):
                cur[j] = nxt[j]
            ncur = m2
        if not ok or ncur == 0:
            continue
        # roots come in pairs x, x+2a with the same b mod 2a: dedupe on b
        twoa = 2 * a
        foura = 4 * a
        nb = 0
        for i in range(ncur):
            b = cur[i] % twoa
            if b > a:
                b -= twoa
            dup = False
            for j in range(nb):
                if nxt[j] == b:
                    dup = True
                    break
            if dup:
                continue
            nxt[nb] = b
            nb += 1
            num = b * b + D
            if num % foura != 0:
                continue
            c = num // foura
            if c < a:
                continue
            if c == a and b < 0:
                continue
            h += 1
    return h


_SPF = None
_SPF_LIMIT = 0
_ROOT_CACHE = None


def class_number_numba(disc: int) -> int:
    """h(disc) for disc < 0 via the JIT kernel.  Raises on overflow risk."""
    global _SPF, _SPF_LIMIT, _ROOT_CACHE
    D = -disc
    if D >= 2**62:
        raise OverflowError("discriminant too large for the int64 kernel")
    amax = int((D // 3) ** 0.5) + 2
    if amax > _SPF_LIMIT:
        limit = max(amax + 16, 1 << 17)
        _SPF = _build_spf(limit)
        _SPF_LIMIT = limit
        _ROOT_CACHE = np.empty(limit + 1, dtype=np.int64)
    _ROOT_CACHE.fill(-2)
    return int(_class_number_kernel(np.int64(D), _SPF, _ROOT_CACHE))
