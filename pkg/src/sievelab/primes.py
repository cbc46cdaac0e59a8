"""Prime tables, deterministic primality, and small-number factorization.

Everything here is desk scale: tables up to ~10**7 and primality below 2**64
(the Miller-Rabin base set used is deterministic far beyond that).
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right

import numpy as np

_table_limit = 0
_prime_list: list[int] = []


def _extend(limit: int) -> None:
    global _table_limit, _prime_list
    if limit <= _table_limit:
        return
    limit = max(limit, 2 * _table_limit, 1 << 10)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    _prime_list = np.flatnonzero(sieve).tolist()
    _table_limit = limit


def primes_between(lo: float, hi: float, *, closed: bool = False) -> list[int]:
    """Primes p with lo <= p < hi, or lo <= p <= hi when ``closed``."""
    if hi < 2:
        return []
    _extend(int(math.floor(hi)) + 1)
    start = bisect_left(_prime_list, max(2, int(math.ceil(lo))))
    stop = bisect_right(_prime_list, int(math.floor(hi)))
    out = []
    for p in _prime_list[start:stop]:
        if p < lo:
            continue
        if (p <= hi) if closed else (p < hi):
            out.append(p)
    return out


def primes_upto(limit: int) -> list[int]:
    """Primes p <= limit."""
    return primes_between(2, limit, closed=True)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def spf_table(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (entries 0, 1 map to 1)."""
    spf = np.arange(limit + 1, dtype=np.int64)
    if limit >= 1:
        spf[1] = 1
    if limit >= 0:
        spf[0] = 1
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            idx = np.arange(p * p, limit + 1, p)
            unset = spf[idx] == idx
            spf[idx[unset]] = p
    return spf


def factorize(n: int, spf: np.ndarray | None = None) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, exponent), ...], p increasing."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: list[tuple[int, int]] = []
    if spf is not None and n < len(spf):
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out
    m = n
    _extend(min(max(1 << 10, math.isqrt(n) + 1), 1 << 22))
    for p in _prime_list:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    if m > 1:
        if not is_prime(m):
            raise ValueError(f"cofactor {m} out of trial-division range")
        out.append((m, 1))
    return sorted(out)


def is_squarefree(n: int, spf: np.ndarray | None = None) -> bool:
    return all(e == 1 for _, e in factorize(n, spf))


def mobius_table(limit: int) -> np.ndarray:
    """mu(n) for n = 0..limit as int8 (mu(0) stored as 0)."""
    mu = np.ones(limit + 1, dtype=np.int8)
    mu[0] = 0
    spf = spf_table(limit)
    for n in range(2, limit + 1):
        m, val = n, 1
        while m > 1:
            p = int(spf[m])
            m //= p
            if m % p == 0:
                val = 0
                break
            val = -val
        mu[n] = val
    return mu


def mertens_table(limit: int) -> np.ndarray:
    """Partial sums of mu: M[x] = sum of mu(n) for n <= x, 0 <= x <= limit."""
    return np.cumsum(mobius_table(limit), dtype=np.int64)
