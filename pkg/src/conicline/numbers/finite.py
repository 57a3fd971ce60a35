"""Prime fields F_p and extension fields F_{p^k}.

Elements are small immutable objects. ``F_{p^k}`` is represented as
``F_p[T]/(M)`` for a monic irreducible ``M`` of degree ``k``; the modulus chosen
by :meth:`ExtField.canonical` depends only on ``(p, k)`` so every part of the
program (and every run) agrees on it.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..errors import BadPrime, DivisionByZero, FieldMismatch

PRIME_LO = 2 ** 20
PRIME_HI = 2 ** 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24 (bases are the first 13 primes)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
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


def random_prime(rng: random.Random, lo: int = PRIME_LO, hi: int = PRIME_HI) -> int:
    """A prime drawn uniformly from the primes in the open interval (lo, hi)."""
    while True:
        n = rng.randrange(lo + 1, hi)
        if is_prime(n):
            return n


def rational_reconstruction(a: int, n: int):
    """``r/s`` with ``r = a s (mod n)`` and ``|r|, s <= sqrt(n/2)``, or None."""
    bound = isqrt(n // 2)
    r0, r1 = n, a % n
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def crt(residues, moduli):
    """``(x, n)`` with ``x = r_i (mod p_i)`` and ``n`` the product of the moduli."""
    x, n = 0, 1
    for r, p in zip(residues, moduli):
        t = (r - x) * pow(n, -1, p) % p
        x += n * t
        n *= p
    return x, n


# -- F_p ------------------------------------------------------------------------

class PrimeFieldElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise BadPrime(f"{self.p} divides the denominator of {other}")
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise DivisionByZero(f"division by 0 in F_{self.p}")
        return PrimeFieldElement(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o, self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class PrimeField:
    degree = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise BadPrime(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    @property
    def label(self):
        return f"F_{self.p}"

    def __call__(self, x) -> PrimeFieldElement:
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element coerced into F_{self.p}")
            return x
        if isinstance(x, int):
            return PrimeFieldElement(x, self.p)
        if isinstance(x, Fraction):
            return self.zero + x
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def random(self, rng: random.Random) -> PrimeFieldElement:
        return PrimeFieldElement(rng.randrange(self.p), self.p)

    def inverse(self, x):
        return self(x).inverse()

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# -- integer-list polynomials mod p (used by F_{p^k}) -----------------------------

def _imul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    out = [v % p for v in out]
    while out and out[-1] == 0:
        out.pop()
    return out


def _idivmod(a, b, p):
    a = [v % p for v in a]
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    if len(a) <= db:
        return [], a
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _isub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _igcd(a, b, p):
    while b:
        a, b = b, _idivmod(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def _ipowmod(base, e, mod, p):
    result = [1]
    base = _idivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _idivmod(_imul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _idivmod(_imul(base, base, p), mod, p)[1]
    return result


def _prime_factors(n: int):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def rabin_irreducible(f, p: int) -> bool:
    """Rabin's test for a monic integer-list polynomial over F_p."""
    k = len(f) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    x = [0, 1]
    frob = [x]  # frob[i] = x^(p^i) mod f
    cur = x
    for _ in range(k):
        cur = _ipowmod(cur, p, f, p)
        frob.append(cur)
    if _isub(frob[k], x, p):
        return False
    for q in _prime_factors(k):
        g = _igcd(list(f), _isub(frob[k // q], x, p), p)
        if len(g) != 1:
            return False
    return True


# -- F_{p^k} --------------------------------------------------------------------

class ExtFieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: "ExtField", coords):
        self.field = field
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, ExtFieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("elements of different extension fields")
            return other.coords
        try:
            return self.field(other).coords
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return ExtFieldElement(self.field, ((a + b) % p for a, b in zip(self.coords, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return ExtFieldElement(self.field, ((a - b) % p for a, b in zip(self.coords, o)))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        p = self.field.p
        return ExtFieldElement(self.field, ((-a) % p for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtFieldElement(self.field, self.field._mulc(self.coords, o))

    __rmul__ = __mul__

    def inverse(self):
        return ExtFieldElement(self.field, self.field._invc(self.coords))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        inv = self.field._invc(o)
        return ExtFieldElement(self.field, self.field._mulc(self.coords, inv))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExtFieldElement(self.field, o) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ExtFieldElement(self.field, self.field._powc(self.coords, e))

    def frobenius(self, times: int = 1):
        """``self ** (p ** times)``."""
        out = self
        for _ in range(times % self.field.k):
            out = out ** self.field.p
        return out

    def is_prime_field(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def __eq__(self, other):
        if isinstance(other, ExtFieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, PrimeFieldElement)):
            v = int(other) % self.field.p
            return self.coords[0] == v and all(c == 0 for c in self.coords[1:])
        return NotImplemented

    def __hash__(self):
        if self.is_prime_field():
            return hash(self.coords[0])
        return hash(self.coords)

    def __repr__(self):
        terms = [f"{c}*T^{i}" if i else str(c) for i, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"


class ExtField:
    """``F_p[T]/(modulus)`` with ``modulus`` monic irreducible of degree ``k``."""

    def __init__(self, p: int, modulus, check: bool = True):
        self.p = p
        self.modulus = tuple(int(c) % p for c in modulus)
        self.k = len(self.modulus) - 1
        if self.k < 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if check and not rabin_irreducible(list(self.modulus), p):
            raise ValueError("modulus is reducible")
        self.characteristic = p
        self.degree = self.k
        self.order = p ** self.k
        self.zero = ExtFieldElement(self, (0,) * self.k)
        self.one = ExtFieldElement(self, (1,) + (0,) * (self.k - 1))

    @classmethod
    def canonical(cls, p: int, k: int) -> "ExtField":
        return _canonical_field(p, k)

    @property
    def label(self):
        return f"F_{self.p}^{self.k}"

    @property
    def gen(self) -> ExtFieldElement:
        if self.k == 1:
            return ExtFieldElement(self, (-self.modulus[0] % self.p,))
        return ExtFieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def _reduce(self, c):
        k, p, mod = self.k, self.p, self.modulus
        c = list(c)
        for i in range(len(c) - 1, k - 1, -1):
            v = c[i] % p
            if v:
                for j in range(k):
                    c[i - k + j] -= v * mod[j]
        c = [v % p for v in c[:k]]
        return tuple(c + [0] * (k - len(c)))

    def _mulc(self, a, b):
        out = [0] * (2 * self.k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return self._reduce(out)

    def _powc(self, a, e):
        result = self.one.coords
        base = a
        while e:
            if e & 1:
                result = self._mulc(result, base)
            e >>= 1
            if e:
                base = self._mulc(base, base)
        return result

    def _invc(self, a):
        p = self.p
        r0, r1 = list(self.modulus), [v for v in a]
        while r1 and r1[-1] == 0:
            r1.pop()
        if not r1:
            raise DivisionByZero(f"inverse of 0 in {self.label}")
        s0, s1 = [], [1]
        while r1:
            q, r = _idivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _isub(s0, _imul(q, s1, p), p)
        # r0 is a nonzero constant since the modulus is irreducible
        inv = pow(r0[0], -1, p)
        return self._reduce([v * inv for v in s0])

    def __call__(self, x) -> ExtFieldElement:
        if isinstance(x, ExtFieldElement):
            if x.field != self:
                raise FieldMismatch("element of another extension field")
            return x
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} element coerced into {self.label}")
            x = x.value
        if isinstance(x, Fraction):
            x = PrimeField(self.p)(x).value
        if isinstance(x, int):
            return ExtFieldElement(self, (x % self.p,) + (0,) * (self.k - 1))
        if isinstance(x, (list, tuple)):
            c = [int(v) % self.p for v in x]
            return ExtFieldElement(self, self._reduce(c + [0] * max(0, self.k - len(c))))
        raise TypeError(f"cannot coerce {x!r} into {self.label}")

    def random(self, rng: random.Random) -> ExtFieldElement:
        return ExtFieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def inverse(self, x):
        return self(x).inverse()

    def __eq__(self, other):
        return isinstance(other, ExtField) and other.p == self.p and other.modulus == self.modulus

    def __hash__(self):
        return hash(("E", self.p, self.modulus))

    def __repr__(self):
        return f"ExtField({self.p}, {list(self.modulus)})"


@lru_cache(maxsize=64)
def _canonical_field(p: int, k: int) -> ExtField:
    # deterministic in (p, k): sparse candidates first, then seeded random ones
    for c0 in range(1, min(p, 50)):
        for c1 in range(0, min(p, 50)):
            f = [c0, c1] + [0] * (k - 2) + [1] if k >= 2 else [c0, 1]
            if k == 1:
                return ExtField(p, [0, 1], check=False)
            if rabin_irreducible(f, p):
                return ExtField(p, f, check=False)
    rng = random.Random(p * 1000 + k)
    while True:
        f = [rng.randrange(p) for _ in range(k)] + [1]
        if rabin_irreducible(f, p):
            return ExtField(p, f, check=False)
