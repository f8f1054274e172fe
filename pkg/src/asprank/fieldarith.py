"""Exact arithmetic in finite fields F_{p^n} and in univariate polynomial rings over them.

Field elements are encoded as integers in ``range(p**n)``: the base-p digits of
the integer, least significant first, are the coordinates of the element with
respect to the power basis 1, w, ..., w^(n-1) of F_p[w]/(modulus).  Elements of
the prime field are therefore the integers 0..p-1 in every extension.

Multiplication uses exponent/logarithm tables and addition of non-binary fields
uses Zech logarithms, so scalar operations are table lookups.  The ``v*``
methods act on whole numpy arrays of encoded elements and back the point
counting code.

The default modulus of F_{p^n} is the monic irreducible polynomial of degree n
whose lower coefficients, read as a base-p integer (constant term least
significant), are smallest.  This makes every derived quantity reproducible.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import FieldSizeError

DEFAULT_MAX_FIELD_SIZE = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _digits(a: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    a = 0
    for c in reversed(ds):
        a = a * p + c
    return a


# -- polynomials over the prime field as little-endian int lists ----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a, b, p):
    m = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(m)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            q[k - db] = c
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pdivmod(base, m, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), m, p)[1]
        base = _pdivmod(_pmul(base, base, p), m, p)[1]
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over F_p (little-endian coefficients)."""
    f = _trim([c % p for c in coeffs])
    n = len(f) - 1
    if n < 1:
        return False
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    if n == 1:
        return True
    x = [0, 1]

    def frob_power(k):
        h = x
        for _ in range(k):
            h = _ppowmod(h, p, f, p)
        return h

    if _psub(frob_power(n), x, p):
        return False
    for ell in prime_factors(n):
        g = _pgcd(f, _psub(frob_power(n // ell), x, p), p)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Monic irreducible polynomial of degree n with the smallest base-p encoding."""
    for k in range(p**n):
        f = _digits(k, p, n) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable for prime p


class FiniteField:
    """The field F_p[w]/(modulus) with p^n elements."""

    def __init__(self, p: int, n: int = 1, modulus: Sequence[int] | None = None,
                 max_size: int = DEFAULT_MAX_FIELD_SIZE):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be positive")
        if p**n > max_size:
            raise FieldSizeError(f"F_{p}^{n} has {p**n} elements, bound is {max_size}")
        if modulus is None:
            modulus = least_irreducible(p, n)
        else:
            modulus = [c % p for c in modulus]
            _trim(modulus)
            if len(modulus) != n + 1:
                raise ValueError(f"modulus must have degree {n}")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
            inv = pow(modulus[-1], -1, p)
            modulus = tuple(c * inv % p for c in modulus)
        self.p = p
        self.n = n
        self.q = p**n
        self.modulus = tuple(modulus)
        self._build_tables()

    # -- construction ----------------------------------------------------------

    def _cmul(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        prod = _pmul(_digits(a, p, n), _digits(b, p, n), p)
        return _undigits(_pdivmod(prod, list(self.modulus), p)[1], p)

    def _cpow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._cmul(r, a)
            a = self._cmul(a, a)
            e >>= 1
        return r

    def _digit_matrix(self, values: np.ndarray) -> np.ndarray:
        return (values[:, None] // self._pw[None, :]) % self.p

    def _mul_by(self, D: np.ndarray, h: int) -> np.ndarray:
        """Multiply every row of digit matrix D by the element h."""
        p, n = self.p, self.n
        if p == 2:
            # carry-less product on packed bits, then reduce the high bits
            A = D @ self._pw
            acc = np.zeros_like(A)
            for j in range(n):
                if (h >> j) & 1:
                    acc ^= A << j
            mod = _undigits(self.modulus, 2)
            for k in range(2 * n - 2, n - 1, -1):
                hit = (acc >> k) & 1
                acc ^= hit * (mod << (k - n))
            return self._digit_matrix(acc)
        P = np.zeros((D.shape[0], 2 * n - 1), dtype=np.int64)
        for j, hj in enumerate(_digits(h, p, n)):
            if hj:
                P[:, j:j + n] += hj * D
        P %= p
        low = np.array(self.modulus[:n], dtype=np.int64)
        for k in range(2 * n - 2, n - 1, -1):
            c = P[:, k]
            if c.any():
                P[:, k - n:k] = (P[:, k - n:k] - c[:, None] * low[None, :]) % p
        return P[:, :n]

    def _build_tables(self) -> None:
        p, n, q = self.p, self.n, self.q
        self._pw = np.array([p**j for j in range(n)], dtype=np.int64)
        order = q - 1
        factors = prime_factors(order)
        g = next(c for c in range(1, q)
                 if all(self._cpow(c, order // ell) != 1 for ell in factors))
        self.generator = g
        pows = np.zeros((1, n), dtype=np.int64)
        pows[0, 0] = 1
        step = g
        while len(pows) < order:
            pows = np.vstack([pows, self._mul_by(pows, step)])
            step = self._cmul(step, step)
        exp = (pows[:order] @ self._pw).astype(np.int64)
        assert len(np.unique(exp)) == order
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(order)
        self._exp_np = np.concatenate([exp, exp])
        self._log_np = log
        low = exp % p
        one_plus = exp - low + (low + 1) % p
        zech = np.where(one_plus == 0, -1, log[one_plus])
        allv = np.arange(q, dtype=np.int64)
        neg = ((-self._digit_matrix(allv)) % p) @ self._pw
        self._exp = self._exp_np.tolist()
        self._log = log.tolist()
        self._zech = zech.tolist()
        self._neg = neg.tolist()
        basis_traces = [self.trace(int(w)) for w in self._pw]
        self._trace_basis = np.array(basis_traces, dtype=np.int64)

    # -- identity --------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.n == other.n and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    def __len__(self):
        return self.q

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"{value!r} is not in {self}")
            return value
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"encoding {value} out of range for {self}")
        return FieldElement(self, value)

    def elements(self) -> Iterator["FieldElement"]:
        for a in range(self.q):
            yield FieldElement(self, a)

    def from_coordinates(self, coords: Sequence[int]) -> "FieldElement":
        if len(coords) > self.n:
            raise ValueError("too many coordinates")
        return FieldElement(self, _undigits([c % self.p for c in coords], self.p))

    def coordinates(self, a: int) -> list[int]:
        return _digits(int(a), self.p, self.n)

    def is_subfield_of(self, other: "FiniteField") -> bool:
        return self.p == other.p and other.n % self.n == 0

    # -- scalar arithmetic on encodings ----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        k = self._log[b] - la
        if k < 0:
            k += self.q - 1
        z = self._zech[k]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def scalar(self, k: int) -> int:
        """Encoding of the integer k, i.e. k * 1."""
        return k % self.p

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        return self.pow(a, self.q // self.p)

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer in range(p)."""
        t = 0
        for _ in range(self.n):
            t = self.add(t, a)
            a = self.frobenius(a)
        assert t < self.p
        return t

    # -- vectorized arithmetic -------------------------------------------------

    def vadd(self, A: np.ndarray, B) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(A, B)
        B = np.broadcast_to(np.asarray(B, dtype=np.int64), A.shape)
        out = np.zeros(A.shape, dtype=np.int64)
        for w in self._pw:
            out += (((A // w) + (B // w)) % self.p) * w
        return out

    def vmul(self, A: np.ndarray, B) -> np.ndarray:
        B = np.broadcast_to(np.asarray(B, dtype=np.int64), A.shape)
        out = self._exp_np[self._log_np[A] + self._log_np[B]]
        return np.where((A == 0) | (B == 0), 0, out)

    def vinv(self, A: np.ndarray) -> np.ndarray:
        """Inverse of nonzero entries; zero entries map to zero."""
        out = self._exp_np[(self.q - 1 - self._log_np[A]) % (self.q - 1)]
        return np.where(A == 0, 0, out)

    def vtrace(self, A: np.ndarray) -> np.ndarray:
        return (self._digit_matrix(A) @ self._trace_basis) % self.p

    def evaluate_all(self, coeffs: Sequence[int]) -> np.ndarray:
        """Values of the polynomial with the given coefficients at every element, by encoding."""
        X = np.arange(self.q, dtype=np.int64)
        acc = np.zeros(self.q, dtype=np.int64)
        for c in reversed(list(coeffs)):
            acc = self.vadd(self.vmul(acc, X), int(c))
        return acc


@functools.lru_cache(maxsize=None)
def GF(p: int, n: int = 1, max_size: int = DEFAULT_MAX_FIELD_SIZE) -> FiniteField:
    """Cached field with the default modulus."""
    return FiniteField(p, n, max_size=max_size)


def extension(field: FiniteField, m: int, max_size: int = DEFAULT_MAX_FIELD_SIZE) -> FiniteField:
    """The degree-m extension of ``field`` (with its default modulus)."""
    if m == 1:
        return field
    return GF(field.p, field.n * m, max_size)


class FieldElement:
    """An element of a FiniteField.

    Arithmetic with a plain ``int`` treats the int as an integer multiple of 1,
    so ``2 * a`` means a + a.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixing elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.scalar(other)
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"{self.field!r}({self.value})"

    @property
    def coordinates(self) -> list[int]:
        return self.field.coordinates(self.value)


def pth_root(a: FieldElement) -> FieldElement:
    """The unique b with b**p == a."""
    return FieldElement(a.field, a.field.pth_root(a.value))


def abs_trace(a: FieldElement) -> FieldElement:
    """Absolute trace sum(a**(p**i)); the result lies in the prime field."""
    return FieldElement(a.field, a.field.trace(a.value))


def _enc(field: FiniteField, c) -> int:
    if isinstance(c, FieldElement):
        return field(c).value
    c = int(c)
    if not 0 <= c < field.q:
        raise ValueError(f"encoding {c} out of range for {field}")
    return c


class Poly:
    """Univariate polynomial over a FiniteField; coefficients little-endian, as encodings."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable = ()):
        cs = [_enc(field, c) for c in coeffs]
        _trim(cs)
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, field: FiniteField) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: FiniteField, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: FiniteField, c, k: int) -> "Poly":
        return cls(field, [0] * k + [_enc(field, c)])

    @classmethod
    def linear(cls, field: FiniteField, root: int) -> "Poly":
        """x - root."""
        return cls(field, (field.neg(root), 1))

    @property
    def degree(self):
        """Degree; the zero polynomial has degree -inf."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self.field, self[i])

    def _check(self, other: "Poly") -> None:
        if other.field != self.field:
            raise ValueError(f"polynomials over {self.field} and {other.field}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, FieldElement):
            return Poly(self.field, (other,))
        if isinstance(other, int):
            return Poly(self.field, (self.field.scalar(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F, a, b = self.field, self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return Poly(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(m)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: int) -> "Poly":
        return Poly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F, a, b = self.field, self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        result = Poly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        inv = F.inv(b[-1])
        q = [0] * max(len(a) - db, 0)
        for k in range(len(a) - 1, db - 1, -1):
            c = F.mul(a[k], inv)
            if c:
                q[k - db] = c
                for j in range(db + 1):
                    a[k - db + j] = F.sub(a[k - db + j], F.mul(c, b[j]))
        return Poly(F, q), Poly(F, a[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x) -> FieldElement:
        F = self.field
        v = _enc(F, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, v), c)
        return FieldElement(F, acc)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(f"{coef}*{mono}" if coef and mono else coef or mono)
        return " + ".join(reversed(terms))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def derivative(self) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(F.scalar(i), c) for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c: int) -> "Poly":
        """The polynomial f(x + c)."""
        xc = Poly(self.field, (c, 1))
        result = Poly(self.field)
        for a in reversed(self.coeffs):
            result = result * xc + Poly(self.field, (a,))
        return result


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class Embedding:
    """The field embedding small -> large sending w to the least root of small's modulus."""

    def __init__(self, small: FiniteField, large: FiniteField):
        if not small.is_subfield_of(large):
            raise ValueError(f"{small} does not embed in {large}")
        self.small = small
        self.large = large
        if small == large:
            self.root = small.p if small.n > 1 else small.neg(small.modulus[0])
            self._image = np.arange(small.q, dtype=np.int64)
        else:
            values = large.evaluate_all(small.modulus)
            roots = np.flatnonzero(values == 0)
            self.root = int(roots[0])
            D = small._digit_matrix(np.arange(small.q, dtype=np.int64))
            img = np.zeros(small.q, dtype=np.int64)
            power = 1
            for j in range(small.n):
                img = large.vadd(img, large.vmul(D[:, j].copy(), power))
                power = large.mul(power, self.root)
            self._image = img
        self._map = self._image.tolist()
        self._inverse = {v: a for a, v in enumerate(self._map)}
        if len(self._inverse) != small.q:
            raise AssertionError("embedding is not injective")

    def __call__(self, a: int) -> int:
        return self._map[int(a)]

    def element(self, a: FieldElement) -> FieldElement:
        return FieldElement(self.large, self._map[self.small(a).value])

    def poly(self, f: Poly) -> Poly:
        return Poly(self.large, [self._map[c] for c in f.coeffs])

    def contains(self, b: int) -> bool:
        return int(b) in self._inverse

    def preimage(self, b: int) -> int:
        try:
            return self._inverse[int(b)]
        except KeyError:
            raise ValueError(f"{b} of {self.large} is not in the image of {self.small}") from None

    def preimage_poly(self, f: Poly) -> Poly:
        return Poly(self.small, [self.preimage(c) for c in f.coeffs])


@functools.lru_cache(maxsize=None)
def embedding(small: FiniteField, large: FiniteField) -> Embedding:
    return Embedding(small, large)


def factor_squarefree_roots(f: Poly, field: FiniteField | None = None):
    """Roots of f in ``field`` with multiplicities, and the root-free cofactor.

    Returns ``(roots, remainder)`` with ``roots`` a list of ``(FieldElement, multiplicity)``
    sorted by encoding and ``f == remainder * prod((x - r)**m)`` over ``field``.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has every element as a root")
    if field is not None and field != f.field:
        f = embedding(f.field, field).poly(f)
    F = f.field
    values = F.evaluate_all(f.coeffs)
    roots = []
    g = f
    for r in np.flatnonzero(values == 0).tolist():
        lin = Poly.linear(F, r)
        m = 0
        while True:
            quo, rem = divmod(g, lin)
            if not rem.is_zero():
                break
            g, m = quo, m + 1
        roots.append((FieldElement(F, r), m))
    return roots, g
