"""Exact commutative-ring tower.

Scalars live in one of: the integers, the rationals, a prime field, a
cyclotomic field Q(zeta_N) realized as Q[x]/Phi_N(x), or a multivariate
Laurent polynomial ring over any of the former.  Nested Laurent rings are
flattened into a single variable list at construction, so a Laurent base is
never itself Laurent.

Every element knows its descriptor; arithmetic between different descriptors
is an error, with explicit embeddings provided for extending a ring by fresh
Laurent variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotDivisibleError, RingError

# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class IntegerRing:
    is_field = False

    def __str__(self):
        return "Z"


@dataclass(frozen=True)
class RationalField:
    is_field = True

    def __str__(self):
        return "Q"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int
    is_field = True

    def __post_init__(self):
        if not _is_prime(self.p):
            raise RingError(f"modulus {self.p} is not prime")

    def __str__(self):
        return f"F{self.p}"


@dataclass(frozen=True)
class CyclotomicField:
    level: int
    is_field = True

    def __post_init__(self):
        if self.level < 1:
            raise RingError("cyclotomic level must be >= 1")

    @property
    def degree(self):
        return len(cyclotomic_polynomial(self.level)) - 1

    def __str__(self):
        return f"Q(zeta{self.level})"


@dataclass(frozen=True)
class LaurentRing:
    variables: tuple
    base: object
    is_field = False

    def __post_init__(self):
        if isinstance(self.base, LaurentRing):
            raise RingError("Laurent base must be flattened, use laurent_ring()")
        if len(set(self.variables)) != len(self.variables) or not self.variables:
            raise RingError(f"bad variable list {self.variables}")

    def __str__(self):
        vars_ = ",".join(f"{v}^±1" for v in self.variables)
        return f"{self.base}[{vars_}]"


def laurent_ring(variables, base):
    """Laurent ring constructor that flattens a Laurent base."""
    variables = tuple(variables)
    if isinstance(base, LaurentRing):
        if set(base.variables) & set(variables):
            raise RingError("duplicate variable names when flattening")
        return LaurentRing(base.variables + variables, base.base)
    return LaurentRing(variables, base)


ZZ = IntegerRing()
QQ = RationalField()


# ---------------------------------------------------------------------------
# cyclotomic polynomials (integer coefficient tuples, low degree first)


def _poly_divide_int(num, den):
    # Exact division of integer polynomials with monic-leading den.
    num = list(num)
    deg_d = len(den) - 1
    quot = [0] * (len(num) - deg_d)
    for k in range(len(num) - 1, deg_d - 1, -1):
        c = num[k]
        if c == 0:
            continue
        assert den[-1] in (1, -1)
        q = c // den[-1]
        quot[k - deg_d] = q
        for j, d in enumerate(den):
            num[k - deg_d + j] -= q * d
    assert all(c == 0 for c in num), "non-exact cyclotomic division"
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n == 1:
        return (-1, 1)
    poly = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divide_int(poly, cyclotomic_polynomial(d))
    return poly


# ---------------------------------------------------------------------------
# payload arithmetic, dispatched on descriptor type
#
# Payloads: int (ZZ, PrimeField), Fraction (QQ), tuple[Fraction] (cyclotomic,
# length = degree), dict[exponent tuple -> base payload] (Laurent).


def _zero(desc):
    if isinstance(desc, IntegerRing):
        return 0
    if isinstance(desc, RationalField):
        return Fraction(0)
    if isinstance(desc, PrimeField):
        return 0
    if isinstance(desc, CyclotomicField):
        return (Fraction(0),) * desc.degree
    return {}


def _one(desc):
    return _from_int(desc, 1)


def _from_int(desc, n):
    if isinstance(desc, IntegerRing):
        return n
    if isinstance(desc, RationalField):
        return Fraction(n)
    if isinstance(desc, PrimeField):
        return n % desc.p
    if isinstance(desc, CyclotomicField):
        return (Fraction(n),) + (Fraction(0),) * (desc.degree - 1)
    if n == 0:
        return {}
    zero_exp = (0,) * len(desc.variables)
    return {zero_exp: _from_int(desc.base, n)}


def _is_zero(desc, a):
    if isinstance(desc, CyclotomicField):
        return all(c == 0 for c in a)
    if isinstance(desc, LaurentRing):
        return not a
    return a == 0


def _add(desc, a, b):
    if isinstance(desc, PrimeField):
        return (a + b) % desc.p
    if isinstance(desc, CyclotomicField):
        return tuple(x + y for x, y in zip(a, b))
    if isinstance(desc, LaurentRing):
        out = dict(a)
        for exp, c in b.items():
            s = _add(desc.base, out.get(exp, _zero(desc.base)), c)
            if _is_zero(desc.base, s):
                out.pop(exp, None)
            else:
                out[exp] = s
        return out
    return a + b


def _neg(desc, a):
    if isinstance(desc, PrimeField):
        return (-a) % desc.p
    if isinstance(desc, CyclotomicField):
        return tuple(-c for c in a)
    if isinstance(desc, LaurentRing):
        return {exp: _neg(desc.base, c) for exp, c in a.items()}
    return -a


def _cyclo_reduce(desc, coeffs):
    # Reduce a Fraction coefficient list modulo Phi_N (monic).
    phi = cyclotomic_polynomial(desc.level)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        coeffs[k] = Fraction(0)
        for j in range(deg):
            coeffs[k - deg + j] -= c * phi[j]
    coeffs = coeffs[:deg]
    coeffs += [Fraction(0)] * (deg - len(coeffs))
    return tuple(coeffs)


def _mul(desc, a, b):
    if isinstance(desc, PrimeField):
        return (a * b) % desc.p
    if isinstance(desc, CyclotomicField):
        conv = [Fraction(0)] * (2 * len(a) - 1 if a else 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
        return _cyclo_reduce(desc, conv)
    if isinstance(desc, LaurentRing):
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                prod = _mul(desc.base, ca, cb)
                s = _add(desc.base, out.get(exp, _zero(desc.base)), prod)
                if _is_zero(desc.base, s):
                    out.pop(exp, None)
                else:
                    out[exp] = s
        return out
    return a * b


def _is_unit(desc, a):
    if _is_zero(desc, a):
        return False
    if isinstance(desc, IntegerRing):
        return a in (1, -1)
    if desc.is_field:
        return True
    # Laurent: a single monomial with a unit base coefficient
    if len(a) != 1:
        return False
    (coeff,) = a.values()
    return _is_unit(desc.base, coeff)


def _invert_unit(desc, a):
    if not _is_unit(desc, a):
        raise RingError("element is not a unit")
    if isinstance(desc, IntegerRing):
        return a
    if isinstance(desc, RationalField):
        return 1 / a
    if isinstance(desc, PrimeField):
        return pow(a, desc.p - 2, desc.p)
    if isinstance(desc, CyclotomicField):
        return _cyclo_invert(desc, a)
    ((exp, coeff),) = a.items()
    return {tuple(-e for e in exp): _invert_unit(desc.base, coeff)}


def _cyclo_invert(desc, a):
    # Extended Euclid in Q[x] between a and Phi_N; gcd is 1 since Phi_N is
    # irreducible and a is nonzero of smaller degree.
    phi = [Fraction(c) for c in cyclotomic_polynomial(desc.level)]

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def polydiv(num, den):
        num = list(num)
        quot = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        for k in range(len(num) - 1, len(den) - 2, -1):
            if num[k] == 0:
                continue
            q = num[k] / den[-1]
            quot[k - len(den) + 1] = q
            for j, d in enumerate(den):
                num[k - len(den) + 1 + j] -= q * d
        return quot, trim(num)

    r0, r1 = trim(list(phi)), trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = polydiv(r0, r1)
        # s_new = s0 - q*s1
        conv = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, x in enumerate(q):
            for j, y in enumerate(s1):
                conv[i + j] += x * y
        s_new = [
            (s0[i] if i < len(s0) else Fraction(0)) - (conv[i] if i < len(conv) else Fraction(0))
            for i in range(max(len(s0), len(conv)))
        ]
        r0, r1 = r1, trim(r)
        s0, s1 = s1, trim(s_new)
    # r0 = gcd (a nonzero constant), inverse = s0 / r0
    assert len(r0) == 1
    inv = [c / r0[0] for c in s0]
    inv += [Fraction(0)] * (desc.degree - len(inv))
    return _cyclo_reduce(desc, inv)


def _exact_divide(desc, a, b):
    if _is_zero(desc, b):
        raise RingError("division by zero")
    if isinstance(desc, IntegerRing):
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{b} does not divide {a}")
        return q
    if desc.is_field:
        return _mul(desc, a, _invert_unit(desc, b))
    return _laurent_divide(desc, a, b)


def _lex_leading(a):
    return max(a)


def _monomial_shift(payload, nvars):
    # Shift so every variable has minimum exponent 0; return (shifted, shift).
    mins = tuple(min(exp[i] for exp in payload) for i in range(nvars))
    shifted = {
        tuple(e - m for e, m in zip(exp, mins)): c for exp, c in payload.items()
    }
    return shifted, mins


def _laurent_divide(desc, a, b):
    """Single-divisor multivariate division.

    Both operands are first shifted by unit monomials so all exponents are
    nonnegative (monomials are units, so this loses nothing), then divided
    by lex-ordered polynomial trial division.  Over an integral domain the
    lex-leading term of a product is the product of lex-leading terms, so
    when b divides a this succeeds; otherwise NotDivisibleError is raised.
    """
    if _is_zero(desc, a):
        return {}
    nvars = len(desc.variables)
    a_poly, a_shift = _monomial_shift(a, nvars)
    b_poly, b_shift = _monomial_shift(b, nvars)
    lead_b = _lex_leading(b_poly)
    quot = {}
    rem = dict(a_poly)
    while rem:
        lead_r = _lex_leading(rem)
        exp = tuple(x - y for x, y in zip(lead_r, lead_b))
        if any(e < 0 for e in exp):
            raise NotDivisibleError("leading monomial does not divide")
        try:
            coeff = _exact_divide(desc.base, rem[lead_r], b_poly[lead_b])
        except NotDivisibleError:
            raise NotDivisibleError("leading coefficient does not divide")
        term = {exp: coeff}
        quot = _add(desc, quot, term)
        rem = _add(desc, rem, _neg(desc, _mul(desc, term, b_poly)))
    shift = tuple(x - y for x, y in zip(a_shift, b_shift))
    return {
        tuple(e + s for e, s in zip(exp, shift)): c for exp, c in quot.items()
    }


# ---------------------------------------------------------------------------
# element wrapper


@dataclass(frozen=True)
class RingElement:
    """Exact scalar: a descriptor plus a descriptor-shaped payload."""

    descriptor: object
    payload: object

    @staticmethod
    def from_int(desc, n):
        return RingElement(desc, _from_int(desc, n))

    @staticmethod
    def zero(desc):
        return RingElement(desc, _zero(desc))

    @staticmethod
    def one(desc):
        return RingElement(desc, _one(desc))

    @staticmethod
    def variable(desc, name, power=1):
        if not isinstance(desc, LaurentRing):
            raise RingError(f"{desc} has no variables")
        if name not in desc.variables:
            raise RingError(f"unknown variable {name!r} in {desc}")
        exp = tuple(power if v == name else 0 for v in desc.variables)
        return RingElement(desc, {exp: _one(desc.base)})

    @staticmethod
    def monomial(desc, exponents, coefficient=None):
        if coefficient is None:
            coefficient = _one(desc.base)
        if _is_zero(desc.base, coefficient):
            return RingElement.zero(desc)
        return RingElement(desc, {tuple(exponents): coefficient})

    @staticmethod
    def cyclotomic_generator(desc, power=1):
        base = desc.base if isinstance(desc, LaurentRing) else desc
        if not isinstance(base, CyclotomicField):
            raise RingError(f"{desc} has no root of unity generator")
        power %= base.level
        value = _cyclo_reduce(
            base, [Fraction(0)] * power + [Fraction(1)]
        )
        if isinstance(desc, LaurentRing):
            return RingElement(desc, {(0,) * len(desc.variables): value})
        return RingElement(desc, value)

    # -- predicates

    @property
    def is_zero(self):
        return _is_zero(self.descriptor, self.payload)

    @property
    def is_unit(self):
        return _is_unit(self.descriptor, self.payload)

    def _coerce(self, other):
        if isinstance(other, int):
            return RingElement.from_int(self.descriptor, other)
        if not isinstance(other, RingElement):
            raise RingError(f"cannot combine with {other!r}")
        if other.descriptor != self.descriptor:
            raise RingError(
                f"descriptor mismatch: {self.descriptor} vs {other.descriptor}"
            )
        return other

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        return RingElement(
            self.descriptor, _add(self.descriptor, self.payload, other.payload)
        )

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.descriptor, _neg(self.descriptor, self.payload))

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return RingElement(
            self.descriptor, _mul(self.descriptor, self.payload, other.payload)
        )

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.invert_unit() ** (-n)
        out = RingElement.one(self.descriptor)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def invert_unit(self):
        return RingElement(
            self.descriptor, _invert_unit(self.descriptor, self.payload)
        )

    def exact_divide(self, other):
        """Return q with self = q * other, or raise NotDivisibleError."""
        other = self._coerce(other)
        return RingElement(
            self.descriptor,
            _exact_divide(self.descriptor, self.payload, other.payload),
        )

    def divides(self, other):
        try:
            other.exact_divide(self)
            return True
        except NotDivisibleError:
            return False

    def __eq__(self, other):
        if isinstance(other, int):
            other = RingElement.from_int(self.descriptor, other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return (
            self.descriptor == other.descriptor
            and _canonical(self.descriptor, self.payload)
            == _canonical(other.descriptor, other.payload)
        )

    def __hash__(self):
        return hash((self.descriptor, _canonical(self.descriptor, self.payload)))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.descriptor}: {format_element(self)}>"


def _canonical(desc, payload):
    if isinstance(desc, LaurentRing):
        return frozenset(
            (exp, _canonical(desc.base, c)) for exp, c in payload.items()
        )
    return payload


# ---------------------------------------------------------------------------
# ring extension / embedding


def extend_with_variables(desc, names):
    """Laurent ring over desc with fresh variables appended (flattened)."""
    return laurent_ring(names, desc)


def embed(element, target):
    """Embed an element into a Laurent ring extending its descriptor."""
    desc = element.descriptor
    if desc == target:
        return element
    if not isinstance(target, LaurentRing):
        raise RingError(f"cannot embed {desc} into {target}")
    if desc == target.base:
        if element.is_zero:
            return RingElement.zero(target)
        return RingElement(target, {(0,) * len(target.variables): element.payload})
    if isinstance(desc, LaurentRing) and desc.base == target.base:
        positions = []
        for v in desc.variables:
            if v not in target.variables:
                raise RingError(f"variable {v!r} missing from {target}")
            positions.append(target.variables.index(v))
        out = {}
        for exp, c in element.payload.items():
            new_exp = [0] * len(target.variables)
            for pos, e in zip(positions, exp):
                new_exp[pos] = e
            out[tuple(new_exp)] = c
        return RingElement(target, out)
    raise RingError(f"cannot embed {desc} into {target}")


# ---------------------------------------------------------------------------
# unit normalization


def unit_normal_form(element):
    """Canonical representative modulo multiplication by unit monomials.

    Every variable is shifted so its minimum exponent is 0, then the
    lexicographically-leading coefficient is normalized: to 1 over a field
    base, to positive sign over the integers.
    """
    desc = element.descriptor
    if element.is_zero:
        raise RingError("zero has no unit normal form")
    if not isinstance(desc, LaurentRing):
        if desc.is_field:
            return RingElement.one(desc)
        return RingElement(desc, abs(element.payload))
    payload = element.payload
    nvars = len(desc.variables)
    mins = [min(exp[i] for exp in payload) for i in range(nvars)]
    shifted = {
        tuple(e - m for e, m in zip(exp, mins)): c for exp, c in payload.items()
    }
    lead = shifted[_lex_leading(shifted)]
    if desc.base.is_field:
        scale = _invert_unit(desc.base, lead)
        shifted = {exp: _mul(desc.base, c, scale) for exp, c in shifted.items()}
    elif isinstance(desc.base, IntegerRing):
        if lead < 0:
            shifted = {exp: -c for exp, c in shifted.items()}
    return RingElement(desc, shifted)


def equal_up_to_unit(p, q):
    """True iff p and q agree modulo a unit monomial factor."""
    if p.descriptor != q.descriptor:
        raise RingError("cannot compare elements of different rings")
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    return unit_normal_form(p) == unit_normal_form(q)


# ---------------------------------------------------------------------------
# univariate gcd over a field base (for multi-minor invariants)


def univariate_gcd(elements):
    """Monic-normalized gcd of univariate Laurent polynomials over a field."""
    from .errors import GcdUnsupportedError

    elements = [e for e in elements if not e.is_zero]
    if not elements:
        raise RingError("gcd of all-zero family")
    desc = elements[0].descriptor
    if (
        not isinstance(desc, LaurentRing)
        or len(desc.variables) != 1
        or not desc.base.is_field
    ):
        raise GcdUnsupportedError(elements)

    def to_dense(e):
        payload = e.payload
        lo = min(k[0] for k in payload)
        hi = max(k[0] for k in payload)
        return [
            payload.get((k,), _zero(desc.base)) for k in range(lo, hi + 1)
        ]

    def trim(p):
        while p and _is_zero(desc.base, p[-1]):
            p.pop()
        return p

    def polymod(num, den):
        num = list(num)
        inv_lead = _invert_unit(desc.base, den[-1])
        for k in range(len(num) - 1, len(den) - 2, -1):
            if _is_zero(desc.base, num[k]):
                continue
            q = _mul(desc.base, num[k], inv_lead)
            for j, d in enumerate(den):
                num[k - len(den) + 1 + j] = _add(
                    desc.base, num[k - len(den) + 1 + j], _neg(desc.base, _mul(desc.base, q, d))
                )
        return trim(num)

    a = trim(to_dense(elements[0]))
    for e in elements[1:]:
        b = trim(to_dense(e))
        while b:
            a, b = b, polymod(a, b)
    result = RingElement(
        desc, {(k,): c for k, c in enumerate(a) if not _is_zero(desc.base, c)}
    )
    return unit_normal_form(result)


# ---------------------------------------------------------------------------
# formatting (canonical, re-parseable)


def _format_fraction(f):
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _format_cyclo(desc, payload):
    parts = []
    for power, coeff in enumerate(payload):
        if coeff == 0:
            continue
        if power == 0:
            parts.append(_format_fraction(coeff))
        else:
            zeta = "zeta" if power == 1 else f"zeta^{power}"
            if coeff == 1:
                parts.append(zeta)
            elif coeff == -1:
                parts.append(f"-{zeta}")
            else:
                parts.append(f"{_format_fraction(coeff)}*{zeta}")
    if not parts:
        return "0"
    return " + ".join(parts)


def _format_base(desc, payload):
    if isinstance(desc, CyclotomicField):
        return _format_cyclo(desc, payload)
    if isinstance(desc, RationalField):
        return _format_fraction(payload)
    return str(payload)


def format_element(element):
    """Deterministic literal form that the parser maps back to the value."""
    desc = element.descriptor
    if not isinstance(desc, LaurentRing):
        return _format_base(desc, element.payload)
    payload = element.payload
    if not payload:
        return "0"
    parts = []
    for exp in sorted(payload):
        coeff = payload[exp]
        monomial = []
        for name, e in zip(desc.variables, exp):
            if e == 0:
                continue
            monomial.append(name if e == 1 else f"{name}^{e}")
        coeff_str = _format_base(desc.base, coeff)
        if not monomial:
            parts.append(coeff_str)
            continue
        mono_str = "*".join(monomial)
        if coeff_str == "1":
            parts.append(mono_str)
        elif coeff_str == "-1":
            parts.append(f"-{mono_str}")
        elif " " in coeff_str:
            parts.append(f"({coeff_str})*{mono_str}")
        else:
            parts.append(f"{coeff_str}*{mono_str}")
    return " + ".join(parts)
