"""Exact real-root machinery for integer/rational polynomials.

Everything here works on plain coefficient lists (lowest degree first).
Rational inputs are normalized once to primitive integer polynomials;
afterwards all sign decisions are integer arithmetic, so root counting and
isolation carry no rounding anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class ZeroPolynomialError(ValueError):
    """Raised where a root query on the identically zero polynomial has no
    sensible answer (the caller decides what an all-roots polynomial means)."""


def to_primitive_int(coeffs) -> list[int]:
    """Scale a rational coefficient list by a positive rational into a
    primitive (content 1) integer list, trimming trailing zeros."""
    fracs = [Fraction(c) for c in coeffs]
    while fracs and fracs[-1] == 0:
        fracs.pop()
    if not fracs:
        return []
    denom_lcm = 1
    for f in fracs:
        denom_lcm = denom_lcm * f.denominator // gcd(denom_lcm, f.denominator)
    ints = [int(f * denom_lcm) for f in fracs]
    content = 0
    for x in ints:
        content = gcd(content, x)
    return [x // content for x in ints]


def degree(coeffs) -> int:
    return len(coeffs) - 1


def diff_int(coeffs: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def sign_at(coeffs: list[int], point: Fraction) -> int:
    """Sign of the polynomial at an exact rational point (integer Horner on
    the homogenized form)."""
    if not coeffs:
        return 0
    num, den = point.numerator, point.denominator
    acc = coeffs[-1]
    dp = den
    for c in coeffs[-2::-1]:
        acc = acc * num + c * dp
        dp *= den
    return (acc > 0) - (acc < 0)


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        factor = r[-1] / lead
        for i, bc in enumerate(b):
            r[shift + i] -= factor * bc
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _rem_primitive(a: list[int], b: list[int]) -> list[int]:
    return to_primitive_int(_frac_rem([Fraction(x) for x in a], [Fraction(x) for x in b]))


def poly_gcd_int(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd via the Euclidean chain (sign of the leading coefficient
    not normalized; callers only use it for exact division)."""
    a, b = to_primitive_int(a), to_primitive_int(b)
    while b:
        a, b = b, _rem_primitive(a, b)
    return a


def exact_div(a: list[int], b: list[int]) -> list[int]:
    """Exact polynomial quotient a / b, primitive-normalized."""
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    db = len(b) - 1
    lead = Fraction(b[-1])
    while len(r) - 1 >= db:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        factor = r[-1] / lead
        q[shift] = factor
        for i, bc in enumerate(b):
            r[shift + i] -= factor * bc
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    if r:
        raise ArithmeticError("division was not exact")
    return to_primitive_int(q)


def square_free_part(coeffs: list[int]) -> list[int]:
    """The radical: same roots, all simple."""
    if degree(coeffs) < 1:
        return list(coeffs)
    g = poly_gcd_int(coeffs, diff_int(coeffs))
    if degree(g) < 1:
        return to_primitive_int(coeffs)
    return exact_div(to_primitive_int(coeffs), g)


def deflate_root(coeffs: list[int], root: Fraction) -> list[int]:
    """Divide out a known rational root exactly (synthetic division)."""
    out: list[Fraction] = []
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * root + c
        out.append(acc)
    if out[-1] != 0:
        raise ArithmeticError(f"{root} is not a root")
    return to_primitive_int(list(reversed(out[:-1])))


def sturm_chain(coeffs: list[int]) -> list[list[int]]:
    """Sturm sequence of a square-free integer polynomial, each element
    primitive (positive scaling preserves all sign information)."""
    chain = [to_primitive_int(coeffs)]
    d = diff_int(chain[0])
    if d:
        chain.append(to_primitive_int(d))
    while degree(chain[-1]) >= 1:
        rem = _rem_primitive(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-x for x in rem])
    return chain


def variations(chain: list[list[int]], point: Fraction) -> int:
    count = 0
    prev = 0
    for element in chain:
        s = sign_at(element, point)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def count_roots_open(chain, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the open interval for a square-free polynomial
    that does not vanish at either endpoint."""
    return variations(chain, lo) - variations(chain, hi)
