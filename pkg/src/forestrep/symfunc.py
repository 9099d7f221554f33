"""Symmetric functions with exact rational coefficients, stored in the
power-sum basis.

A SymFunc is a finite sum  sum_rho c_rho p_rho  with c_rho in Q and rho an
integer partition (the empty partition indexes the constant term).  The
power-sum basis makes plethysm structural: p_m acts on a p-monomial by
multiplying every index by m, and extends as a ring homomorphism in each
argument.  Schur and monomial expansions go through the S_n character table
and explicit polynomial expansions respectively.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .characters import ClassFunction, IntegrityError, character_table, inner_product
from .partitions import Partition, partitions_of, z_of

Coeff = int | Fraction


def _merge(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a + b, reverse=True))


class SymFunc:
    """Exact symmetric function in the power-sum basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Coeff] | None = None) -> None:
        clean: dict[tuple[int, ...], Fraction] = {}
        for parts, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(parts)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): 1})

    @classmethod
    def p(cls, k: int) -> "SymFunc":
        if k < 1:
            raise ValueError("power-sum index must be positive")
        return cls({(k,): 1})

    @classmethod
    def p_of(cls, parts) -> "SymFunc":
        return cls({tuple(sorted((int(p) for p in parts), reverse=True)): 1})

    def terms(self) -> dict[Partition, Fraction]:
        return {Partition(parts): c for parts, c in self._terms.items()}

    def coefficient(self, rho: Partition) -> Fraction:
        return self._terms.get(tuple(rho.parts), Fraction(0))

    def degrees(self) -> set[int]:
        return {sum(parts) for parts in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        ds = self.degrees()
        if not ds:
            return 0
        if len(ds) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(ds)}")
        return ds.pop()

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc({parts: c for parts, c in self._terms.items() if sum(parts) == d})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self._terms)
        for parts, c in other._terms.items():
            out[parts] = out.get(parts, Fraction(0)) + c
        return SymFunc(out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __neg__(self) -> "SymFunc":
        return SymFunc({parts: -c for parts, c in self._terms.items()})

    def scale(self, c: Coeff) -> "SymFunc":
        c = Fraction(c)
        return SymFunc({parts: c * v for parts, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            out: dict[tuple[int, ...], Fraction] = {}
            for pa, ca in self._terms.items():
                for pb, cb in other._terms.items():
                    key = _merge(pa, pb)
                    out[key] = out.get(key, Fraction(0)) + ca * cb
            return SymFunc(out)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, SymFunc):
            return self._terms == other._terms
        return NotImplemented

    def __repr__(self) -> str:
        return f"SymFunc<{format_symfunc(self, 'p')}>"


@lru_cache(maxsize=None)
def _schur_terms(parts: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    lam = Partition(parts)
    n = lam.weight
    chi = character_table(n)[lam] if n else None
    out = []
    for rho in partitions_of(n):
        c = Fraction(chi.values[rho] if chi else 1, z_of(rho))
        out.append((rho.parts, c))
    return tuple(out)


def schur(lam) -> SymFunc:
    """s_lam = sum_rho chi^lam(rho)/z_rho p_rho."""
    parts = tuple(lam.parts) if isinstance(lam, Partition) else tuple(lam)
    return SymFunc(dict(_schur_terms(parts)))


def homogeneous(n: int) -> SymFunc:
    """h_n = s_(n)."""
    return schur((n,)) if n else SymFunc.one()


def elementary(n: int) -> SymFunc:
    """e_n = s_(1^n)."""
    return schur((1,) * n) if n else SymFunc.one()


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """f o g; g must have no constant term."""
    if () in g._terms:
        raise ValueError("plethysm requires the inner function to have no constant term")

    @lru_cache(maxsize=None)
    def dilate(m: int) -> SymFunc:
        return SymFunc({tuple(m * x for x in parts): c for parts, c in g._terms.items()})

    out = SymFunc.zero()
    for rho, c in f._terms.items():
        term = SymFunc.one()
        for part in rho:
            term = term * dilate(part)
        out = out + term.scale(c)
    return out


def frobenius_ch(alpha: ClassFunction) -> SymFunc:
    """Characteristic map: ch(alpha) = sum_rho alpha(rho)/z_rho p_rho."""
    return SymFunc(
        {rho.parts: Fraction(alpha.values[rho], z_of(rho)) for rho in partitions_of(alpha.n)}
    )


def inverse_frobenius(f: SymFunc, n: int | None = None) -> ClassFunction:
    """Class function alpha with ch(alpha) = f; f must be homogeneous."""
    if n is None:
        n = f.degree()
    elif f and f.degree() != n:
        raise ValueError(f"degree {f.degree()} does not match n={n}")
    values = {}
    for rho in partitions_of(n):
        values[rho] = f.coefficient(rho) * z_of(rho)
    return ClassFunction(n, values)


def to_schur(f: SymFunc) -> dict[Partition, Fraction]:
    """Schur expansion; keys are partitions of each degree present in f."""
    out: dict[Partition, Fraction] = {}
    for d in sorted(f.degrees()):
        fd = f.homogeneous_part(d)
        table = character_table(d)
        for lam in partitions_of(d):
            chi = table[lam]
            coeff = sum(
                (c * chi.values[Partition(parts)] for parts, c in fd._terms.items()),
                Fraction(0),
            )
            if coeff:
                out[lam] = coeff
    return out


def schur_multiplicity(f: SymFunc, lam: Partition) -> Fraction:
    """<f, s_lam>, taken in the degree-|lam| part of f."""
    fd = f.homogeneous_part(lam.weight)
    chi = character_table(lam.weight)[lam]
    return sum(
        (c * chi.values[Partition(parts)] for parts, c in fd._terms.items()),
        Fraction(0),
    )


def sign_coefficient(f: SymFunc, degree: int | None = None) -> Fraction:
    """<f, s_(1^m)> via the sign character, no character table needed."""
    m = f.degree() if degree is None else degree
    total = Fraction(0)
    for parts, c in f.homogeneous_part(m)._terms.items():
        total += c * (-1) ** (m - len(parts))
    return total


def trivial_coefficient(f: SymFunc, degree: int | None = None) -> Fraction:
    """<f, s_(m)>: the plain sum of p-coefficients in degree m."""
    m = f.degree() if degree is None else degree
    return sum(f.homogeneous_part(m)._terms.values(), Fraction(0))


# ---------------------------------------------------------------------------
# monomial expansions (explicit polynomials in finitely many variables)
# ---------------------------------------------------------------------------

Poly = dict[tuple[int, ...], Fraction]


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _p_poly(k: int, nvars: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    out = []
    for i in range(nvars):
        exps = [0] * nvars
        exps[i] = k
        out.append((tuple(exps), Fraction(1)))
    return tuple(out)


def _expand_poly(f: SymFunc, nvars: int) -> Poly:
    poly: Poly = {}
    for parts, c in f._terms.items():
        term: Poly = {(0,) * nvars: Fraction(1)}
        for k in parts:
            term = _poly_mul(term, dict(_p_poly(k, nvars)))
        for e, v in term.items():
            poly[e] = poly.get(e, Fraction(0)) + c * v
    return {e: c for e, c in poly.items() if c}


def to_monomial(f: SymFunc) -> dict[Partition, Fraction]:
    """Monomial expansion, degree by degree, via polynomials in d variables."""
    out: dict[Partition, Fraction] = {}
    for d in sorted(f.degrees()):
        fd = f.homogeneous_part(d)
        if d == 0:
            out[Partition()] = fd._terms[()]
            continue
        poly = _expand_poly(fd, d)
        for lam in partitions_of(d):
            exps = tuple(lam.parts) + (0,) * (d - lam.length)
            c = poly.get(exps, Fraction(0))
            if c:
                out[lam] = c
    return out


@lru_cache(maxsize=None)
def kostka(lam_parts: tuple[int, ...], mu_parts: tuple[int, ...]) -> int:
    """Kostka number K_{lam,mu}: coefficient of m_mu in s_lam."""
    lam, mu = Partition(lam_parts), Partition(mu_parts)
    if lam.weight != mu.weight:
        raise ValueError("partitions must have equal weight")
    c = to_monomial(schur(lam)).get(mu, Fraction(0))
    if c.denominator != 1 or c < 0:
        raise IntegrityError(f"Kostka number came out as {c}")
    return int(c)


def plethysm_by_substitution(f: SymFunc, g: SymFunc, nvars: int | None = None) -> dict[Partition, Fraction]:
    """Independent plethysm oracle: substitute the monomials of g into f.

    Expands g as an honest polynomial in N variables (N defaults to
    deg(f)*deg(g), enough to be faithful), treats its monomials with
    multiplicity as a new alphabet, evaluates f on that alphabet, and reads
    off the monomial expansion.  Requires g to expand with positive integer
    coefficients.
    """
    df, dg = f.degree(), g.degree()
    target = df * dg
    if target == 0:
        return {Partition(): f._terms.get((), Fraction(0))}
    nvars = nvars or target
    gpoly = _expand_poly(g, nvars)
    alphabet: list[tuple[tuple[int, ...], int]] = []
    for exps, c in sorted(gpoly.items()):
        if c.denominator != 1 or c <= 0:
            raise ValueError("inner function is not monomial-positive")
        alphabet.append((exps, int(c)))

    @lru_cache(maxsize=None)
    def p_on_alphabet(k: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
        acc: Poly = {}
        for exps, mult in alphabet:
            key = tuple(k * x for x in exps)
            acc[key] = acc.get(key, Fraction(0)) + mult
        return tuple(acc.items())

    poly: Poly = {}
    for parts, c in f._terms.items():
        term: Poly = {(0,) * nvars: Fraction(1)}
        for k in parts:
            term = _poly_mul(term, dict(p_on_alphabet(k)))
        for e, v in term.items():
            poly[e] = poly.get(e, Fraction(0)) + c * v

    out: dict[Partition, Fraction] = {}
    for lam in partitions_of(target):
        if lam.length > nvars:
            continue
        exps = tuple(lam.parts) + (0,) * (nvars - lam.length)
        c = poly.get(exps, Fraction(0))
        if c:
            out[lam] = c
    return out


# ---------------------------------------------------------------------------
# structure coefficients and the two plethysm expansion rules
# ---------------------------------------------------------------------------

def littlewood_richardson(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu,nu} = <s_mu s_nu, s_lam>."""
    if mu.weight + nu.weight != lam.weight:
        return 0
    c = to_schur(schur(mu) * schur(nu)).get(lam, Fraction(0))
    if c.denominator != 1 or c < 0:
        raise IntegrityError(f"LR coefficient came out as {c}")
    return int(c)


def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """gamma^lam_{mu,nu} = <chi^lam, chi^mu chi^nu> (normalized, exact)."""
    n = lam.weight
    if mu.weight != n or nu.weight != n:
        return 0
    table = character_table(n)
    g = inner_product(table[lam], table[mu] * table[nu])
    if g.denominator != 1 or g < 0:
        raise IntegrityError(f"Kronecker coefficient came out as {g}")
    return int(g)


def plethysm_sum_rule(lam: Partition, g: SymFunc, h: SymFunc) -> SymFunc:
    """s_lam o (g + h) expanded through LR coefficients."""
    n = lam.weight
    out = SymFunc.zero()
    for a in range(n + 1):
        for mu in partitions_of(a):
            left = plethysm(schur(mu), g) if a else SymFunc.one()
            for nu in partitions_of(n - a):
                c = littlewood_richardson(lam, mu, nu)
                if not c:
                    continue
                right = plethysm(schur(nu), h) if n - a else SymFunc.one()
                out = out + (left * right).scale(c)
    return out


def plethysm_product_rule(lam: Partition, g: SymFunc, h: SymFunc) -> SymFunc:
    """s_lam o (g * h) expanded through Kronecker coefficients."""
    n = lam.weight
    out = SymFunc.zero()
    for mu in partitions_of(n):
        left = plethysm(schur(mu), g)
        for nu in partitions_of(n):
            c = kronecker(lam, mu, nu)
            if not c:
                continue
            right = plethysm(schur(nu), h)
            out = out + (left * right).scale(c)
    return out


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _coeff_prefix(c: Fraction) -> str:
    if c == 1:
        return ""
    if c == -1:
        return "-"
    return f"{c}*"


def format_symfunc(f: SymFunc, basis: str = "p") -> str:
    """Render in the p, s, or m basis, partitions in revlex order per degree."""
    if basis == "p":
        items = [(Partition(parts), c) for parts, c in f._terms.items()]
    elif basis == "s":
        items = list(to_schur(f).items())
    elif basis == "m":
        items = list(to_monomial(f).items())
    else:
        raise ValueError(f"unknown basis {basis!r}")
    if not items:
        return "0"
    items.sort(key=lambda ic: (ic[0].weight, tuple(-p for p in ic[0].parts)))
    pieces = []
    for lam, c in items:
        body = f"{_coeff_prefix(abs(c))}{basis}{lam.to_text()}" if lam.parts else f"{abs(c)}"
        pieces.append(("- " if c < 0 else ("+ " if pieces else "")) + body)
    return " ".join(pieces)


def symfunc_to_json(f: SymFunc, basis: str = "p") -> dict:
    if basis == "p":
        items = [(Partition(parts), c) for parts, c in f._terms.items()]
    elif basis == "s":
        items = list(to_schur(f).items())
    elif basis == "m":
        items = list(to_monomial(f).items())
    else:
        raise ValueError(f"unknown basis {basis!r}")
    items.sort(key=lambda ic: (ic[0].weight, tuple(-p for p in ic[0].parts)))
    return {
        "basis": basis,
        "terms": [
            {"partition": list(lam.parts), "coeff": str(c)} for lam, c in items
        ],
    }
