"""Exact polynomial algebra over Q[s, tau] and the Airy differential ring.

Everything here is exact (``fractions.Fraction`` coefficients); there is no
floating-point fallback.  Derivatives are always taken in ``s``; ``tau`` is a
constant parameter.

Three expression types live on top of :class:`BiPoly`:

* :class:`AiryLinear` -- ``sum_k c_k Ai^(k) + c_AI AI_0``, used for the
  wave-function expansions and their termwise integration;
* :class:`AiryCombo` -- the quadratic basis
  ``Ai^2, Ai'^2, Ai Ai', Ai AI_nu, Ai' AI_nu`` of the density expansions.
  ``Ai, Ai', AI_nu`` are algebraically independent over C(s), so coefficients
  on distinct basis labels are never merged;
* the generating-function polynomials ``P_{beta,j,k}``, handled by
  :func:`omega_from_P` and :func:`reconstruct_P`.
"""

from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

from .errors import (
    DomainError,
    InconsistentSystemError,
    NonIntegrableTermError,
    UnsupportedOrderError,
)


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("BiPoly coefficients must be exact (int, Fraction or 'a/b' string)")
    return Fraction(c)


class BiPoly:
    """Sparse polynomial in (s, tau) with rational coefficients.

    Stored as ``{(deg_s, deg_tau): Fraction}`` with no zero entries, so
    equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = _frac(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def s(cls):
        return cls({(1, 0): 1})

    @classmethod
    def tau(cls):
        return cls({(0, 1): 1})

    @staticmethod
    def coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction, str)):
            return BiPoly.const(other)
        return NotImplemented

    # ring operations -------------------------------------------------------
    def __add__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return BiPoly.coerce(other) - self

    def __mul__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _frac(other)
        return BiPoly({k: v / c for k, v in self.terms.items()})

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        out = BiPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"BiPoly({self.render()!r})"

    # calculus and structure ----------------------------------------------
    def diff_s(self):
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i > 0})

    @property
    def deg_s(self):
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_tau(self):
        return max((j for _, j in self.terms), default=-1)

    def subs_tau(self, value):
        """Substitute an exact value for tau."""
        value = _frac(value)
        out = {}
        for (i, j), c in self.terms.items():
            out[(i, 0)] = out.get((i, 0), 0) + c * value ** j
        return BiPoly(out)

    def coeff_s(self, i):
        """Coefficient of s^i as a polynomial in tau (a BiPoly with deg_s <= 0)."""
        return BiPoly({(0, j): c for (ii, j), c in self.terms.items() if ii == i})

    def tau_slice(self, j):
        """Dict {deg_s: Fraction} of the tau^j component."""
        return {i: c for (i, jj), c in self.terms.items() if jj == j}

    def __call__(self, s, tau=0.0):
        s = np.asarray(s, dtype=float)
        out = np.zeros_like(s + tau * 0.0)
        for (i, j), c in self.terms.items():
            out = out + float(c) * s ** i * tau ** j
        return out[()] if out.ndim == 0 else out

    # text ------------------------------------------------------------------
    def render(self):
        """Canonical text: terms by (deg_s, deg_tau) descending, coefficients a/b."""
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            c = self.terms[(i, j)]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            factors = []
            if mag != 1 or (i == 0 and j == 0):
                factors.append(str(mag))
            if i:
                factors.append("s" if i == 1 else f"s^{i}")
            if j:
                factors.append("tau" if j == 1 else f"tau^{j}")
            parts.append((sign, "*".join(factors)))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    _TERM = re.compile(
        r"^(?:(?P<c>\d+(?:/\d+)?))?\*?(?P<s>s(?:\^(?P<si>\d+))?)?\*?(?P<t>tau(?:\^(?P<ti>\d+))?)?$"
    )

    @classmethod
    def parse(cls, text):
        """Inverse of :meth:`render`."""
        text = text.strip()
        if text == "0":
            return cls()
        tokens = text.replace(" - ", " + -").split(" + ")
        out = {}
        for tok in tokens:
            tok = tok.strip()
            sign = 1
            if tok.startswith("-"):
                sign, tok = -1, tok[1:]
            m = cls._TERM.match(tok)
            if not m or not tok:
                raise ValueError(f"cannot parse term {tok!r}")
            c = Fraction(m.group("c")) if m.group("c") else Fraction(1)
            i = (int(m.group("si") or 1)) if m.group("s") else 0
            j = (int(m.group("ti") or 1)) if m.group("t") else 0
            out[(i, j)] = out.get((i, j), 0) + sign * c
        return cls(out)


S = BiPoly.s()
TAU = BiPoly.tau()
ZERO = BiPoly()
ONE = BiPoly.const(1)


def poly_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_diff_s(a):
    return a.diff_s()


# --------------------------------------------------------------------------
# Linear Airy expressions
# --------------------------------------------------------------------------

class AiryLinear:
    """``sum_k coeffs[k] * Ai^(k) + ai_int * AI_0`` with BiPoly coefficients."""

    __slots__ = ("coeffs", "ai_int")

    def __init__(self, coeffs=None, ai_int=None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}
        self.ai_int = ai_int if ai_int is not None else ZERO

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return AiryLinear(out, self.ai_int + other.ai_int)

    def __sub__(self, other):
        return self + other.scale(BiPoly.const(-1))

    def scale(self, c):
        return AiryLinear({k: v * c for k, v in self.coeffs.items()}, self.ai_int * c)

    def __eq__(self, other):
        return self.coeffs == other.coeffs and self.ai_int == other.ai_int

    def __repr__(self):
        body = ", ".join(f"Ai^({k}): {c.render()}" for k, c in sorted(self.coeffs.items()))
        return f"AiryLinear({body}; AI: {self.ai_int.render()})"

    @property
    def max_order(self):
        return max(self.coeffs, default=-1)

    def diff(self):
        """d/ds, with AI_0' = Ai."""
        out = {}
        for k, c in self.coeffs.items():
            out[k + 1] = out.get(k + 1, ZERO) + c
            dc = c.diff_s()
            if dc:
                out[k] = out.get(k, ZERO) + dc
        out[0] = out.get(0, ZERO) + self.ai_int
        return AiryLinear(out, self.ai_int.diff_s())

    def pair(self):
        """(coefficient of Ai, coefficient of Ai') of a reduced expression."""
        if self.max_order > 1:
            raise DomainError("expression is not reduced")
        return self.coeffs.get(0, ZERO), self.coeffs.get(1, ZERO)


def airy_reduce(e):
    """Canonical form with derivative order <= 1, via Ai'' = s Ai.

    Ai^(k) = (s Ai)^(k-2) = s Ai^(k-2) + (k-2) Ai^(k-3) for k >= 2.
    """
    coeffs = dict(e.coeffs)
    while coeffs and max(coeffs) >= 2:
        k = max(coeffs)
        c = coeffs.pop(k)
        coeffs[k - 2] = coeffs.get(k - 2, ZERO) + c * S
        if k >= 3 and k - 2:
            coeffs[k - 3] = coeffs.get(k - 3, ZERO) + c * (k - 2)
        coeffs = {kk: v for kk, v in coeffs.items() if v}
    return AiryLinear(coeffs, e.ai_int)


def airy_raise(e):
    """Absorb polynomial prefactors into derivatives:

    s^j Ai^(k) = s^(j-1) Ai^(k+2) - k s^(j-1) Ai^(k-1),

    repeated until every coefficient is free of s.
    """
    coeffs = dict(e.coeffs)
    while True:
        dirty = [k for k, c in coeffs.items() if c.deg_s >= 1]
        if not dirty:
            return AiryLinear(coeffs, e.ai_int)
        k = min(dirty)
        c = coeffs.pop(k)
        keep = BiPoly({key: v for key, v in c.terms.items() if key[0] == 0})
        lowered = BiPoly({(i - 1, j): v for (i, j), v in c.terms.items() if i >= 1})
        if keep:
            coeffs[k] = coeffs.get(k, ZERO) + keep
        coeffs[k + 2] = coeffs.get(k + 2, ZERO) + lowered
        if k >= 1:
            coeffs[k - 1] = coeffs.get(k - 1, ZERO) - lowered * k
        coeffs = {kk: v for kk, v in coeffs.items() if v}


def integrate_wave_term(p, q):
    """Antiderivative of ``p Ai + q Ai'`` vanishing at +inf, as ``P Ai + Q Ai'``.

    The term is rewritten as ``sum c_k Ai^(k)`` with s-free ``c_k``,
    antidifferentiated termwise (``Ai^(k) -> Ai^(k-1)``) and reduced again.
    A surviving ``Ai^(0)`` would integrate to ``AI_0``; that is not allowed
    for correction terms and raises :class:`NonIntegrableTermError`.
    """
    raised = airy_raise(AiryLinear({0: p, 1: q}))
    if raised.coeffs.get(0):
        raise NonIntegrableTermError(
            f"AI_0 residual {raised.coeffs[0].render()} in correction term"
        )
    anti = AiryLinear({k - 1: c for k, c in raised.coeffs.items()})
    return airy_reduce(anti).pair()


# --------------------------------------------------------------------------
# Quadratic Airy combinations
# --------------------------------------------------------------------------

LABELS = ("Ai^2", "Ai'^2", "Ai*Ai'", "Ai*AI", "Ai'*AI")

# d/ds of each basis element, expressed in the basis (coefficients in Q[s]).
_BASIS_DIFF = {
    "Ai^2": {"Ai*Ai'": 2 * ONE},
    "Ai'^2": {"Ai*Ai'": 2 * S},
    "Ai*Ai'": {"Ai'^2": ONE, "Ai^2": S},
    "Ai*AI": {"Ai'*AI": ONE, "Ai^2": ONE},
    "Ai'*AI": {"Ai*AI": S, "Ai*Ai'": ONE},
}


class AiryCombo:
    """``sum_label coeffs[label] * basis(label)`` with AI = AI_nu."""

    __slots__ = ("coeffs", "nu")

    def __init__(self, coeffs=None, nu=0):
        coeffs = dict(coeffs or {})
        for label in coeffs:
            if label not in LABELS:
                raise DomainError(f"unknown basis label {label!r} (AI^2 is not part of the basis)")
        if nu not in (0, 1):
            raise DomainError("nu must be 0 or 1")
        self.coeffs = {k: BiPoly.coerce(v) for k, v in coeffs.items() if BiPoly.coerce(v)}
        self.nu = nu

    def get(self, label):
        return self.coeffs.get(label, ZERO)

    def __add__(self, other):
        if self.nu != other.nu and (self.has_ai_int() and other.has_ai_int()):
            raise DomainError("cannot add combinations with different AI offsets")
        nu = self.nu if self.has_ai_int() else other.nu
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return AiryCombo(out, nu)

    def __sub__(self, other):
        return self + other.scale(BiPoly.const(-1))

    def scale(self, c):
        c = BiPoly.coerce(c)
        return AiryCombo({k: v * c for k, v in self.coeffs.items()}, self.nu)

    def has_ai_int(self):
        return bool(self.get("Ai*AI") or self.get("Ai'*AI"))

    def with_nu(self, nu):
        return AiryCombo(self.coeffs, nu)

    def diff(self):
        """d/ds using Ai'' = s Ai and AI' = Ai."""
        out = {}
        for label, c in self.coeffs.items():
            dc = c.diff_s()
            if dc:
                out[label] = out.get(label, ZERO) + dc
            for lab2, factor in _BASIS_DIFF[label].items():
                out[lab2] = out.get(lab2, ZERO) + c * factor
        return AiryCombo(out, self.nu)

    def subs_tau(self, value):
        return AiryCombo({k: v.subs_tau(value) for k, v in self.coeffs.items()}, self.nu)

    def __eq__(self, other):
        if not isinstance(other, AiryCombo):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.nu == other.nu or not self.has_ai_int())

    def __repr__(self):
        body = ", ".join(f"{k}: {self.coeffs[k].render()}" for k in LABELS if k in self.coeffs)
        return f"AiryCombo({{{body}}}, nu={self.nu})"

    def evaluate(self, s, tau, basis):
        """Numeric value given basis = (Ai, Ai', AI_0) arrays at s."""
        ai, aip, aint0 = basis
        aint = aint0 + self.nu
        values = {
            "Ai^2": ai * ai,
            "Ai'^2": aip * aip,
            "Ai*Ai'": ai * aip,
            "Ai*AI": ai * aint,
            "Ai'*AI": aip * aint,
        }
        out = 0.0
        for label, c in self.coeffs.items():
            out = out + c(s, tau) * values[label]
        return out


def omega_leading(beta):
    """omega_{beta,0}: -s Ai^2 + Ai'^2, plus Ai AI_nu / 2 for beta = 1, 4."""
    coeffs = {"Ai^2": -S, "Ai'^2": ONE}
    if beta == 2:
        return AiryCombo(coeffs, 0)
    if beta in (1, 4):
        coeffs["Ai*AI"] = BiPoly.const(Fraction(1, 2))
        return AiryCombo(coeffs, 1 if beta == 1 else 0)
    raise DomainError(f"beta must be 1, 2 or 4, got {beta!r}")


def omega_derivatives(beta, kmax):
    """[omega_0, omega_0', ..., omega_0^(kmax)] by repeated differentiation."""
    out = [omega_leading(beta)]
    for _ in range(kmax):
        out.append(out[-1].diff())
    return out


def omega_from_P(beta, j, P):
    """omega_j = P_1' omega_0 + sum_{k=1}^{2j} (P_k + P_{k+1}') omega_0^(k),
    with P_{2j+1} = 0.  ``P`` lists P_1..P_{2j}."""
    if len(P) != 2 * j:
        raise DomainError(f"expected {2 * j} polynomials for j={j}, got {len(P)}")
    P = [BiPoly.coerce(x) for x in P]
    ders = omega_derivatives(beta, 2 * j)
    total = ders[0].scale(P[0].diff_s())
    for k in range(1, 2 * j + 1):
        nxt = P[k].diff_s() if k < 2 * j else ZERO
        total = total + ders[k].scale(P[k - 1] + nxt)
    return total


def _combo_vector(combo):
    """Flatten the tau-free part of a combo into {(label, deg_s): Fraction}."""
    vec = {}
    for label, c in combo.coeffs.items():
        for (i, j), v in c.terms.items():
            if j != 0:
                raise AssertionError("operator columns must be tau-free")
            vec[(label, i)] = v
    return vec


def _rref_solve(columns, rhs_list):
    """Exact solve of A c = b for several right-hand sides.

    ``columns`` is a list of sparse column vectors (dicts).  Returns a list of
    solution vectors, raising if A is rank deficient or a system is
    inconsistent.
    """
    rows = sorted({key for col in columns for key in col} | {key for b in rhs_list for key in b})
    ncol = len(columns)
    nrhs = len(rhs_list)
    mat = [
        [col.get(r, Fraction(0)) for col in columns] + [b.get(r, Fraction(0)) for b in rhs_list]
        for r in rows
    ]
    pivots = []
    row = 0
    for col in range(ncol):
        piv = next((r for r in range(row, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            raise InconsistentSystemError("linear system does not determine a unique solution")
        mat[row], mat[piv] = mat[piv], mat[row]
        pv = mat[row][col]
        mat[row] = [v / pv for v in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
    for r in range(row, len(mat)):
        if any(mat[r][ncol + t] != 0 for t in range(nrhs)):
            raise InconsistentSystemError("overdetermined system is inconsistent")
    return [[mat[i][ncol + t] for i in range(ncol)] for t in range(nrhs)]


def reconstruct_P(beta, j, omega, omega0=None):
    """Recover P_{beta,j,1..2j} from the density expansion term omega_{beta,j}.

    Comparing coefficients of the five (three for beta = 2) basis functions
    gives a linear system for the P_k.  The operator does not act on tau, so
    the system splits into one exact linear system in s per power of tau.
    Unknowns are ordered P_{2j}, ..., P_1 and eliminated in that order.
    Uniqueness is enforced: a rank-deficient or inconsistent system raises
    :class:`InconsistentSystemError`.
    """
    if j not in (1, 2):
        raise UnsupportedOrderError(f"reconstruction is tabulated for j in (1, 2), got {j}")
    if beta == 2 and j == 2:
        raise UnsupportedOrderError(
            "beta=2 yields three equations, which cannot determine the four P_{2,2,k}"
        )
    if beta == 4:
        return reconstruct_P(1, j, omega.with_nu(1), None if omega0 is None else omega0.with_nu(1))
    if beta not in (1, 2):
        raise DomainError(f"beta must be 1, 2 or 4, got {beta!r}")
    if omega0 is not None and omega0 != omega_leading(beta):
        raise InconsistentSystemError("omega0 does not match the leading-order term")
    if beta == 2 and omega.has_ai_int():
        raise InconsistentSystemError("beta=2 expansion terms carry no AI part")

    max_deg = max((c.deg_s for c in omega.coeffs.values()), default=0)
    dmax = max_deg + 4
    nunk = 2 * j
    columns, keys = [], []
    for k in range(nunk, 0, -1):
        for d in range(dmax + 1):
            P = [ZERO] * nunk
            P[k - 1] = BiPoly({(d, 0): 1})
            columns.append(_combo_vector(omega_from_P(beta, j, P)))
            keys.append((k, d))

    tmax = max((c.deg_tau for c in omega.coeffs.values()), default=0)
    rhs = []
    for t in range(max(tmax, 0) + 1):
        vec = {}
        for label, c in omega.coeffs.items():
            for i, v in c.tau_slice(t).items():
                vec[(label, i)] = v
        rhs.append(vec)
    sols = _rref_solve(columns, rhs)

    P = [dict() for _ in range(nunk)]
    for t, sol in enumerate(sols):
        for (k, d), v in zip(keys, sol):
            if v:
                P[k - 1][(d, t)] = v
    return [BiPoly(p) for p in P]
