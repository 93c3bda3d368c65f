"""Linear algebra over C^{3,1} with the antidiagonal-cornered Hermitian form.

The ambient form is given by the real symmetric matrix J below;
``herm_inner(z, w) = w* J z`` (linear in ``z``, conjugate-linear in ``w``).
Everything downstream (element classification, the Cartan invariant, the
conjugation engine) works relative to this fixed J.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

J = np.array(
    [
        [0, 0, 0, 1],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [1, 0, 0, 0],
    ],
    dtype=complex,
)

DEFAULT_FORM_TOL = 1e-9


class NotInGroup(ValueError):
    """Matrix failed the SU(3,1) membership certificate."""

    def __init__(self, residual, tol, message=None):
        self.residual = residual
        self.tol = tol
        super().__init__(
            message or f"membership residual {residual:.3e} exceeds tolerance {tol:.3e}"
        )


def as_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(4)
    if not (np.all(np.isfinite(v.real)) and np.all(np.isfinite(v.imag))):
        raise ValueError("vector has non-finite entries")
    return v


def as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValueError("matrix has non-finite entries")
    return m


def herm_inner(z, w) -> complex:
    """<z, w> = w* J z = z1 conj(w4) + z2 conj(w2) + z3 conj(w3) + z4 conj(w1)."""
    z = as_vector(z)
    w = as_vector(w)
    return complex(np.conj(w) @ (J @ z))


def norm_max(m) -> float:
    return float(np.max(np.abs(m)))


def su31_residual(m) -> float:
    """max of the form-preservation and unit-determinant deviations."""
    m = as_matrix(m)
    form_dev = norm_max(m.conj().T @ J @ m - J)
    det_dev = abs(np.linalg.det(m) - 1.0)
    return max(form_dev, det_dev)


def is_su31(m, tol: float = DEFAULT_FORM_TOL):
    """Return (member?, residual) for the SU(3,1) certificate at ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    r = su31_residual(m)
    return r <= tol, r


def su31_inverse(m) -> np.ndarray:
    """Inverse of a J-isometry: M^{-1} = J M* J (exact up to the certificate)."""
    m = as_matrix(m)
    return J @ m.conj().T @ J


@dataclass(frozen=True)
class GroupElement:
    """A certified SU(3,1) matrix together with its word in the generators.

    ``word`` is a tuple of signed 1-based generator indices (+i for g_i,
    -i for g_i^{-1}); the empty tuple marks a generator or ad-hoc element.
    """

    entries: np.ndarray
    word: tuple = ()
    membership_residual: float = 0.0

    @classmethod
    def certify(cls, m, word: tuple = (), tol: float = DEFAULT_FORM_TOL) -> "GroupElement":
        m = as_matrix(m).copy()
        m.flags.writeable = False
        r = su31_residual(m)
        if r > tol:
            raise NotInGroup(r, tol)
        return cls(m, tuple(word), r)

    def inverse(self) -> "GroupElement":
        inv = su31_inverse(self.entries)
        inv.flags.writeable = False
        return GroupElement(inv, tuple(-i for i in reversed(self.word)),
                            su31_residual(inv))

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        prod = self.entries @ other.entries
        prod.flags.writeable = False
        return GroupElement(prod, self.word + other.word, su31_residual(prod))

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def conjugated_by(self, c: "GroupElement") -> np.ndarray:
        """c^{-1} @ self @ c as a raw matrix (used when moving coordinates)."""
        return su31_inverse(c.entries) @ self.entries @ c.entries


def identity_element() -> GroupElement:
    return GroupElement.certify(np.eye(4, dtype=complex))


@dataclass(frozen=True)
class BoundaryPoint:
    """Projective class of a J-null vector, lift scaled so its largest entry is 1."""

    lift: np.ndarray

    @classmethod
    def from_vector(cls, v, tol_null: float = 1e-7) -> "BoundaryPoint":
        v = as_vector(v)
        nrm2 = float(np.vdot(v, v).real)
        if nrm2 == 0.0:
            raise ValueError("zero vector does not define a boundary point")
        if abs(herm_inner(v, v)) > tol_null * nrm2:
            raise ValueError(
                f"vector is not J-null: |<v,v>| = {abs(herm_inner(v, v)):.3e}"
            )
        k = int(np.argmax(np.abs(v)))
        lift = v / v[k]
        lift.flags.writeable = False
        return cls(lift)

    def proportional_to(self, other: "BoundaryPoint", tol: float = 1e-9) -> bool:
        return proportionality_residual(self.lift, other.lift) <= tol


def proportionality_residual(v, w) -> float:
    """max |v_i w_j - v_j w_i| over pairs, scaled by the vector norms."""
    v = as_vector(v)
    w = as_vector(w)
    vw = np.outer(v, w)
    cross = vw - vw.T  # entries v_i w_j - v_j w_i
    scale = float(np.linalg.norm(v) * np.linalg.norm(w))
    if scale == 0.0:
        return 0.0
    return norm_max(cross) / scale


@dataclass(frozen=True)
class HorosphericalPoint:
    """Siegel-domain coordinates (z, u, v): z in C^2, u real, v >= 0 (v=0 on the boundary)."""

    z: np.ndarray
    u: float
    v: float = 0.0

    def __post_init__(self):
        z = np.asarray(self.z, dtype=complex).reshape(2)
        z.flags.writeable = False
        object.__setattr__(self, "z", z)
        if self.v < 0:
            raise ValueError("v must be nonnegative")


def siegel_embed(p: HorosphericalPoint) -> np.ndarray:
    """psi(z,u,v) = (-<<z,z>> - v + iu, sqrt(2) z1, sqrt(2) z2, 1)^t.

    Satisfies <psi(p), psi(p)> = -2v.
    """
    zz = float(np.vdot(p.z, p.z).real)
    return np.array(
        [-zz - p.v + 1j * p.u, np.sqrt(2) * p.z[0], np.sqrt(2) * p.z[1], 1.0],
        dtype=complex,
    )


def siegel_infinity() -> BoundaryPoint:
    return BoundaryPoint.from_vector([1, 0, 0, 0])


def siegel_origin() -> BoundaryPoint:
    return BoundaryPoint.from_vector([0, 0, 0, 1])


def heisenberg_mul(p, q):
    """Heisenberg group law on C^2 x R.

    (z,u)(z',u') = (z+z', u+u' + 2 Im<<z, z'>>) with <<a,b>> = sum a_i conj(b_i),
    the antisymmetric cocycle (so the group is nonabelian, neutral (0,0),
    inverse (-z,-u)).
    """
    z, u = p
    z2, u2 = q
    z = np.asarray(z, dtype=complex).reshape(2)
    z2 = np.asarray(z2, dtype=complex).reshape(2)
    twist = 2.0 * float(np.sum(z * np.conj(z2)).imag)
    return z + z2, float(u) + float(u2) + twist


def heisenberg_inverse(p):
    z, u = p
    return -np.asarray(z, dtype=complex).reshape(2), -float(u)


# names and positions of the entry symbols of a general SU(3,1) matrix
_ENTRY_NAMES = {
    "a": (0, 0), "b": (0, 1), "c": (0, 2), "d": (0, 3),
    "e": (1, 0), "f": (1, 1), "g": (1, 2), "h": (1, 3),
    "l": (2, 0), "m": (2, 1), "n": (2, 2), "p": (2, 3),
    "q": (3, 0), "r": (3, 1), "s": (3, 2), "t": (3, 3),
}


def matrix_entries(m) -> dict:
    m = as_matrix(m)
    return {name: complex(m[idx]) for name, idx in _ENTRY_NAMES.items()}


def verify_inverse_identities(b, tol: float = None):
    """The 20 entrywise identities equivalent to B B^{-1} = B^{-1} B = I.

    Returns a list of (name, residual) in a fixed order; every residual is
    |LHS - RHS| and vanishes for a genuine member. ``tol`` is advisory only:
    when given, the list is unchanged but an overall flag could be derived by
    the caller; this function is diagnostic and never raises.
    """
    if isinstance(b, GroupElement):
        m = b.entries
    else:
        m = as_matrix(b)
    E = matrix_entries(m)
    a, b_, c, d = E["a"], E["b"], E["c"], E["d"]
    e, f, g, h = E["e"], E["f"], E["g"], E["h"]
    l, mm, n, p = E["l"], E["m"], E["n"], E["p"]
    q, r, s, t = E["q"], E["r"], E["s"], E["t"]
    cj = np.conj
    checks = [
        ("a*conj(t)+b*conj(r)+c*conj(s)+d*conj(q)=1", a * cj(t) + b_ * cj(r) + c * cj(s) + d * cj(q), 1),
        ("a*conj(h)+b*conj(f)+c*conj(g)+d*conj(e)=0", a * cj(h) + b_ * cj(f) + c * cj(g) + d * cj(e), 0),
        ("a*conj(p)+b*conj(m)+c*conj(n)+d*conj(l)=0", a * cj(p) + b_ * cj(mm) + c * cj(n) + d * cj(l), 0),
        ("a*conj(d)+|b|^2+|c|^2+d*conj(a)=0", a * cj(d) + abs(b_) ** 2 + abs(c) ** 2 + d * cj(a), 0),
        ("e*conj(t)+f*conj(r)+g*conj(s)+h*conj(q)=0", e * cj(t) + f * cj(r) + g * cj(s) + h * cj(q), 0),
        ("e*conj(h)+|f|^2+|g|^2+h*conj(e)=1", e * cj(h) + abs(f) ** 2 + abs(g) ** 2 + h * cj(e), 1),
        ("e*conj(p)+f*conj(m)+g*conj(n)+h*conj(l)=0", e * cj(p) + f * cj(mm) + g * cj(n) + h * cj(l), 0),
        ("l*conj(t)+m*conj(r)+n*conj(s)+p*conj(q)=0", l * cj(t) + mm * cj(r) + n * cj(s) + p * cj(q), 0),
        ("l*conj(p)+|m|^2+|n|^2+p*conj(l)=1", l * cj(p) + abs(mm) ** 2 + abs(n) ** 2 + p * cj(l), 1),
        ("q*conj(t)+|r|^2+|s|^2+t*conj(q)=0", q * cj(t) + abs(r) ** 2 + abs(s) ** 2 + t * cj(q), 0),
        ("conj(t)a+conj(h)e+conj(p)l+conj(d)q=1", cj(t) * a + cj(h) * e + cj(p) * l + cj(d) * q, 1),
        ("conj(t)b+conj(h)f+conj(p)m+conj(d)r=0", cj(t) * b_ + cj(h) * f + cj(p) * mm + cj(d) * r, 0),
        ("conj(t)c+conj(h)g+conj(p)n+conj(d)s=0", cj(t) * c + cj(h) * g + cj(p) * n + cj(d) * s, 0),
        ("conj(t)d+|h|^2+|p|^2+conj(d)t=0", cj(t) * d + abs(h) ** 2 + abs(p) ** 2 + cj(d) * t, 0),
        ("conj(r)a+conj(f)e+conj(m)l+conj(b)q=0", cj(r) * a + cj(f) * e + cj(mm) * l + cj(b_) * q, 0),
        ("conj(r)b+|f|^2+|m|^2+conj(b)r=1", cj(r) * b_ + abs(f) ** 2 + abs(mm) ** 2 + cj(b_) * r, 1),
        ("conj(r)c+conj(f)g+conj(m)n+conj(b)s=0", cj(r) * c + cj(f) * g + cj(mm) * n + cj(b_) * s, 0),
        ("conj(s)a+conj(g)e+conj(n)l+conj(c)q=0", cj(s) * a + cj(g) * e + cj(n) * l + cj(c) * q, 0),
        ("conj(s)c+|g|^2+|n|^2+conj(c)s=1", cj(s) * c + abs(g) ** 2 + abs(n) ** 2 + cj(c) * s, 1),
        ("conj(q)a+|e|^2+|l|^2+conj(a)q=0", cj(q) * a + abs(e) ** 2 + abs(l) ** 2 + cj(a) * q, 0),
    ]
    return [(name, abs(val - target)) for name, val, target in checks]


# ---------------------------------------------------------------------------
# shared JSON matrix/vector encoding: [re, im] number pairs, row-major
# ---------------------------------------------------------------------------

def complex_to_json(z: complex):
    return [float(np.real(z)), float(np.imag(z))]


def matrix_to_json(m) -> list:
    m = as_matrix(m)
    return [[complex_to_json(m[i, j]) for j in range(4)] for i in range(4)]


def matrix_from_json(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.shape != (4, 4, 2):
        raise ValueError(f"matrix JSON must be 4x4 arrays of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def vector_to_json(v) -> list:
    v = as_vector(v)
    return [complex_to_json(z) for z in v]


def vector_from_json(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.shape != (4, 2):
        raise ValueError(f"vector JSON must be 4 [re, im] pairs, got shape {arr.shape}")
    return arr[:, 0] + 1j * arr[:, 1]
