"""Shape-invariant potential families.

Every family is defined by a superpotential ``W(x; a)`` whose partner
potentials ``V_-(x; a) = W^2 - W'`` and ``V_+(x; a) = W^2 + W'`` satisfy

    V_+(x; a0) = V_-(x; a0 + beta) + R(a0)

for a constant translation ``beta`` of the parameters.  The spectrum of
``V_-`` then follows from the partial sums of ``R`` along ``a_k = a0 + k beta``.

Reports use the shifted potential ``V(x) = V_-(x) - min V_-``, whose minimum
is zero.  Units are ``hbar = 2m = 1``.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Mapping

import numpy as np
from scipy import integrate

from . import numerics
from .errors import OutOfDomain, ParamViolation, ShapeInvError

INF = math.inf
# a family whose levels never run out reports an unbounded level count
_LEVEL_SCAN_CAP = 1000


class WavefunctionOverflow(ShapeInvError, OverflowError):
    pass


# ---------------------------------------------------------------------------
# family definitions


class Family:
    """Analytic data for one family.  Subclasses fill in the formulas."""

    id: str = ""

    def domain(self, p):
        return (-INF, INF)

    def w(self, x, p):
        raise NotImplementedError

    def dw(self, x, p):
        raise NotImplementedError

    def step(self, p) -> dict:
        """Parameter translation ``beta`` (name -> increment)."""
        return {}

    def remainder(self, p) -> float:
        raise NotImplementedError

    def w_limits(self, p):
        """Limits of W at the lower and upper end of the domain."""
        raise NotImplementedError

    def check(self, p):
        """Raise ParamViolation outside the regime the family supports."""

    def center(self, p) -> float:
        """Rough location of the zero of W."""
        return 0.0

    def scale(self, p) -> float:
        """Characteristic length."""
        return 1.0


def _require(cond, msg):
    if not cond:
        raise ParamViolation(msg)


def _sech(x):
    return 1.0 / np.cosh(x)


class HarmonicOscillator(Family):
    id = "harmonic_oscillator"

    def w(self, x, p):
        return 0.5 * p["omega"] * x - p["c"]

    def dw(self, x, p):
        return 0.5 * p["omega"] + 0.0 * x

    def remainder(self, p):
        return p["omega"]

    def w_limits(self, p):
        return (-INF, INF)

    def check(self, p):
        _require(p["omega"] > 0, "omega must be positive")

    def center(self, p):
        return 2.0 * p["c"] / p["omega"]

    def scale(self, p):
        return math.sqrt(2.0 / p["omega"])


class RadialOscillator(Family):
    id = "radial_oscillator"

    def domain(self, p):
        return (0.0, INF)

    def w(self, r, p):
        return 0.5 * p["omega"] * r - (p["l"] + 1.0) / r

    def dw(self, r, p):
        return 0.5 * p["omega"] + (p["l"] + 1.0) / r**2

    def step(self, p):
        return {"l": 1.0}

    def remainder(self, p):
        return 2.0 * p["omega"]

    def w_limits(self, p):
        return (-INF, INF)

    def check(self, p):
        _require(p["omega"] > 0, "omega must be positive")
        # l = 0 leaves no centrifugal wall and the left turning point
        # would sit on the boundary
        _require(p["l"] > 0, "l must be positive")

    def center(self, p):
        return math.sqrt(2.0 * (p["l"] + 1.0) / p["omega"])

    def scale(self, p):
        return math.sqrt(2.0 / p["omega"])


class Coulomb(Family):
    id = "coulomb"

    def domain(self, p):
        return (0.0, INF)

    def w(self, r, p):
        l1 = p["l"] + 1.0
        return p["e2"] / (2.0 * l1) - l1 / r

    def dw(self, r, p):
        return (p["l"] + 1.0) / r**2

    def step(self, p):
        return {"l": 1.0}

    def remainder(self, p):
        l1 = p["l"] + 1.0
        return 0.25 * p["e2"] ** 2 * (1.0 / l1**2 - 1.0 / (l1 + 1.0) ** 2)

    def w_limits(self, p):
        return (-INF, p["e2"] / (2.0 * (p["l"] + 1.0)))

    def check(self, p):
        _require(p["e2"] > 0, "e2 must be positive")
        _require(p["l"] > 0, "l must be positive")

    def center(self, p):
        return 2.0 * (p["l"] + 1.0) ** 2 / p["e2"]

    def scale(self, p):
        return self.center(p)


class Morse(Family):
    id = "morse"

    def w(self, x, p):
        return p["A"] - p["B"] * np.exp(-p["alpha"] * x)

    def dw(self, x, p):
        return p["alpha"] * p["B"] * np.exp(-p["alpha"] * x)

    def step(self, p):
        return {"A": -p["alpha"]}

    def remainder(self, p):
        return p["A"] ** 2 - (p["A"] - p["alpha"]) ** 2

    def w_limits(self, p):
        return (-INF, p["A"])

    def check(self, p):
        _require(p["alpha"] > 0, "alpha must be positive")
        _require(p["B"] > 0, "B must be positive")

    def center(self, p):
        return math.log(p["B"] / abs(p["A"])) / p["alpha"]

    def scale(self, p):
        return 1.0 / p["alpha"]


class Scarf2(Family):
    id = "scarf_2"

    def w(self, x, p):
        ax = p["alpha"] * x
        return p["A"] * np.tanh(ax) + p["B"] * _sech(ax)

    def dw(self, x, p):
        ax = p["alpha"] * x
        s = _sech(ax)
        return p["alpha"] * s * (p["A"] * s - p["B"] * np.tanh(ax))

    def step(self, p):
        return {"A": -p["alpha"]}

    def remainder(self, p):
        return p["A"] ** 2 - (p["A"] - p["alpha"]) ** 2

    def w_limits(self, p):
        return (-p["A"], p["A"])

    def check(self, p):
        _require(p["alpha"] > 0, "alpha must be positive")

    def center(self, p):
        if p["A"] <= 0:
            return 0.0
        return -math.asinh(p["B"] / p["A"]) / p["alpha"]

    def scale(self, p):
        return 1.0 / p["alpha"]


class RosenMorse2(Family):
    id = "rosen_morse_2"

    def w(self, x, p):
        return p["A"] * np.tanh(p["alpha"] * x) + p["B"] / p["A"]

    def dw(self, x, p):
        return p["A"] * p["alpha"] * _sech(p["alpha"] * x) ** 2

    def step(self, p):
        return {"A": -p["alpha"]}

    def remainder(self, p):
        a0, a1, b = p["A"], p["A"] - p["alpha"], p["B"]
        return a0**2 - a1**2 + b**2 / a0**2 - b**2 / a1**2

    def w_limits(self, p):
        a, b = p["A"], p["B"]
        if a <= 0:
            return (math.nan, math.nan)
        return (-a + b / a, a + b / a)

    def check(self, p):
        _require(p["alpha"] > 0, "alpha must be positive")
        _require(p["A"] > 0, "A must be positive")

    def center(self, p):
        t = -p["B"] / p["A"] ** 2
        return math.atanh(max(-0.999999, min(0.999999, t))) / p["alpha"]

    def scale(self, p):
        return 1.0 / p["alpha"]


class Eckart(Family):
    id = "eckart"

    def domain(self, p):
        return (0.0, INF)

    def w(self, r, p):
        return -p["A"] / np.tanh(p["alpha"] * r) + p["B"] / p["A"]

    def dw(self, r, p):
        return p["A"] * p["alpha"] / np.sinh(p["alpha"] * r) ** 2

    def step(self, p):
        return {"A": p["alpha"]}

    def remainder(self, p):
        a0, a1, b = p["A"], p["A"] + p["alpha"], p["B"]
        return a0**2 - a1**2 + b**2 / a0**2 - b**2 / a1**2

    def w_limits(self, p):
        return (-INF, -p["A"] + p["B"] / p["A"])

    def check(self, p):
        _require(p["alpha"] > 0, "alpha must be positive")
        # A > alpha keeps the A(A - alpha) cosech^2 wall repulsive
        _require(p["A"] > p["alpha"], "A must exceed alpha")

    def center(self, p):
        t = p["A"] ** 2 / p["B"] if p["B"] > 0 else 0.5
        return math.atanh(min(t, 0.999999)) / p["alpha"]

    def scale(self, p):
        return 1.0 / p["alpha"]


class Scarf1(Family):
    id = "scarf_1"

    def domain(self, p):
        half = 0.5 * math.pi / p["alpha"]
        return (-half, half)

    def w(self, x, p):
        ax = p["alpha"] * x
        return (p["A"] * np.sin(ax) - p["B"]) / np.cos(ax)

    def dw(self, x, p):
        ax = p["alpha"] * x
        c = np.cos(ax)
        return p["alpha"] * (p["A"] - p["B"] * np.sin(ax)) / c**2

    def step(self, p):
        return {"A": p["alpha"]}

    def remainder(self, p):
        return (p["A"] + p["alpha"]) ** 2 - p["A"] ** 2

    def w_limits(self, p):
        return (-INF, INF)

    def check(self, p):
        _require(p["alpha"] > 0, "alpha must be positive")
        _require(p["A"] - abs(p["B"]) > p["alpha"], "need A - |B| > alpha")

    def center(self, p):
        return math.asin(p["B"] / p["A"]) / p["alpha"]

    def scale(self, p):
        return 0.1 / p["alpha"]


class RosenMorse1(Family):
    id = "rosen_morse_1"

    def domain(self, p):
        return (0.0, math.pi / p["alpha"])

    def w(self, x, p):
        ax = p["alpha"] * x
        return -p["A"] * np.cos(ax) / np.sin(ax) - p["B"] / p["A"]

    def dw(self, x, p):
        return p["A"] * p["alpha"] / np.sin(p["alpha"] * x) ** 2

    def step(self, p):
        return {"A": p["alpha"]}

    def remainder(self, p):
        a0, a1, b = p["A"], p["A"] + p["alpha"], p["B"]
        return a1**2 - a0**2 + b**2 / a0**2 - b**2 / a1**2

    def w_limits(self, p):
        return (-INF, INF)

    def check(self, p):
        _require(p["alpha"] > 0, "alpha must be positive")
        _require(p["A"] > p["alpha"], "A must exceed alpha")

    def center(self, p):
        return (0.5 * math.pi + math.atan(p["B"] / p["A"] ** 2)) / p["alpha"]

    def scale(self, p):
        return 0.1 / p["alpha"]


class GeneralizedPoschlTeller(Family):
    id = "generalized_poschl_teller"

    def domain(self, p):
        return (0.0, INF)

    def w(self, r, p):
        ar = p["alpha"] * r
        return (p["A"] * np.cosh(ar) - p["B"]) / np.sinh(ar)

    def dw(self, r, p):
        ar = p["alpha"] * r
        s = np.sinh(ar)
        return p["alpha"] * (p["B"] * np.cosh(ar) - p["A"]) / s**2

    def step(self, p):
        return {"A": -p["alpha"]}

    def remainder(self, p):
        return p["A"] ** 2 - (p["A"] - p["alpha"]) ** 2

    def w_limits(self, p):
        return (-INF if p["B"] > p["A"] else INF, p["A"])

    def check(self, p):
        _require(p["alpha"] > 0, "alpha must be positive")
        _require(p["B"] - p["A"] > p["alpha"], "need B - A > alpha")

    def center(self, p):
        if p["A"] <= 0:
            return 1.0 / p["alpha"]
        return math.acosh(p["B"] / p["A"]) / p["alpha"]

    def scale(self, p):
        return 1.0 / p["alpha"]


_FAMILY_CLASSES = (
    HarmonicOscillator, RadialOscillator, Coulomb, Morse, Scarf2,
    RosenMorse2, Eckart, Scarf1, RosenMorse1, GeneralizedPoschlTeller,
)
FAMILIES: Mapping[str, Family] = MappingProxyType(
    {cls.id: cls() for cls in _FAMILY_CLASSES})


# ---------------------------------------------------------------------------
# declarative metadata


@dataclass(frozen=True)
class FamilyInfo:
    id: str
    name: str
    superpotential: str
    domain: str
    defaults: Mapping[str, float]
    translation: str
    constraints: str
    spectrum: str


def _parse_params(text):
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, val = item.partition("=")
        out[key.strip()] = float(val)
    return out


def load_family_info(text: str | None = None) -> dict[str, FamilyInfo]:
    """Parse the family table (``families.cfg`` by default)."""
    if text is None:
        text = resources.files(__package__).joinpath("families.cfg").read_text()
    cfg = configparser.ConfigParser(interpolation=None)
    cfg.read_string(text)
    info = {}
    for fid in cfg.sections():
        sec = cfg[fid]
        info[fid] = FamilyInfo(
            id=fid,
            name=sec["name"],
            superpotential=sec["superpotential"],
            domain=sec["domain"],
            defaults=MappingProxyType(_parse_params(sec["params"])),
            translation=sec.get("translation", ""),
            constraints=sec.get("constraints", ""),
            spectrum=sec.get("spectrum", ""),
        )
    return info


FAMILY_INFO: Mapping[str, FamilyInfo] = MappingProxyType(load_family_info())


def list_families() -> list[str]:
    return list(FAMILY_INFO)


# ---------------------------------------------------------------------------
# parameter sets and specs


@dataclass(frozen=True)
class ParamSet:
    """Parameter values ``a0`` plus the translation step ``beta``."""

    values: Mapping[str, float]
    step: Mapping[str, float] = field(default_factory=dict)

    def __getitem__(self, key):
        return self.values[key]

    def translated(self, k: int) -> "ParamSet":
        vals = dict(self.values)
        for key, inc in self.step.items():
            vals[key] = vals[key] + k * inc
        return ParamSet(MappingProxyType(vals), self.step)

    def as_dict(self) -> dict:
        return dict(self.values)


@dataclass(frozen=True)
class PotentialSpec:
    """One family at one parameter point, with its derived data.

    Build with :func:`make_spec`; ``v_minus_min``, ``x_at_min`` and
    ``max_level`` are computed there.
    """

    family_id: str
    params: ParamSet
    domain: tuple
    v_minus_min: float
    x_at_min: float
    max_level: int | None  # None: infinitely many bound states
    w_zero: float

    @property
    def family(self) -> Family:
        return FAMILIES[self.family_id]

    @property
    def scale(self) -> float:
        return self.family.scale(self.params)

    def W(self, x):
        return self.family.w(x, self.params)

    def dW(self, x):
        return self.family.dw(x, self.params)

    def has_level(self, n: int) -> bool:
        return n >= 0 and (self.max_level is None or n < self.max_level)

    def continuum(self) -> float:
        """Lowest asymptotic value of V (the shifted potential), or inf."""
        lo, hi = self.domain
        lims = self.family.w_limits(self.params)
        out = INF
        for end, wl in zip((lo, hi), lims):
            if math.isinf(end) and math.isfinite(wl):
                out = min(out, wl * wl - self.v_minus_min)
        return out

    def is_wall(self, side: int) -> bool:
        """Whether the lower (0) or upper (1) domain end is finite."""
        return math.isfinite(self.domain[side])


def _unbroken(fam, p):
    lo, hi = fam.w_limits(p)
    return lo < 0 < hi


def count_levels(family_id: str, params: Mapping[str, float]) -> int | None:
    """Number of bound states: the count of ``n`` for which ``a_n`` still has
    unbroken supersymmetry (W negative at the lower end, positive at the
    upper end).  ``None`` when no such ``n`` is found below a large cap."""
    fam = FAMILIES[family_id]
    ps = ParamSet(MappingProxyType(dict(params)), fam.step(params))
    for n in range(_LEVEL_SCAN_CAP):
        if not _unbroken(fam, ps.translated(n)):
            return n
    return None


def resolve_params(family_id: str, overrides: Mapping[str, float] | None = None
                   ) -> dict:
    if family_id not in FAMILIES:
        raise KeyError(
            f"unknown family {family_id!r}; choose from {', '.join(FAMILIES)}")
    vals = dict(FAMILY_INFO[family_id].defaults)
    for key, val in (overrides or {}).items():
        if key not in vals:
            raise KeyError(
                f"{family_id} has no parameter {key!r}; "
                f"valid: {', '.join(vals)}")
        vals[key] = float(val)
    return vals


def make_spec(family_id: str, params: Mapping[str, float] | None = None
              ) -> PotentialSpec:
    """Build a :class:`PotentialSpec`, locating the minimum of ``V_-``."""
    vals = resolve_params(family_id, params)
    fam = FAMILIES[family_id]
    fam.check(vals)
    if not _unbroken(fam, vals):
        raise ParamViolation(
            f"{family_id} at {vals}: supersymmetry is broken "
            f"(W limits {fam.w_limits(vals)})")
    ps = ParamSet(MappingProxyType(vals), MappingProxyType(fam.step(vals)))
    domain = fam.domain(ps)
    x0 = _w_zero(fam, ps, domain)
    xm = _argmin_vminus(fam, ps, domain, x0)
    vmin = float(fam.w(xm, ps) ** 2 - fam.dw(xm, ps))
    return PotentialSpec(family_id, ps, domain, vmin, xm,
                         count_levels(family_id, vals), x0)


def outward(x0: float, end: float, scale: float):
    """Points moving from ``x0`` towards ``end`` (which may be infinite):
    doubling steps on an infinite side, halving gaps near a finite end."""
    if math.isinf(end):
        sign = 1.0 if end > 0 else -1.0
        step = 0.25 * scale
        for _ in range(2000):
            yield x0 + sign * step
            step *= 2.0
            if step > 1e6 * scale:
                return
    else:
        for j in range(1, 60):
            yield end + (x0 - end) * 0.5**j


def _w_zero(fam, p, domain):
    lo, hi = domain
    scale = fam.scale(p)
    x0 = fam.center(p)
    if not lo < x0 < hi:
        x0 = 0.5 * (lo + hi) if math.isfinite(lo + hi) else (
            lo + scale if math.isfinite(lo) else hi - scale)
    f = lambda x: float(fam.w(x, p))
    f0 = f(x0)
    if f0 == 0:
        return x0
    end = lo if f0 > 0 else hi
    for x1 in outward(x0, end, scale):
        if np.sign(f(x1)) != np.sign(f0):
            break
    else:
        raise ParamViolation("W has no sign change on the domain")
    a, b = sorted((x0, x1))
    return numerics.find_root(f, numerics.Bracket.of(f, a, b), 1e-14)


def _argmin_vminus(fam, p, domain, x0):
    scale = fam.scale(p)
    lo, hi = domain
    left = max(x0 - 30.0 * scale, lo + 1e-6 * scale)
    right = min(x0 + 30.0 * scale, hi - 1e-6 * scale)
    xs = np.linspace(left, right, 4001)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        vs = fam.w(xs, p) ** 2 - fam.dw(xs, p)
    vs = np.where(np.isfinite(vs), vs, np.inf)
    i = min(max(int(np.argmin(vs)), 1), xs.size - 2)
    vm = lambda x: float(fam.w(x, p) ** 2 - fam.dw(x, p))
    xm = numerics.golden_minimize(vm, xs[i - 1], xs[i + 1], rel_tol=1e-12)
    # golden section stalls at ~sqrt(eps); polish on the slope of V_-
    h = 1e-5 * scale
    slope = lambda x: numerics.derivative(vm, x, h)
    a, b = xm - 1e-6 * scale, xm + 1e-6 * scale
    if slope(a) < 0 < slope(b):
        xm = numerics.find_root(slope, numerics.Bracket.of(slope, a, b), 1e-15)
    return xm


# ---------------------------------------------------------------------------
# operations


def _check_domain(spec, x):
    lo, hi = spec.domain
    arr = np.asarray(x)
    if not np.all((arr > lo) & (arr < hi)):
        raise OutOfDomain(f"x={x} outside {spec.family_id} domain ({lo}, {hi})")


def v_minus(spec: PotentialSpec, x, k: int = 0):
    """``W^2 - W'``, at the ``k``-times translated parameters if ``k > 0``."""
    _check_domain(spec, x)
    p = spec.params.translated(k) if k else spec.params
    return spec.family.w(x, p) ** 2 - spec.family.dw(x, p)


def v_plus(spec: PotentialSpec, x, k: int = 0):
    _check_domain(spec, x)
    p = spec.params.translated(k) if k else spec.params
    return spec.family.w(x, p) ** 2 + spec.family.dw(x, p)


def potential(spec: PotentialSpec, x):
    """The shifted potential ``V = V_- - min V_-``."""
    return v_minus(spec, x) - spec.v_minus_min


def remainder(spec: PotentialSpec, k: int = 0) -> float:
    """``R(a_k)``, the additive constant in ``V_+(a_k) = V_-(a_{k+1}) + R``."""
    if k < 0 or not spec.has_level(k):
        raise ParamViolation(
            f"a_{k} leaves the bound-state regime of {spec.family_id} "
            f"(levels: {spec.max_level})")
    return float(spec.family.remainder(spec.params.translated(k)))


@dataclass(frozen=True)
class SpectrumEntry:
    n: int
    e_minus: float
    e_shifted: float


def exact_spectrum(spec: PotentialSpec, n_max: int) -> list[SpectrumEntry]:
    """Levels ``0..n_max`` from the telescoping sum of remainders."""
    if not spec.has_level(n_max):
        raise ParamViolation(
            f"{spec.family_id} has {spec.max_level} bound states; "
            f"n={n_max} does not exist")
    out = []
    e = 0.0
    for n in range(n_max + 1):
        out.append(SpectrumEntry(n, e, e - spec.v_minus_min))
        e += remainder(spec, n) if n < n_max else 0.0
    return out


def exact_energy(spec: PotentialSpec, n: int) -> float:
    """Exact level ``n`` on the shifted (``V_min = 0``) scale."""
    return exact_spectrum(spec, n)[-1].e_shifted


def ground_state_wavefunction(spec: PotentialSpec, x: float) -> float:
    """``exp(-int_{x_min}^x W)``, unnormalised, equal to 1 at ``x_at_min``."""
    _check_domain(spec, x)
    x = float(x)
    if x == spec.x_at_min:
        return 1.0
    expo, _ = integrate.quad(lambda t: float(spec.W(t)), spec.x_at_min, x,
                             epsabs=1e-13, epsrel=1e-13, limit=200)
    if abs(expo) > 700.0:
        raise WavefunctionOverflow(
            f"|exponent| = {abs(expo):.1f} at x={x} exceeds 700")
    return math.exp(-expo)
