"""Symbolic Grothendieck-ring layer: named generators, relation verification
against the fusion engine, quotient specializations, and ring comparison.

Every displayed relation is re-verified against module computations, never
assumed.  Where the source display is ambiguous (unbound binomial index,
naked g-powers that name no valid one-dimensional module, suppressed
half-power root choices) several readings are encoded and the verifier
reports which of them hold:

* ``printed`` readings take the displayed g-powers literally as classes of
  one-dimensional modules (inapplicable when no such module exists);
* ``proof`` readings encode the composition-factor lists that the proofs
  actually construct (i-shifted labels, chain splitting at the minimal r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraParams
from .cyclo import CycScalar, root_of_unity
from .fusion import (
    CanonLabel,
    FusionVector,
    NoIntegerSolution,
    candidate_simples,
    class_of,
    fuse,
)
from .modules import (
    SimpleLabel,
    WrongType,
    build_simple,
    kind_conditions,
    r_value,
)

__all__ = [
    "UnboundGenerator",
    "GRingElement",
    "Reading",
    "RelationReport",
    "gr_mul",
    "gr_pow",
    "cls",
    "one_dim_class",
    "chebyshev_z",
    "canonical_zr_label",
    "verify_relation",
    "SUITES",
    "run_suite",
    "GelakiContext",
    "radford_context",
    "compare_fusion_rings",
]


class UnboundGenerator(ValueError):
    """A named generator is undefined for the given beta-case."""


# -- ring elements -----------------------------------------------------------


class GRingElement:
    """Signed integer combination of simple classes of a fixed H_beta."""

    def __init__(self, p: AlgebraParams, entries=None):
        self.p = p
        self.entries: dict[CanonLabel, int] = {}
        if entries:
            for label, mult in entries.items():
                if mult:
                    self.entries[label] = self.entries.get(label, 0) + mult
            self.entries = {l: m for l, m in self.entries.items() if m}

    def __add__(self, other):
        out = GRingElement(self.p, dict(self.entries))
        for l, m in other.entries.items():
            out.entries[l] = out.entries.get(l, 0) + m
        out.entries = {l: m for l, m in out.entries.items() if m}
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int):
        return GRingElement(self.p, {l: k * m for l, m in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, GRingElement):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        raise TypeError("GRingElement is not hashable")

    def is_zero(self):
        return not self.entries

    def total_dim(self):
        return sum(m * l.dim for l, m in self.entries.items())

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda t: (t[0].kind, t[0].dim, t[0].fingerprint))

    def __repr__(self):
        if not self.entries:
            return "0"
        parts = []
        for l, m in self.sorted_items():
            parts.append((f"{m}*" if m != 1 else "") + str(l))
        return " + ".join(parts)

    def as_fusion_vector(self) -> FusionVector:
        if any(m < 0 for m in self.entries.values()):
            raise ValueError("negative multiplicities")
        return FusionVector(dict(self.entries))


def cls(p: AlgebraParams, label: SimpleLabel) -> GRingElement:
    """The class of a simple module as a ring element."""
    m = build_simple(p, label)
    return GRingElement(p, {class_of(p, m): 1})


def _fuse_cached(p: AlgebraParams, l1: CanonLabel, l2: CanonLabel) -> FusionVector:
    cache = getattr(p, "_fuse_cache", None)
    if cache is None:
        cache = {}
        p._fuse_cache = cache
    key = (l1, l2)
    if key not in cache:
        cache[key] = fuse(p, l1.display, l2.display)
    return cache[key]


def gr_mul(p: AlgebraParams, a: GRingElement, b: GRingElement) -> GRingElement:
    """Bilinear extension of fuse to signed combinations."""
    out = GRingElement(p)
    for l1, m1 in a.entries.items():
        for l2, m2 in b.entries.items():
            fv = _fuse_cached(p, l1, l2)
            for l, m in fv.entries.items():
                out.entries[l] = out.entries.get(l, 0) + m1 * m2 * m
    out.entries = {l: m for l, m in out.entries.items() if m}
    return out


def gr_pow(p: AlgebraParams, a: GRingElement, k: int) -> GRingElement:
    out = one(p)
    for _ in range(k):
        out = gr_mul(p, out, a)
    return out


def one(p: AlgebraParams) -> GRingElement:
    return cls(p, SimpleLabel("V0", p.one, p.one, p.one, 0))


def one_dim_class(p: AlgebraParams, lam) -> GRingElement:
    """Class of the 1-dimensional module a -> lam, b = c = 1 (raises WrongType
    via build_V0 when no such module exists for the beta-case)."""
    return cls(p, SimpleLabel("V0", lam, p.one, p.one, 0))


def g_class(p: AlgebraParams) -> GRingElement:
    """g = [V0(1,1,1;1)]; UnboundGenerator when that label names no module."""
    try:
        return cls(p, SimpleLabel("V0", p.one, p.one, p.one, 1))
    except WrongType as exc:
        raise UnboundGenerator("g = [V0(1,1,1;1)] is not a module here") from exc


def s_full(p: AlgebraParams) -> GRingElement:
    """s = sum_{p} g^p (needs a valid g)."""
    g = g_class(p)
    out = GRingElement(p)
    acc = one(p)
    for _ in range(p.n):
        out = out + acc
        acc = gr_mul(p, acc, g)
    return out


def canonical_zr_label(p: AlgebraParams, r: int) -> SimpleLabel:
    """z_r = [V_r(1,1,1;0)] with the half-power root g1 = q^((r-1)/2)."""
    if not 2 <= r <= p.t:
        raise ValueError(f"r must lie in [2, t], got {r}")
    return SimpleLabel("Vr", p.sqrt_q ** (r - 1), p.one, p.one, 0, r=r)


def z_class(p: AlgebraParams, r: int) -> GRingElement:
    """z_r as a ring element (z_0 = 0, z_1 = 1)."""
    if r == 0:
        return GRingElement(p)
    if r == 1:
        return one(p)
    return cls(p, canonical_zr_label(p, r))


def _dickson_coeff(t: int, v: int) -> int:
    c = Fraction(t, t - v) * math.comb(t - v, v)
    assert c.denominator == 1
    return int(c)


def chebyshev_z(p: AlgebraParams, r: int, g: GRingElement | None = None) -> GRingElement:
    """z_r = sum_v (-1)^v C(r-1-v, v) g^((n-1)v) z2^(r-1-2v) evaluated in the ring.

    When g is None a valid g is used if one exists, else the trivial class
    (the reading under which the closed form matches the honest z_r classes)."""
    if g is None:
        try:
            g = g_class(p)
        except UnboundGenerator:
            g = one(p)
    z2 = z_class(p, 2)
    out = GRingElement(p)
    for v in range((r - 1) // 2 + 1):
        coeff = (-1) ** v * math.comb(r - 1 - v, v)
        term = gr_mul(p, gr_pow(p, g, ((p.n - 1) * v) % p.n), gr_pow(p, z2, r - 1 - 2 * v))
        out = out + term.scale(coeff)
    return out


# -- expected-class helpers --------------------------------------------------


def vclass(p: AlgebraParams, g1, gamma2, gamma3, i: int, expected_r=None) -> GRingElement:
    """Class of V_r(g1, gamma2, gamma3; i) (V0 when expected_r == 1).

    Raises WrongType when the label's computed r disagrees with expected_r,
    which marks a printed reading as inapplicable."""
    b1, b2, b3, mu = kind_conditions(p, g1, gamma2, gamma3, i)
    if expected_r == 1 or (expected_r is None and b3.is_zero()):
        return cls(p, SimpleLabel("V0", g1, gamma2, gamma3, i))
    lbl = SimpleLabel("Vr", g1, gamma2, gamma3, i, r=expected_r)
    return cls(p, lbl)


def chain_pairs(p: AlgebraParams, g1, gamma2, gamma3, i: int) -> GRingElement:
    """Composition factors of a cyclic x-chain of length t with y-killed top.

    The slot with top eigenvalue g1 q^i splits as V_s + V_(t-s)(top q^-s)
    at the minimal s with k_s = 0, or stays a single V_t."""
    _b1, _b2, _b3, mu = kind_conditions(p, g1, gamma2, gamma3, i)
    s = r_value(p, mu, gamma2, gamma3)
    t = p.t
    if s is None or s == t:
        return vclass(p, g1, gamma2, gamma3, i, expected_r=t)
    out = vclass(p, g1, gamma2, gamma3, i, expected_r=s)
    return out + vclass(p, g1, gamma2, gamma3, i - s, expected_r=t - s)


def vi_family(p: AlgebraParams, g1, gamma2, gamma3, kind: str = "VI"):
    """All seed-classes of kind VI/VII over the character, as ring elements."""
    cands = candidate_simples(p, g1, gamma2, gamma3)
    return [GRingElement(p, {lab: 1}) for lab, _m in cands if lab.kind == kind]


# -- relation framework ------------------------------------------------------


@dataclass
class Reading:
    name: str
    applicable: bool
    holds: bool | None
    detail: str = ""
    # exact = the expected side is a fully pinned FusionVector; structural
    # readings over characters with several seed-classes are not exact
    exact: bool = True


@dataclass
class RelationReport:
    relation_id: str
    bindings: str
    readings: list

    @property
    def ok(self) -> bool:
        """Some reading holds."""
        return any(r.applicable and r.holds for r in self.readings)

    @property
    def inapplicable(self) -> bool:
        """No reading even applies (e.g. a displayed generator is not a module)."""
        return all(not r.applicable for r in self.readings)

    @property
    def passed(self) -> bool:
        """Verification outcome: holds, or honestly reported as inapplicable."""
        return self.ok or self.inapplicable

    def summary(self) -> str:
        parts = []
        for r in self.readings:
            state = "n/a" if not r.applicable else ("holds" if r.holds else "FAILS")
            parts.append(f"{r.name}: {state}")
        return f"{self.relation_id} [{self.bindings}] -> " + "; ".join(parts)

    def as_dict(self):
        return {
            "relation": self.relation_id,
            "bindings": self.bindings,
            "ok": self.ok,
            "inapplicable": self.inapplicable,
            "passed": self.passed,
            "readings": [
                {
                    "name": r.name,
                    "applicable": r.applicable,
                    "holds": r.holds,
                    "detail": r.detail,
                }
                for r in self.readings
            ],
        }


def _try_reading(name, lhs_fn, rhs_fn) -> Reading:
    try:
        rhs = rhs_fn()
    except (WrongType, UnboundGenerator) as exc:
        return Reading(name, False, None, f"inapplicable: {exc}")
    try:
        lhs = lhs_fn()
    except (WrongType, UnboundGenerator) as exc:
        return Reading(name, False, None, f"inapplicable (LHS): {exc}")
    except NoIntegerSolution as exc:
        return Reading(name, True, False, f"LHS decomposition failed: {exc}")
    holds = lhs == rhs
    detail = "" if holds else f"lhs = {lhs!r}; rhs = {rhs!r}"
    return Reading(name, True, holds, detail)


def _structural_vi_reading(p, name, lhs_elem, g1, gamma2, gamma3, total_mult, kind="VI"):
    """LHS must be a nonnegative combination of `kind`-classes over the given
    character with the stated total multiplicity; exact class equality is
    reported when the character has a unique seed-class."""
    fam = vi_family(p, g1, gamma2, gamma3, kind)
    fam_labels = {list(f.entries)[0] for f in fam}
    ok = (
        all(l in fam_labels and m > 0 for l, m in lhs_elem.entries.items())
        and sum(lhs_elem.entries.values()) == total_mult
    )
    note = f"{len(fam)} seed-class(es) at this character"
    if len(fam) == 1 and ok:
        note += "; exact class equality"
    return Reading(
        name, True, ok, note if ok else f"lhs = {lhs_elem!r}; " + note, exact=len(fam) == 1
    )


# -- relation registry -------------------------------------------------------


def rel_thm55_zr_z2(p: AlgebraParams, r: int) -> list:
    lhs = lambda: gr_mul(p, z_class(p, r), z_class(p, 2))
    readings = []
    if 2 <= r <= p.t - 1:
        # z_r z_2 = z_(r+1) + g^(n-1) z_(r-1)
        readings.append(
            _try_reading(
                "proof(i-shift collapses to canonical z_(r-1))",
                lhs,
                lambda: z_class(p, r + 1) + z_class(p, r - 1),
            )
        )
        readings.append(
            _try_reading(
                "printed(g-powers as 1-dim labels)",
                lhs,
                lambda: z_class(p, r + 1)
                + gr_mul(p, one_dim_class(p, p.qpow(p.n - 1)), z_class(p, r - 1)),
            )
        )
    else:  # r = t: z_t z_2 = 2 g^(n-1) z_(t-1) + g^(n-t) + 1
        t = p.t
        readings.append(
            _try_reading(
                "proof(half-shift 1-dims q^(t/2), q^(-t/2))",
                lhs,
                lambda: z_class(p, t - 1).scale(2)
                + one_dim_class(p, p.sqrt_q**t)
                + one_dim_class(p, p.sqrt_q ** (2 * p.n - t)),
            )
        )
        readings.append(
            _try_reading(
                "printed(g^(n-t) + 1 as 1-dim labels)",
                lhs,
                lambda: z_class(p, t - 1).scale(2)
                + one_dim_class(p, p.qpow(p.n - t))
                + one(p),
            )
        )
    return readings


def rel_thm55_star1(p: AlgebraParams) -> list:
    """Eq (*1): both binomial readings (r := t) with printed vs half-shift RHS."""
    t = p.t
    z2 = z_class(p, 2)

    def lhs():
        out = GRingElement(p)
        for v in range(t // 2 + 1):
            if t - 2 * v < 0:
                continue
            coeff = (-1) ** v * _dickson_coeff(t, v)
            out = out + gr_pow(p, z2, t - 2 * v).scale(coeff)
        return out

    readings = [
        _try_reading(
            "r:=t, RHS printed g^(n-t)+1 (g collapsed to 1)",
            lhs,
            lambda: one_dim_class(p, p.qpow(p.n - t)) + one(p),
        ),
        _try_reading(
            "r:=t, RHS half-shift [q^(t/2)]+[q^(-t/2)]",
            lhs,
            lambda: one_dim_class(p, p.sqrt_q**t) + one_dim_class(p, p.sqrt_q ** (2 * p.n - t)),
        ),
    ]
    return readings


def rel_thm55_chebyshev(p: AlgebraParams, r: int) -> list:
    return [
        _try_reading(
            "closed form equals [V_r(1,1,1;0)]",
            lambda: chebyshev_z(p, r),
            lambda: z_class(p, r),
        )
    ]


def rel_thm55_z2_zprime(p: AlgebraParams, g1xi) -> list:
    g1xi = _scal(p, g1xi)
    zp = lambda i: cls(p, SimpleLabel("Vr", g1xi * p.sqrt_q, p.one, p.one, i, r=p.t))
    lhs = lambda: gr_mul(
        p, z_class(p, 2), cls(p, SimpleLabel("Vr", g1xi, p.one, p.one, 0, r=p.t))
    )
    return [
        _try_reading("proof(z'_(xi q^(n/2)) with i-shift)", lhs, lambda: zp(0) + zp(p.n - 1)),
        _try_reading(
            "printed(same xi, i-shift)",
            lhs,
            lambda: cls(p, SimpleLabel("Vr", g1xi, p.one, p.one, 0, r=p.t))
            + cls(p, SimpleLabel("Vr", g1xi, p.one, p.one, p.n - 1, r=p.t)),
        ),
    ]


def rel_thm55_zprime_zprime(p: AlgebraParams, g1a, g1b) -> list:
    g1a, g1b = _scal(p, g1a), _scal(p, g1b)
    G = g1a * g1b
    t = p.t
    lhs = lambda: gr_mul(
        p,
        cls(p, SimpleLabel("Vr", g1a, p.one, p.one, 0, r=t)),
        cls(p, SimpleLabel("Vr", g1b, p.one, p.one, 0, r=t)),
    )
    in_q_n1 = r_value(p, G, p.one, p.one) is not None

    def rhs_proof():
        out = GRingElement(p)
        for slot in range(t):
            out = out + chain_pairs(p, G, p.one, p.one, (p.n - slot) % p.n)
        return out

    readings = [_try_reading("proof(chain split per slot)", lhs, rhs_proof)]
    if not in_q_n1:
        # printed: s'' z'_(xi xi') vs thm5.19 variant g^(n-t) s'' z'_(xi xi')
        def rhs_printed():
            out = GRingElement(p)
            for k in range(t):
                out = out + cls(p, SimpleLabel("Vr", G, p.one, p.one, (p.n - k) % p.n, r=t))
            return out

        def rhs_519():
            out = GRingElement(p)
            for k in range(t):
                out = out + cls(
                    p, SimpleLabel("Vr", G, p.one, p.one, (2 * p.n - t - k) % p.n, r=t)
                )
            return out

        readings.append(_try_reading("printed(s'' z')", lhs, rhs_printed))
        readings.append(_try_reading("thm5.19 variant(g^(n-t) s'' z')", lhs, rhs_519))
    return readings


def _vi_choices(p: AlgebraParams, g1, gamma2, gamma3, kind="VI", kseed=None):
    """[(tag, class)] for the VI/VII generator: explicit seed, or all classes."""
    if kseed is not None:
        lbl = SimpleLabel(kind, g1, gamma2, gamma3, 0, kseed=_scal(p, kseed))
        return [("seed=given", cls(p, lbl))]
    fam = vi_family(p, g1, gamma2, gamma3, kind)
    if not fam:
        raise UnboundGenerator(f"no {kind} simple at this character")
    if len(fam) == 1:
        return [("unique", fam[0])]
    return [(f"class#{k}", f) for k, f in enumerate(fam)]


def rel_thm58_z2_x(p: AlgebraParams, g1z, zeta2, kseed=None) -> list:
    g1z, zeta2 = _scal(p, g1z), _scal(p, zeta2)
    newg1 = g1z * p.sqrt_q
    readings = []
    for tag, xcls in _vi_choices(p, g1z, p.one, zeta2, kseed=kseed):
        lhs = gr_mul(p, z_class(p, 2), xcls)
        readings.append(
            _structural_vi_reading(
                p, f"proof(2 V_I classes at zeta1 q^(n/2)) [{tag}]", lhs, newg1, p.one, zeta2, 2
            )
        )
    return readings


def rel_thm58_z2_zdprime(p: AlgebraParams, xi) -> list:
    xi = _scal(p, xi)
    eta = cls(p, SimpleLabel("V0", p.sqrt_q, p.one, p.qpow(p.n1), 0))
    zd = lambda x, i: cls(p, SimpleLabel("Vr", p.one, p.one, x, i, r=p.t))
    lhs = lambda: gr_mul(p, z_class(p, 2), zd(xi, 0))
    xiq = xi * p.qpow(-p.n1)
    return [
        _try_reading(
            "printed(eta (z''_(xi q^-n1) + g^(n-1) z''))",
            lhs,
            lambda: gr_mul(p, eta, zd(xiq, 0) + zd(xiq, p.n - 1)),
        )
    ]


def rel_thm58_x_zdprime(p: AlgebraParams, g1z, zeta2, xi, kseed=None) -> list:
    g1z, zeta2, xi = _scal(p, g1z), _scal(p, zeta2), _scal(p, xi)
    zd = cls(p, SimpleLabel("Vr", p.one, p.one, xi, 0, r=p.t))
    readings = []
    for tag, xcls in _vi_choices(p, g1z, p.one, zeta2, kseed=kseed):
        lhs = gr_mul(p, xcls, zd)
        readings.append(
            _structural_vi_reading(
                p, f"printed(s'' x_(zeta1, zeta2 xi)) [{tag}]", lhs, g1z, p.one, zeta2 * xi, p.t
            )
        )
    return readings


def rel_thm58_zd_zd(p: AlgebraParams, xi, xip) -> list:
    xi, xip = _scal(p, xi), _scal(p, xip)
    prod = xi * xip
    t = p.t
    lhs = lambda: gr_mul(
        p,
        cls(p, SimpleLabel("Vr", p.one, p.one, xi, 0, r=t)),
        cls(p, SimpleLabel("Vr", p.one, p.one, xip, 0, r=t)),
    )
    in_q = r_value(p, p.one, p.one, prod) is not None

    def rhs_proof():
        out = GRingElement(p)
        for slot in range(t):
            out = out + chain_pairs(p, p.one, p.one, prod, (p.n - slot) % p.n)
        return out

    readings = [_try_reading("proof(chain split per slot)", lhs, rhs_proof)]
    if not in_q:
        def rhs_printed():
            out = GRingElement(p)
            for k in range(t):
                out = out + cls(p, SimpleLabel("Vr", p.one, p.one, prod, (p.n - k) % p.n, r=t))
            return out

        readings.append(_try_reading("printed(s'' z''_(xi xi'))", lhs, rhs_printed))
    return readings


def _product_case_readings(p, lhs_elem, G, g2prod, g3prod, casename) -> list:
    """Readings for a V_I/V_II product with product character (G^n, g2, g3).

    Case split mirrors the displayed tables: n x (kind at the character)
    constituents when beta1'' or beta2'' is nonzero; V0 ladders when all
    primed parameters vanish with beta3 = 0; chain splitting when beta3 != 0."""
    b1pp, b2pp, _b3, _mu = kind_conditions(p, G, g2prod, g3prod, 0)
    readings = []
    if not b1pp.is_zero():
        readings.append(
            _structural_vi_reading(
                p, f"{casename}: n V_I constituents", lhs_elem, G, g2prod, g3prod, p.n
            )
        )
        readings.append(_s_times_reading(p, lhs_elem, G, g2prod, g3prod, "VI"))
    elif not b2pp.is_zero():
        readings.append(
            _structural_vi_reading(
                p, f"{casename}: n V_II constituents", lhs_elem, G, g2prod, g3prod, p.n, kind="VII"
            )
        )
        readings.append(_s_times_reading(p, lhs_elem, G, g2prod, g3prod, "VII"))
    elif p.beta[2].is_zero():
        # n s g_(...): n copies of every 1-dim class over the character
        def rhs_v0():
            out = GRingElement(p)
            for j in range(p.n):
                out = out + cls(p, SimpleLabel("V0", G, g2prod, g3prod, j))
            return out.scale(p.n)

        readings.append(
            _try_reading(f"{casename}: n s g (V0 ladder)", lambda: lhs_elem, rhs_v0)
        )
    else:
        def rhs_chains():
            out = GRingElement(p)
            for slot in range(p.n):
                for k in range(p.u):
                    out = out + chain_pairs(p, G, g2prod, g3prod, (p.n - slot - k * p.t) % p.n)
            return out

        readings.append(
            _try_reading(f"{casename}: chain split per slot", lambda: lhs_elem, rhs_chains)
        )
    return readings


def _s_times_reading(p, lhs_elem, G, g2prod, g3prod, kind) -> Reading:
    """RHS = s * (a seed-class at the character): valid whenever g exists."""
    try:
        s = s_full(p)
    except UnboundGenerator as exc:
        return Reading(f"printed(s {kind} class)", False, None, f"inapplicable: {exc}")
    fam = vi_family(p, G, g2prod, g3prod, kind)
    if not fam:
        return Reading(f"printed(s {kind} class)", False, None, "no such class")
    values = []
    for C in fam:
        val = gr_mul(p, s, C)
        if all(val != v for v in values):
            values.append(val)
    hold = any(lhs_elem == v for v in values)
    note = f"{len(fam)} seed-class(es); s*C distinct values: {len(values)}"
    return Reading(f"printed(s {kind} class)", True, hold, note if hold else f"lhs = {lhs_elem!r}; " + note)


def rel_x_times_x(p: AlgebraParams, g1a, zeta2a, g1b, zeta2b, kseed_a=None, kseed_b=None) -> list:
    """The V_I x V_I product in all of its displayed cases (Thms 5.8/5.10/5.15/5.19)."""
    g1a, zeta2a = _scal(p, g1a), _scal(p, zeta2a)
    g1b, zeta2b = _scal(p, g1b), _scal(p, zeta2b)
    G = g1a * g1b
    zprod = zeta2a * zeta2b
    readings = []
    for tag_a, xa in _vi_choices(p, g1a, p.one, zeta2a, kseed=kseed_a):
        for tag_b, xb in _vi_choices(p, g1b, p.one, zeta2b, kseed=kseed_b):
            lhs_elem = gr_mul(p, xa, xb)
            case = f"[{tag_a} x {tag_b}]"
            readings.extend(_product_case_readings(p, lhs_elem, G, p.one, zprod, case))
    return readings


def rel_x_times_y(p: AlgebraParams, g1z, zeta2, g1e, eps2, kseed_x=None, kseed_y=None) -> list:
    """x_(zeta1,zeta2) y_(eps1,eps2) = s g_(eps1,eps2,eps2) x_(zeta1, zeta2 eps2^-1) = y x."""
    g1z, zeta2 = _scal(p, g1z), _scal(p, zeta2)
    g1e, eps2 = _scal(p, g1e), _scal(p, eps2)
    G = g1z * g1e
    readings = []
    for tag_x, xcls in _vi_choices(p, g1z, p.one, zeta2, kseed=kseed_x):
        for tag_y, ycls in _vi_choices(p, g1e, eps2, p.one, kind="VII", kseed=kseed_y):
            lhs = gr_mul(p, xcls, ycls)
            case = f"[{tag_x} x {tag_y}]"
            readings.append(
                _structural_vi_reading(
                    p, f"printed(s g x_(zeta1, zeta2 eps2^-1)) {case}", lhs, G, eps2, zeta2, p.n
                )
            )
            readings.append(_s_times_reading(p, lhs, G, eps2, zeta2, "VI"))
            rhs_comm = gr_mul(p, ycls, xcls)
            readings.append(
                Reading(
                    f"two-sided (xy = yx) {case}",
                    True,
                    lhs == rhs_comm,
                    "" if lhs == rhs_comm else f"xy = {lhs!r}; yx = {rhs_comm!r}",
                )
            )
    return readings


def rel_y_times_y(p: AlgebraParams, g1a, eps2a, g1b, eps2b, kseed_a=None, kseed_b=None) -> list:
    """The V_II x V_II product cases (Thms 5.13/5.15/5.17/5.19)."""
    g1a, eps2a = _scal(p, g1a), _scal(p, eps2a)
    g1b, eps2b = _scal(p, g1b), _scal(p, eps2b)
    G = g1a * g1b
    eprod = eps2a * eps2b
    readings = []
    for tag_a, ya in _vi_choices(p, g1a, eps2a, p.one, kind="VII", kseed=kseed_a):
        for tag_b, yb in _vi_choices(p, g1b, eps2b, p.one, kind="VII", kseed=kseed_b):
            lhs_elem = gr_mul(p, ya, yb)
            case = f"[{tag_a} x {tag_b}]"
            readings.extend(_product_case_readings(p, lhs_elem, G, eprod, p.one, case))
    return readings


def rel_thm517_z2_ztilde(p: AlgebraParams, xi) -> list:
    xi = _scal(p, xi)
    etap = cls(p, SimpleLabel("V0", p.sqrt_q, p.qpow(p.n1), p.one, 0))
    zt = lambda x, i: cls(p, SimpleLabel("Vr", p.one, x, p.one, i, r=p.t))
    lhs = lambda: gr_mul(p, z_class(p, 2), zt(xi, 0))
    xiq = xi * p.qpow(-p.n1)
    return [
        _try_reading(
            "printed(eta' (z~_(xi q^-n1) + g^(n-1) z~))",
            lhs,
            lambda: gr_mul(p, etap, zt(xiq, 0) + zt(xiq, p.n - 1)),
        )
    ]


def rel_thm517_y_ztilde(p: AlgebraParams, g1e, eps2, xi, kseed=None) -> list:
    g1e, eps2, xi = _scal(p, g1e), _scal(p, eps2), _scal(p, xi)
    zt = cls(p, SimpleLabel("Vr", p.one, xi, p.one, 0, r=p.t))
    readings = []
    for tag, ycls in _vi_choices(p, g1e, eps2, p.one, kind="VII", kseed=kseed):
        lhs = gr_mul(p, ycls, zt)
        readings.append(
            _structural_vi_reading(
                p, f"printed(s'' y_(eps1, eps2 xi)) [{tag}]", lhs, g1e, eps2 * xi, p.one, p.t, kind="VII"
            )
        )
    return readings


def rel_thm517_zt_zt(p: AlgebraParams, xi, xip) -> list:
    xi, xip = _scal(p, xi), _scal(p, xip)
    prod = xi * xip
    t = p.t
    lhs = lambda: gr_mul(
        p,
        cls(p, SimpleLabel("Vr", p.one, xi, p.one, 0, r=t)),
        cls(p, SimpleLabel("Vr", p.one, xip, p.one, 0, r=t)),
    )
    in_q = r_value(p, p.one, prod, p.one) is not None

    def rhs_proof():
        out = GRingElement(p)
        for slot in range(t):
            out = out + chain_pairs(p, p.one, prod, p.one, (p.n - slot) % p.n)
        return out

    readings = [_try_reading("proof(chain split per slot)", lhs, rhs_proof)]
    if not in_q:
        def rhs_printed():
            out = GRingElement(p)
            for k in range(t):
                out = out + cls(p, SimpleLabel("Vr", p.one, prod, p.one, (p.n - k) % p.n, r=t))
            return out

        readings.append(_try_reading("printed(s'' z~_(xi xi'))", lhs, rhs_printed))
    return readings


def rel_thm519_x_zprime(p: AlgebraParams, g1z, zeta2, g1xi, kseed=None) -> list:
    """x_(zeta1,zeta2) z'_xi = g^(n-t) s'' x_(zeta1 xi, zeta2)."""
    g1z, zeta2, g1xi = _scal(p, g1z), _scal(p, zeta2), _scal(p, g1xi)
    zp = cls(p, SimpleLabel("Vr", g1xi, p.one, p.one, 0, r=p.t))
    readings = []
    for tag, xcls in _vi_choices(p, g1z, p.one, zeta2, kseed=kseed):
        lhs = gr_mul(p, xcls, zp)
        readings.append(
            _structural_vi_reading(
                p, f"printed(g^(n-t) s'' x_(zeta1 xi, zeta2)) [{tag}]", lhs, g1z * g1xi, p.one, zeta2, p.t
            )
        )
    return readings


def rel_gn(p: AlgebraParams) -> list:
    def lhs():
        return gr_pow(p, g_class(p), p.n)

    return [_try_reading("g^n = 1", lhs, lambda: one(p))]


RELATIONS = {
    "thm5.5.zr_z2": rel_thm55_zr_z2,
    "thm5.5.star1": rel_thm55_star1,
    "thm5.5.chebyshev": rel_thm55_chebyshev,
    "thm5.5.z2_zprime": rel_thm55_z2_zprime,
    "thm5.5.zprime_zprime": rel_thm55_zprime_zprime,
    "thm5.8.z2_x": rel_thm58_z2_x,
    "thm5.8.z2_zdprime": rel_thm58_z2_zdprime,
    "thm5.8.x_zdprime": rel_thm58_x_zdprime,
    "thm5.8.zd_zd": rel_thm58_zd_zd,
    "x_times_x": rel_x_times_x,
    "x_times_y": rel_x_times_y,
    "y_times_y": rel_y_times_y,
    "thm5.17.z2_ztilde": rel_thm517_z2_ztilde,
    "thm5.17.y_ztilde": rel_thm517_y_ztilde,
    "thm5.17.zt_zt": rel_thm517_zt_zt,
    "thm5.19.x_zprime": rel_thm519_x_zprime,
    "g_power": rel_gn,
}


def verify_relation(p: AlgebraParams, relation_id: str, **bindings) -> RelationReport:
    fn = RELATIONS.get(relation_id)
    if fn is None:
        raise KeyError(f"unknown relation id {relation_id!r}; known: {sorted(RELATIONS)}")
    try:
        readings = fn(p, **bindings)
    except (WrongType, UnboundGenerator) as exc:
        readings = [Reading("bindings", False, None, f"inapplicable: {exc}")]
    return RelationReport(relation_id, _fmt_bindings(bindings), readings)


def _fmt_bindings(bindings) -> str:
    return ", ".join(f"{k}={v!r}" for k, v in sorted(bindings.items()))


def _scal(p: AlgebraParams, x):
    if isinstance(x, CycScalar):
        return x.embed(p.M)
    return CycScalar.from_rational(Fraction(x), p.M)


def _resolve_vi(p: AlgebraParams, g1, gamma2, gamma3, kind: str = "VI") -> GRingElement:
    """The unique VI/VII seed-class at the character; raises when ambiguous."""
    fam = vi_family(p, g1, gamma2, gamma3, kind)
    if not fam:
        raise UnboundGenerator(f"no {kind} simple at this character")
    if len(fam) > 1:
        raise UnboundGenerator(
            f"{len(fam)} non-isomorphic {kind} seed-classes at this character; "
            "the displayed generator is ambiguous"
        )
    return fam[0]


# -- suites ------------------------------------------------------------------


def run_suite(p: AlgebraParams, suite: str, instances) -> list[RelationReport]:
    """Run a list of (relation_id, bindings) pairs."""
    out = []
    for rid, bindings in instances:
        out.append(verify_relation(p, rid, **bindings))
    return out


SUITES = (
    "thm5.5",
    "thm5.8",
    "thm5.10",
    "thm5.13",
    "thm5.15",
    "thm5.17",
    "thm5.19",
    "cor-gelaki",
    "radford",
    "remark5.21",
)


def _aux_root(p: AlgebraParams, avoid_pows=()):
    """A root of unity in the working field outside <q^n1>-type subgroups."""
    from .cyclo import divisors

    for d in sorted(divisors(p.M), reverse=True):
        z = root_of_unity(p.M, p.M // d)
        ok = True
        for cond in avoid_pows:
            if cond(z):
                ok = False
                break
        if ok and d > 1:
            return z
    raise UnboundGenerator("no auxiliary root of unity available; enlarge extra_orders")


def default_suite_instances(p: AlgebraParams, suite: str):
    """Reasonable parameter bindings for each relation suite at the given p."""
    t = p.t
    if suite == "thm5.5":
        out = [("thm5.5.star1", {})]
        for r in range(2, t + 1):
            out.append(("thm5.5.zr_z2", {"r": r}))
            out.append(("thm5.5.chebyshev", {"r": r}))
        # a z'-generator needs g1 with g1^(2 n1) outside <q^n1>
        try:
            xi = _aux_root(p, avoid_pows=[lambda z: r_value(p, z, p.one, p.one) is not None])
            out.append(("thm5.5.z2_zprime", {"g1xi": xi}))
            out.append(("thm5.5.zprime_zprime", {"g1a": xi, "g1b": xi}))
            out.append(("thm5.5.zprime_zprime", {"g1a": xi, "g1b": xi.inv()}))
        except UnboundGenerator:
            pass
        return out
    if suite == "thm5.8":
        zeta1 = _aux_root(p, avoid_pows=[lambda z: ((z ** p.n) ** p.n1 - p.one).is_zero()])
        xi = _aux_root(p, avoid_pows=[lambda z: r_value(p, p.one, p.one, z) is not None])
        return [
            ("thm5.8.z2_x", {"g1z": zeta1, "zeta2": 1}),
            ("thm5.8.z2_zdprime", {"xi": xi}),
            ("thm5.8.x_zdprime", {"g1z": zeta1, "zeta2": 1, "xi": xi}),
            ("thm5.8.zd_zd", {"xi": xi, "xip": xi}),
            ("thm5.8.zd_zd", {"xi": xi, "xip": xi.inv()}),
            ("x_times_x", {"g1a": zeta1, "zeta2a": 1, "g1b": zeta1, "zeta2b": 1}),
            ("x_times_x", {"g1a": zeta1, "zeta2a": 1, "g1b": zeta1.inv(), "zeta2b": 1}),
        ]
    if suite in ("thm5.10", "thm5.15"):
        zeta1 = _aux_root(p, avoid_pows=[lambda z: ((z ** p.n) ** p.n1 - p.one).is_zero()])
        # zeta2 = zeta1^n1 keeps the k-seed constraint target zero (in-field seeds)
        z2a = zeta1**p.n1
        out = [
            ("x_times_x", {"g1a": zeta1, "zeta2a": z2a, "g1b": zeta1, "zeta2b": z2a}),
            ("x_times_x", {"g1a": zeta1, "zeta2a": z2a, "g1b": zeta1.inv(), "zeta2b": z2a.inv()}),
        ]
        if suite == "thm5.15":
            out.append(
                ("x_times_y", {"g1z": zeta1, "zeta2": z2a, "g1e": zeta1, "eps2": z2a})
            )
        return out
    if suite == "thm5.13":
        eps1 = _aux_root(p, avoid_pows=[lambda z: ((z ** p.n) ** p.n1 - p.one).is_zero()])
        e2 = eps1**p.n1
        return [
            ("y_times_y", {"g1a": eps1, "eps2a": e2, "g1b": eps1, "eps2b": e2}),
            ("y_times_y", {"g1a": eps1, "eps2a": e2, "g1b": eps1.inv(), "eps2b": e2.inv()}),
        ]
    if suite == "thm5.17":
        eps1 = _aux_root(p, avoid_pows=[lambda z: ((z ** p.n) ** p.n1 - p.one).is_zero()])
        e2 = eps1**p.n1
        xi = _aux_root(p, avoid_pows=[lambda z: r_value(p, p.one, z, p.one) is not None])
        return [
            ("thm5.17.z2_ztilde", {"xi": xi}),
            ("thm5.17.y_ztilde", {"g1e": eps1, "eps2": e2, "xi": xi}),
            ("thm5.17.zt_zt", {"xi": xi, "xip": xi}),
            ("thm5.17.zt_zt", {"xi": xi, "xip": xi.inv()}),
            ("y_times_y", {"g1a": eps1, "eps2a": e2, "g1b": eps1, "eps2b": e2}),
        ]
    if suite == "thm5.19":
        zeta1 = _aux_root(p, avoid_pows=[lambda z: ((z ** p.n) ** p.n1 - p.one).is_zero()])
        z2a = zeta1**p.n1
        out = [
            ("thm5.5.star1", {}),
            ("thm5.5.zr_z2", {"r": 2}),
            ("x_times_x", {"g1a": zeta1, "zeta2a": z2a, "g1b": zeta1, "zeta2b": z2a}),
            ("x_times_x", {"g1a": zeta1, "zeta2a": z2a, "g1b": zeta1.inv(), "zeta2b": z2a.inv()}),
            ("x_times_y", {"g1z": zeta1, "zeta2": z2a, "g1e": zeta1, "eps2": z2a}),
        ]
        try:
            # a z'-generator needs gamma1^n1 = 1 with g1^(2 n1) outside <q^n1>;
            # no such root exists at small n (e.g. (3,1)) and the entry is skipped
            xi = _aux_root(
                p,
                avoid_pows=[
                    lambda z: not ((z ** p.n) ** p.n1 - p.one).is_zero(),
                    lambda z: r_value(p, z, p.one, p.one) is not None,
                ],
            )
            out.insert(2, ("thm5.19.x_zprime", {"g1z": zeta1, "zeta2": z2a, "g1xi": xi}))
        except UnboundGenerator:
            pass
        return out
    raise KeyError(f"no default instances for suite {suite!r}")


# -- Gelaki / Radford specialization ----------------------------------------


class GelakiContext:
    """The quotient by (a^N - 1, b - 1, c - 1): label filter + generators.

    Representations are H_beta-modules with gamma2 = gamma3 = 1 and
    gamma1^(N/n) = 1; fusion is computed upstairs.
    """

    def __init__(self, p: AlgebraParams, N: int):
        if N % p.n != 0:
            raise ValueError("need n | N")
        if p.M % N != 0:
            raise ValueError("working modulus lacks an N-th root; pass extra_orders=(N,)")
        self.p = p
        self.N = N
        self.frak_q = root_of_unity(p.M, p.M // N)

    def labels(self):
        """All simple classes of the quotient, as (CanonLabel, coarse_key) pairs.

        coarse_key is algebra-independent, at the granularity of the source
        material's labels: 1-dims by eigenvalue, V_r by (top eigenvalue, r),
        V_I/V_II by central character only.  Several non-isomorphic
        seed-classes can share a coarse key; canonical bijections between
        contexts work at this level and the comparison verifies cell
        consistency across representatives.
        """
        p = self.p
        out = []
        seen = set()
        for k in range(self.N // p.n):
            g1 = self.frak_q**k
            cands = candidate_simples(p, g1, p.one, p.one)
            for lab, _m in cands:
                if lab.fingerprint in seen:
                    continue
                seen.add(lab.fingerprint)
                if lab.kind == "V0":
                    mu = lab.display.g1 * p.qpow(lab.display.i)
                    key = ("V0", mu.key())
                elif lab.kind == "Vr":
                    mu = lab.display.g1 * p.qpow(lab.display.i)
                    key = ("Vr", mu.key(), lab.display.r)
                else:
                    gamma1 = lab.display.g1**p.n
                    key = (lab.kind, gamma1.key())
                out.append((lab, key))
        return out

    # generator classes per Corollary 5.3's cases -----------------------

    def case(self) -> int:
        b1, b2, b3 = self.p.beta
        z1, z2, z3 = b1.is_zero(), b2.is_zero(), b3.is_zero()
        if z3 and not (z1 and z2):
            return 1  # beta3 = 0, some beta1/beta2 nonzero
        if not z3 and z1 and z2:
            return 2
        if not z3 and not (z1 and z2):
            return 3
        return 4  # all zero

    def g(self) -> GRingElement:
        return g_class(self.p)

    def h_data(self):
        """(name, displayed exponent of frak_q, claimed order) per Cor 5.3's cases."""
        p, N = self.p, self.N
        n, n1 = p.n, p.n1
        case = self.case()
        if case == 1:
            d = math.gcd(N // n, n1)
            return "h", N // d, d
        if case == 2:
            g2 = math.gcd(N, 2 * n1)
            return "h1", N * n // g2, g2 // math.gcd(n, 2 * n1)
        if case == 3:
            g3 = math.gcd(N, 2 * n1, n * n1)
            nu = N // g3
            return "h2", n * nu, g3 // math.gcd(n, 2 * n1)
        return "h3", n, N // n

    def h_candidates(self):
        """[(convention, class, error)] for the h-generator.

        The displayed [V0(frak_q^E, 1, 1; 0)] fixes no n-th root of frak_q^E;
        every root inside the N-th roots of unity is offered (g1 = frak_q^k
        with n k = E mod N)."""
        name, E, order = self.h_data()
        p, N = self.p, self.N
        out = []
        if E % p.n != 0:
            return name, order, out
        for j in range(p.n):
            k = (E // p.n + j * (N // p.n)) % N
            conv = f"root frak_q^{k}"
            try:
                c = cls(p, SimpleLabel("V0", self.frak_q**k, p.one, p.one, 0))
            except WrongType as exc:
                out.append((conv, None, str(exc)))
                continue
            out.append((conv, c, ""))
        return name, order, out

    def xstar(self, kseed=None) -> GRingElement:
        """x* = [V_I(frak_q^n, 1, 1; 0)] (unique seed-class unless kseed given)."""
        if kseed is not None:
            return cls(self.p, SimpleLabel("VI", self.frak_q, self.p.one, self.p.one, 0, kseed=kseed))
        return _resolve_vi(self.p, self.frak_q, self.p.one, self.p.one, "VI")

    def ystar(self, kseed=None) -> GRingElement:
        if kseed is not None:
            return cls(self.p, SimpleLabel("VII", self.frak_q, self.p.one, self.p.one, 0, kseed=kseed))
        return _resolve_vi(self.p, self.frak_q, self.p.one, self.p.one, "VII")

    def verify_orders(self) -> list[RelationReport]:
        """g^n = 1 and the printed h-order for this beta-case (all conventions)."""
        p = self.p
        reports = [verify_relation(p, "g_power")]
        name, order, candidates = self.h_candidates()
        readings = []
        for conv, h, err in candidates:
            if h is None:
                readings.append(
                    Reading(f"{name}^{order} = 1 [{conv} root]", False, None, f"not a module: {err}")
                )
                continue
            readings.append(
                _try_reading(
                    f"{name}^{order} = 1 [{conv} root]",
                    lambda h=h: gr_pow(p, h, order),
                    lambda: one(p),
                )
            )
        reports.append(RelationReport(f"cor5.3.{name}_order", f"N={self.N}", readings))
        return reports

    def _h_for_power_relation(self) -> GRingElement:
        name, _order, candidates = self.h_candidates()
        for _conv, h, _err in candidates:
            if h is not None:
                return h
        raise UnboundGenerator(f"{name} names no module under either root convention")

    def verify_xstar_power(self) -> RelationReport:
        """Cor 5.11 / 5.14 / 5.16: x*^(N/(N/n,n1)) = n^(...-1) s h (beta3 = 0)."""
        p, N = self.p, self.N
        D = N // math.gcd(N // p.n, p.n1)
        reading = _try_reading(
            f"x*^{D} = n^{D-1} s h",
            lambda: gr_pow(p, self.xstar(), D),
            lambda: gr_mul(p, s_full(p), self._h_for_power_relation()).scale(p.n ** (D - 1)),
        )
        return RelationReport("cor5.11.xstar_power", f"N={N}", [reading])

    def verify_ystar_power(self) -> RelationReport:
        p, N = self.p, self.N
        D = N // math.gcd(N // p.n, p.n1)
        reading = _try_reading(
            f"y*^{D} = n^{D-1} s h",
            lambda: gr_pow(p, self.ystar(), D),
            lambda: gr_mul(p, s_full(p), self._h_for_power_relation()).scale(p.n ** (D - 1)),
        )
        return RelationReport("cor5.14.ystar_power", f"N={N}", [reading])

    def fusion_table(self):
        labels = self.labels()
        table = {}
        for i, (la, _ka) in enumerate(labels):
            for j, (lb, _kb) in enumerate(labels):
                table[(i, j)] = _fuse_cached(self.p, la, lb)
        return labels, table


def specialize_gelaki(p: AlgebraParams, N: int) -> GelakiContext:
    """Restrict to the quotient with a^N = 1, b = c = 1 (the label filter,
    generator dictionary and table live on the returned context)."""
    return GelakiContext(p, N)


def radford_context(N: int, nu: int, beta3=1, extra_orders=()) -> GelakiContext:
    """U_(N,nu,omega) = Gelaki's algebra at (N/(N,nu), N, nu, omega^nu, 0, 0, 1)."""
    if (nu * nu) % N == 0:
        raise ValueError("Radford's algebra needs N not dividing nu^2")
    n = N // math.gcd(N, nu)
    p = AlgebraParams(n, nu, beta=(0, 0, beta3), extra_orders=(N,) + tuple(extra_orders))
    return GelakiContext(p, N)


# the quotient fusion data of U_(N,nu,omega), by the parameter translation
radford_fusion = radford_context


def _coarse_table(ctx: GelakiContext):
    """Fusion table at the coarse-label level, with the number of simple
    classes per coarse label and a consistency check: the coarsened cell
    value must not depend on which representative classes are multiplied."""
    labels = ctx.labels()
    lookup = {lab: key for lab, key in labels}
    reps: dict = {}
    for lab, key in labels:
        reps.setdefault(key, []).append(lab)

    def coarsen(fv: FusionVector):
        out = {}
        for lab, mult in fv.entries.items():
            key = lookup.get(lab)
            if key is None:
                return None
            out[key] = out.get(key, 0) + mult
        return out

    table = {}
    counts = {key: len(v) for key, v in reps.items()}
    for ka, la_list in reps.items():
        for kb, lb_list in reps.items():
            value = None
            for la in la_list:
                for lb in lb_list:
                    cell = coarsen(_fuse_cached(ctx.p, la, lb))
                    if cell is None:
                        return None, counts, f"cell ({ka},{kb}) leaves the quotient label set"
                    if value is None:
                        value = cell
                    elif value != cell:
                        return None, counts, f"cell ({ka},{kb}) depends on the seed-class choice"
            table[(ka, kb)] = value
    return table, counts, None


def compare_fusion_rings(ctxA: GelakiContext, ctxB: GelakiContext):
    """Compare full fusion tables under the canonical coarse-label bijection.

    Coarse labels are the customary (kind, character) names; the
    comparison also reports the per-label simple-class counts, which CAN
    differ between the two algebras (non-isomorphic k-seed classes).
    """
    tableA, countsA, errA = _coarse_table(ctxA)
    tableB, countsB, errB = _coarse_table(ctxB)
    if errA or errB:
        return {"equal": False, "mismatch": errA or errB}
    if set(countsA) != set(countsB):
        return {
            "equal": False,
            "mismatch": "coarse label sets differ",
            "only_A": sorted(str(k) for k in set(countsA) - set(countsB)),
            "only_B": sorted(str(k) for k in set(countsB) - set(countsA)),
        }
    for key in tableA:
        if tableA[key] != tableB[key]:
            return {
                "equal": False,
                "mismatch": f"cell {key}",
                "A": {str(k): v for k, v in tableA[key].items()},
                "B": {str(k): v for k, v in tableB[key].items()},
            }
    return {
        "equal": True,
        "labels": len(countsA),
        "class_counts_A": {str(k): v for k, v in sorted(countsA.items(), key=lambda t: str(t[0]))},
        "class_counts_B": {str(k): v for k, v in sorted(countsB.items(), key=lambda t: str(t[0]))},
        "class_counts_match": countsA == countsB,
    }
