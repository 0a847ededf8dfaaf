"""Realization procedures for minimum functions.

One-step synthesis (the classical seven-element networks and the newer
wheel-shaped alternatives), the minimal-storage classifier for biquadratic
minimum functions with witness constructors, the quartet family
constructors, the bridge structural matcher, and the Sylvester-resultant
fixture checks used to certify the classifier's boundary algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .polyrat import (BiquadParams, NotMinimum, NotRationalParams, Polynomial,
                      Q, RationalFunction, _as_q, biquad_params,
                      biquad_template, count_real_roots, is_minimum_function,
                      is_positive_real, minimum_frequencies, rational_roots,
                      sqrt_fraction, sylvester_determinant)
from . import network as net
from .network import (CAPACITOR, INDUCTOR, RESISTOR, Element, Leaf, Network,
                      par, ser)


class SynthError(Exception):
    pass


class WrongBranch(SynthError):
    pass


class NonConstantReduced(SynthError):
    pass


class ConditionViolated(SynthError):
    pass


class ConstraintViolated(SynthError):
    pass


class NoMatch(SynthError):
    pass


# ---------------------------------------------------------------------------
# one-step synthesis at a minimum frequency
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SynthesisStep:
    """Data of one realization step at a minimum frequency omega0.

    For X > 0: mu_or_nu = mu with X = H(mu)/mu, derived carries
    chi = w0^2 + 2*alpha*mu, gamma = mu + 2*alpha, phi = chi + mu^2.
    For X < 0: mu_or_nu = nu with -w0^2 X = H(nu)*nu, derived carries
    eta = w0^2 + 2*beta*nu, zeta = nu + 2*beta, psi = eta + nu^2.
    """

    variant: str                    # "X_positive" | "X_negative"
    omega0: Fraction
    X: Fraction
    mu_or_nu: Fraction
    alpha_or_beta: Fraction
    h: Fraction                     # H at mu (or nu)
    reduced: RationalFunction       # H_r (or H~_r)
    derived: Dict[str, Fraction]

    def __post_init__(self):
        w0, m, ab = self.omega0, self.mu_or_nu, self.alpha_or_beta
        d = self.derived
        if self.variant == "X_positive":
            assert self.X > 0 and m > 0 and ab > 0
            assert self.X == self.h / m
            assert d["chi"] == w0 * w0 + 2 * ab * m
            assert d["gamma"] == m + 2 * ab
            assert d["phi"] == d["chi"] + m * m
        else:
            assert self.X < 0 and m > 0 and ab > 0
            assert -w0 * w0 * self.X == self.h * m
            assert d["eta"] == w0 * w0 + 2 * ab * m
            assert d["zeta"] == m + 2 * ab
            assert d["psi"] == d["eta"] + m * m


def _smallest_positive_rational_root(p: Polynomial) -> Optional[Fraction]:
    roots = [r for r in rational_roots(p) if r > 0]
    if not roots:
        return None
    r = min(roots)
    # must also be the smallest positive *real* root
    if count_real_roots(p, Q(0), r) != 1:
        return None
    return r


def theorem2_step(h: RationalFunction, omega0=None,
                  variant: Optional[str] = None) -> SynthesisStep:
    """One synthesis step for a minimum function with minimum frequency
    omega0 (default: the smallest one).

    On the X > 0 branch returns the smallest positive mu with H(mu) = mu*X
    and the residue alpha of (mu H(mu) - s H(s))/(mu H(s) - s H(mu)) at
    j*omega0; the reduced function drops the McMillan degree by at least
    two.  Mirror data on the X < 0 branch.  Requires the minimum frequency,
    the root and the residue to be exact rationals (always true for
    biquadratic inputs with rational parameters); raises NotRationalParams
    otherwise."""
    if not is_minimum_function(h):
        raise NotMinimum("theorem2_step requires a minimum function")
    if h.mcmillan_degree == 2:
        try:
            return _theorem2_step_biquad(h, omega0, variant)
        except NotRationalParams:
            pass
    if omega0 is None:
        freqs = minimum_frequencies(h)
        omega0 = freqs[0].exact
        if omega0 is None:
            raise NotRationalParams("smallest minimum frequency is irrational")
    omega0 = _as_q(omega0)
    w2 = omega0 * omega0
    re, im = h.eval_jomega_pair(w2)
    if re != 0 or im == 0:
        raise NotMinimum(f"omega0={omega0} is not a minimum frequency")
    x = im
    branch = "X_positive" if x > 0 else "X_negative"
    if variant is not None and variant != branch:
        raise WrongBranch(f"requested {variant} but H(j*omega0) gives {branch}")

    p, q = h.num, h.den
    if x > 0:
        # H(mu) - mu*X = 0  ->  p(mu) - X*mu*q(mu) = 0
        mu = _smallest_positive_rational_root(p - Polynomial([0, x]) * q)
    else:
        # H(nu)*nu + w0^2*X = 0  ->  nu*p(nu) + w0^2*X*q(nu) = 0
        mu = _smallest_positive_rational_root(
            Polynomial([0, 1]) * p + (w2 * x) * q)
    if mu is None:
        raise NotRationalParams("no exact rational root for mu/nu")
    hval = h(mu)

    s_poly = Polynomial([0, 1])
    if x > 0:
        y = RationalFunction(mu * hval * q - s_poly * p, mu * p - hval * s_poly * q)
    else:
        y = RationalFunction(mu * p - hval * s_poly * q, mu * hval * q - s_poly * p)
    # residue of y at s = j*omega0 (a real rational for a genuine step)
    dnum_a, dnum_b = y.num.eval_jomega(w2)
    dden = y.den.derivative()
    dd_a, dd_b = dden.eval_jomega(w2)
    den_norm = dd_a * dd_a + w2 * dd_b * dd_b
    if den_norm == 0:
        raise SynthError("resonant pole missing from the quotient function")
    res_re = (dnum_a * dd_a + w2 * dnum_b * dd_b) / den_norm
    res_im = (dnum_b * dd_a - dnum_a * dd_b) / den_norm
    if res_im != 0:
        raise SynthError("residue at j*omega0 is not real")
    alpha = res_re
    if alpha <= 0:
        raise SynthError("residue at j*omega0 is not positive")
    resonant = RationalFunction(Polynomial([0, 2 * alpha]), Polynomial([w2, 0, 1]))
    reduced = (y - resonant).reciprocal()
    if not is_positive_real(reduced):
        raise SynthError("reduced function is not positive-real")
    if reduced.mcmillan_degree > h.mcmillan_degree - 2:
        raise SynthError("McMillan degree did not drop by two")
    if x > 0:
        derived = {"chi": w2 + 2 * alpha * mu, "gamma": mu + 2 * alpha}
        derived["phi"] = derived["chi"] + mu * mu
    else:
        derived = {"eta": w2 + 2 * alpha * mu, "zeta": mu + 2 * alpha}
        derived["psi"] = derived["eta"] + mu * mu
    step = SynthesisStep(branch, omega0, x, mu, alpha, hval, reduced, derived)
    if not verify_theorem2_identity(h, step):
        raise SynthError("cubic composite identity failed")
    return step


def _theorem2_step_biquad(h: RationalFunction, omega0,
                          variant: Optional[str]) -> SynthesisStep:
    """Closed forms for biquadratic inputs: mu = W w0/F (nu = -F w0/W),
    H value KW, residue (F^2+W^2)(1-W) w0/(2 W^2 F) (resp. /(2WF)),
    constant reduced function W (resp. 1/W)."""
    p = biquad_params(h)
    if omega0 is not None and _as_q(omega0) != p.omega0:
        raise NotMinimum(f"omega0={omega0} is not the minimum frequency")
    K, w0, W, F = p.K, p.omega0, p.W, p.F
    x = K * F / w0
    branch = "X_positive" if x > 0 else "X_negative"
    if variant is not None and variant != branch:
        raise WrongBranch(f"requested {variant} but H(j*omega0) gives {branch}")
    w2 = w0 * w0
    if F > 0:
        mu = W * w0 / F
        alpha = (F * F + W * W) * (1 - W) * w0 / (2 * W * W * F)
        reduced = RationalFunction(Polynomial([W]))
        derived = {"chi": w2 + 2 * alpha * mu, "gamma": mu + 2 * alpha}
        derived["phi"] = derived["chi"] + mu * mu
    else:
        mu = -F * w0 / W
        alpha = (F * F + W * W) * (1 - W) * w0 / (2 * W * F)
        reduced = RationalFunction(Polynomial([1]), Polynomial([W]))
        derived = {"eta": w2 + 2 * alpha * mu, "zeta": mu + 2 * alpha}
        derived["psi"] = derived["eta"] + mu * mu
    step = SynthesisStep(branch, w0, x, mu, alpha, K * W, reduced, derived)
    assert verify_theorem2_identity(h, step)
    return step


def verify_theorem2_identity(h: RationalFunction, step: SynthesisStep) -> bool:
    """Exact check of the cubic composite identity relating H, the reduced
    function, mu (nu), alpha (beta) and omega0."""
    w2 = step.omega0 * step.omega0
    m, ab, hr = step.mu_or_nu, step.alpha_or_beta, step.reduced
    s3_s = RationalFunction(Polynomial([0, w2, 0, 1]))      # s^3 + w0^2 s
    if step.variant == "X_positive":
        num = s3_s + hr * RationalFunction(Polynomial([m * w2, 0, 2 * ab + m]))
        den = (hr * RationalFunction(Polynomial([0, 2 * ab * m + w2, 0, 1]))
               + RationalFunction(Polynomial([m * w2, 0, m])))
    else:
        num = (hr * RationalFunction(Polynomial([0, w2 + 2 * ab * m, 0, 1]))
               + RationalFunction(Polynomial([m * w2, 0, m])))
        den = s3_s + hr * RationalFunction(Polynomial([m * w2, 0, 2 * ab + m]))
    return step.h * num / den == h


# ---------------------------------------------------------------------------
# seven-element constructors (two resistors, five storage elements)
# ---------------------------------------------------------------------------

def _leaf(eid, kind, v):
    # endpoints are placeholders; net.assemble rewrites them
    return Leaf(Element(eid, kind, "_", "__", v))


def _bridge(n1, n2, n3, n4, n5) -> Network:
    """Wheatstone bridge: port a-b, internal c,d; arms N4: a-c, N1: a-d,
    N3: c-d, N2: c-b, N5: d-b."""
    return net.assemble(
        [("a", "c", n4), ("a", "d", n1), ("c", "d", n3), ("c", "b", n2),
         ("d", "b", n5)], ("a", "b"))


def _wheel_rim(sa, sb, sp, sq, rap, rbq, rpq) -> Network:
    """4-wheel with the port on the rim: hub x, rim cycle a-b-q-p-a; the
    source occupies the rim slot a-b."""
    return net.assemble(
        [("x", "a", sa), ("x", "b", sb), ("x", "p", sp), ("x", "q", sq),
         ("a", "p", rap), ("b", "q", rbq), ("p", "q", rpq)], ("a", "b"))


def _wheel_spoke(ar1, ar2, ar3, br1, br3, r12, r23) -> Network:
    """4-wheel with the port on a spoke: hub a, rim cycle b-r1-r2-r3-b."""
    return net.assemble(
        [("a", "r1", ar1), ("a", "r2", ar2), ("a", "r3", ar3),
         ("b", "r1", br1), ("b", "r3", br3), ("r1", "r2", r12),
         ("r2", "r3", r23)], ("a", "b"))


SEVEN_ELEMENT_VARIANTS = ("rpfg_first", "rpfg_second", "alt_first", "alt_second")


def build_seven_element(step: SynthesisStep, which: str) -> Network:
    """Materialize one of the four seven-element realizations for a step
    whose reduced function is a positive constant (the two impedance blocks
    then collapse to resistors).  Every output has exactly two resistors
    and five energy storage elements."""
    if which not in SEVEN_ELEMENT_VARIANTS:
        raise ValueError(f"unknown variant {which!r}")
    if not step.reduced.is_constant():
        raise NonConstantReduced(
            "impedance blocks are not resistors; the reduced function has "
            f"McMillan degree {step.reduced.mcmillan_degree}")
    w = step.reduced.constant_value()
    w0 = step.omega0
    w2 = w0 * w0
    h, ab, m = step.h, step.alpha_or_beta, step.mu_or_nu

    if step.variant == "X_positive":
        chi, gam, phi = step.derived["chi"], step.derived["gamma"], step.derived["phi"]
        if which == "rpfg_first":
            return _bridge(
                n1=ser(_leaf("r1", RESISTOR, h / w),
                       par(_leaf("l2", INDUCTOR, 2 * ab * h * phi / (w2 * chi)),
                           _leaf("c2", CAPACITOR, chi / (2 * ab * h * phi)))),
                n2=_leaf("r2", RESISTOR, h * w),
                n3=_leaf("l3", INDUCTOR, h * m / chi),
                n4=_leaf("l4", INDUCTOR, h / m),
                n5=_leaf("c5", CAPACITOR, chi / (h * m * w2)))
        if which == "rpfg_second":
            return _bridge(
                n1=_leaf("r1", RESISTOR, h / w),
                n2=par(_leaf("r2", RESISTOR, h * w),
                       ser(_leaf("l2", INDUCTOR, h * gam * m / (2 * ab * phi)),
                           _leaf("c2", CAPACITOR, 2 * ab * phi / (h * gam * m * w2)))),
                n3=_leaf("l3", INDUCTOR, h * gam / w2),
                n4=_leaf("l4", INDUCTOR, h / m),
                n5=_leaf("c5", CAPACITOR, 1 / (h * gam)))
        if which == "alt_first":
            return _wheel_rim(
                sa=_leaf("r1", RESISTOR, h * w),
                sb=_leaf("l1", INDUCTOR, h / m),
                sp=_leaf("l2", INDUCTOR, 2 * ab * h * m * m / (chi * chi)),
                sq=_leaf("l3", INDUCTOR, 2 * ab * h / w2),
                rap=_leaf("c1", CAPACITOR, chi / (h * m * w2)),
                rbq=_leaf("r2", RESISTOR, h / w),
                rpq=_leaf("c2", CAPACITOR, chi / (2 * ab * h * phi)))
        # alt_second
        return _wheel_spoke(
            ar1=_leaf("r1", RESISTOR, h * w),
            ar2=_leaf("c1", CAPACITOR, 2 * ab * phi / (h * gam * m * w2)),
            ar3=_leaf("c2", CAPACITOR, 1 / (h * gam)),
            br1=_leaf("l1", INDUCTOR, h / m),
            br3=_leaf("r2", RESISTOR, h / w),
            r12=_leaf("l2", INDUCTOR, h / (2 * ab)),
            r23=_leaf("l3", INDUCTOR, h * gam * gam / (2 * ab * w2)))

    eta, zeta, psi = step.derived["eta"], step.derived["zeta"], step.derived["psi"]
    if which == "rpfg_first":
        return _bridge(
            n1=_leaf("r1", RESISTOR, h / w),
            n2=par(_leaf("r2", RESISTOR, h * w),
                   ser(_leaf("c2", CAPACITOR, 2 * ab * psi / (eta * h * w2)),
                       _leaf("l2", INDUCTOR, eta * h / (2 * ab * psi)))),
            n3=_leaf("c3", CAPACITOR, m / (eta * h)),
            n4=_leaf("c4", CAPACITOR, 1 / (h * m)),
            n5=_leaf("l5", INDUCTOR, h * eta / (m * w2)))
    if which == "rpfg_second":
        return _bridge(
            n1=ser(_leaf("r1", RESISTOR, h / w),
                   par(_leaf("c1", CAPACITOR, m * zeta / (2 * ab * psi * h)),
                       _leaf("l1", INDUCTOR, 2 * ab * h * psi / (zeta * m * w2)))),
            n2=_leaf("r2", RESISTOR, h * w),
            n3=_leaf("c3", CAPACITOR, zeta / (h * w2)),
            n4=_leaf("c4", CAPACITOR, 1 / (h * m)),
            n5=_leaf("l5", INDUCTOR, h / zeta))
    if which == "alt_first":
        return _wheel_spoke(
            ar1=_leaf("r1", RESISTOR, h * w),
            ar2=_leaf("l1", INDUCTOR, eta * h / (2 * ab * psi)),
            ar3=_leaf("l2", INDUCTOR, h * eta / (m * w2)),
            br1=_leaf("c1", CAPACITOR, 1 / (h * m)),
            br3=_leaf("r2", RESISTOR, h / w),
            r12=_leaf("c2", CAPACITOR, 2 * ab / (h * w2)),
            r23=_leaf("c3", CAPACITOR, 2 * ab * m * m / (h * eta * eta)))
    # alt_second
    return _wheel_rim(
        sa=_leaf("r1", RESISTOR, h * w),
        sb=_leaf("c1", CAPACITOR, 1 / (h * m)),
        sp=_leaf("c2", CAPACITOR, zeta * zeta / (2 * ab * h * w2)),
        sq=_leaf("c3", CAPACITOR, 1 / (2 * ab * h)),
        rap=_leaf("l1", INDUCTOR, h / zeta),
        rbq=_leaf("r2", RESISTOR, h / w),
        rpq=_leaf("l2", INDUCTOR, 2 * ab * h * psi / (zeta * m * w2)))


# ---------------------------------------------------------------------------
# the minimal-storage classifier
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    storage_min: int                # 3, 4 or 5
    condition: str                  # "a".."f" or "none"
    witness_network: Network


def classify_biquad(p: BiquadParams) -> Classification:
    """Minimum number of energy storage elements over all RLC realizations
    of the biquadratic minimum function with parameters p, with a witness.

    Three-element conditions: (a) W = 1/2, F > 0; (b) W = 2, F < 0.
    Four-element boundary conditions (exact squared comparisons):
    (c) 1/2<W<1, F^2 (1-W)^2 = W^2 (2W-1);
    (d) 1<W<2,   F^2 (2-W)   = W (1-W)^2;
    (e) 1<W<2,   F^2 (1-W)^2 = W^3 (2-W);
    (f) 1/2<W<1, F^2 (2W-1)  = W^2 (1-W)^2.
    Anything else needs five storage elements (witness: seven-element
    realization)."""
    W, F = p.W, p.F
    phi = 1 - W
    if W == Q(1, 2) and F > 0:
        return Classification(3, "a", build_named("N1", p))
    if W == 2 and F < 0:
        return Classification(3, "b", build_named("N2", p))
    if Q(1, 2) < W < 1 and F * F * phi * phi == W * W * (2 * W - 1):
        return Classification(4, "c", build_named("N3", p))
    if 1 < W < 2 and F * F * (2 - W) == W * phi * phi:
        return Classification(4, "d", build_named("N4", p))
    if 1 < W < 2 and F * F * phi * phi == W * W * W * (2 - W):
        return Classification(4, "e", build_named("N5", p))
    if Q(1, 2) < W < 1 and F * F * (2 * W - 1) == W * W * phi * phi:
        return Classification(4, "f", build_named("N6", p))
    step = theorem2_step(biquad_template(p), p.omega0)
    return Classification(5, "none", build_seven_element(step, "rpfg_first"))


NAMED_NETWORKS = ("N1", "N2", "N3", "N4", "N5", "N6", "Fig2a", "Fig2b")


def build_named(name: str, p: BiquadParams) -> Network:
    """Wire one of the named fixed-topology realizations for parameters p.

    Parameter constraints of the corresponding classification condition are
    validated exactly (ConditionViolated)."""
    K, w0, W, F = p.K, p.omega0, p.W, p.F
    phi, psi, eta, gam = 1 - W, 1 + W, 2 * W - 1, 2 - W
    if name == "N1":
        if W != Q(1, 2) or F <= 0:
            raise ConditionViolated("N1 requires W = 1/2 and F > 0")
        return _bridge(
            n1=_leaf("r1", RESISTOR, K / 2),
            n2=_leaf("r2", RESISTOR, K / 2),
            n3=_leaf("c3", CAPACITOR, 1 / (K * F * w0)),
            n4=_leaf("l4", INDUCTOR, K * F / w0),
            n5=_leaf("l5", INDUCTOR, K * F / w0))
    if name == "N2":
        if W != 2 or F >= 0:
            raise ConditionViolated("N2 requires W = 2 and F < 0")
        return _bridge(
            n1=_leaf("r1", RESISTOR, 2 * K),
            n2=_leaf("r2", RESISTOR, 2 * K),
            n3=_leaf("l3", INDUCTOR, -K * F / w0),
            n4=_leaf("c4", CAPACITOR, -1 / (K * F * w0)),
            n5=_leaf("c5", CAPACITOR, -1 / (K * F * w0)))
    if name == "N3":
        if not (Q(1, 2) < W < 1 and F > 0
                and F * F * phi * phi == W * W * eta):
            raise ConditionViolated("N3 requires condition (c)")
        return _bridge(
            n1=_leaf("r1", RESISTOR, K * W * W / (phi * psi)),
            n2=_leaf("r2", RESISTOR, K),
            n3=_leaf("c3", CAPACITOR, 1 / (K * F * w0)),
            n4=par(_leaf("l4", INDUCTOR, K * F * phi / (W * w0)),
                   _leaf("c4", CAPACITOR, eta / (K * F * phi * w0))),
            n5=_leaf("l5", INDUCTOR, K * F / w0))
    if name == "N4":
        if not (1 < W < 2 and F < 0 and F * F * gam == W * phi * phi):
            raise ConditionViolated("N4 requires condition (d)")
        return _bridge(
            n1=_leaf("r1", RESISTOR, K),
            n2=_leaf("r2", RESISTOR, -K * phi * psi),
            n3=_leaf("l3", INDUCTOR, -K * F / w0),
            n4=ser(_leaf("c4", CAPACITOR, phi / (K * F * w0)),
                   _leaf("l4", INDUCTOR, K * F * gam / (phi * w0))),
            n5=_leaf("c5", CAPACITOR, -1 / (K * F * w0)))
    if name == "N5":
        if not (1 < W < 2 and F < 0
                and F * F * phi * phi == W * W * W * gam):
            raise ConditionViolated("N5 requires condition (e)")
        return _bridge(
            n1=_leaf("r1", RESISTOR, -K * W * W / (phi * psi)),
            n2=_leaf("r2", RESISTOR, K * W * W),
            n3=_leaf("l3", INDUCTOR, -K * F / w0),
            n4=par(_leaf("c4", CAPACITOR, 1 / (K * F * phi * w0)),
                   _leaf("l4", INDUCTOR, K * F * phi / (gam * w0))),
            n5=_leaf("c5", CAPACITOR, -1 / (K * F * w0)))
    if name == "N6":
        if not (Q(1, 2) < W < 1 and F > 0
                and F * F * eta == W * W * phi * phi):
            raise ConditionViolated("N6 requires condition (f)")
        return _bridge(
            n1=_leaf("r1", RESISTOR, K * phi * psi),
            n2=_leaf("r2", RESISTOR, K * W * W),
            n3=_leaf("c3", CAPACITOR, 1 / (K * F * w0)),
            n4=_leaf("l4", INDUCTOR, K * F / w0),
            n5=ser(_leaf("c5", CAPACITOR, phi / (K * F * eta * w0)),
                   _leaf("l5", INDUCTOR, K * F * W / (phi * w0))))
    if name in ("Fig2a", "Fig2b"):
        return _build_fig2(name, p)
    raise ValueError(f"unknown named network {name!r}")


@dataclass(frozen=True)
class Fig2Params:
    """Parameters of the non-stabilizable pair of realizations, with the
    derived symbols phi = 1-W, psi = 1+W, eta = 2W-1 and
    zeta = W^2 phi^2 - F^2 eta.  Valid when 1/2 < W < 1 and
    0 < F < W(1-W)/sqrt(2W-1), i.e. zeta > 0."""

    K: Fraction
    omega0: Fraction
    W: Fraction
    F: Fraction

    def __post_init__(self):
        for name in ("K", "omega0", "W", "F"):
            object.__setattr__(self, name, _as_q(getattr(self, name)))
        if self.K <= 0 or self.omega0 <= 0:
            raise ConditionViolated("K and omega0 must be positive")
        if not (Q(1, 2) < self.W < 1 and self.F > 0 and self.zeta > 0):
            raise ConditionViolated(
                "require 1/2 < W < 1 and 0 < F < W(1-W)/sqrt(2W-1)")

    @property
    def phi(self) -> Fraction:
        return 1 - self.W

    @property
    def psi(self) -> Fraction:
        return 1 + self.W

    @property
    def eta(self) -> Fraction:
        return 2 * self.W - 1

    @property
    def zeta(self) -> Fraction:
        return (self.W * self.phi) ** 2 - self.F * self.F * self.eta


def _build_fig2(name: str, p: BiquadParams) -> Network:
    fp = Fig2Params(p.K, p.omega0, p.W, p.F)
    K, w0, W, F = fp.K, fp.omega0, fp.W, fp.F
    phi, psi, eta, zeta = fp.phi, fp.psi, fp.eta, fp.zeta
    if name == "Fig2b":
        elems = [
            Element("l1", INDUCTOR, "n4", "P", K * F / w0),
            Element("l2", INDUCTOR, "N", "n3", K * F * W / (phi * w0)),
            Element("c3", CAPACITOR, "n4", "n2", 1 / (K * F * w0)),
            Element("c4", CAPACITOR, "n1", "n2", F * W / (K * zeta * w0)),
            Element("c5", CAPACITOR, "n2", "n3", phi / (K * eta * F * w0)),
            Element("r1", RESISTOR, "P", "n1", K * phi * psi),
            Element("r2", RESISTOR, "n4", "N", K * W * W),
        ]
    else:
        elems = [
            Element("l1", INDUCTOR, "n4", "P", K * F / w0),
            Element("l2", INDUCTOR, "N", "n3", K * F * W / (phi * w0)),
            Element("ca", CAPACITOR, "n1", "n4", F * eta / (K * phi * phi * W * W * w0)),
            Element("cb", CAPACITOR, "n4", "n3", zeta / (K * phi * F * W ** 3 * w0)),
            Element("cc", CAPACITOR, "n3", "n1", F / (K * phi * W * W * w0)),
            Element("r1", RESISTOR, "P", "n1", K * phi * psi),
            Element("r2", RESISTOR, "n4", "N", K * W * W),
        ]
    verts = {v for e in elems for v in (e.head, e.tail)}
    return Network(verts, elems, ("P", "N"))


# ---------------------------------------------------------------------------
# quartet constructors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuartetParams:
    """Element parameters of the fixed-topology quartet families.  E is
    derived for N8/N9/N10 (CD/(C+D), (A+B)/(B+D), and
    (B-D)/(C-D) respectively) and a free fifth parameter for N11/N12."""

    family: str
    A: Optional[Fraction] = None
    B: Optional[Fraction] = None
    C: Optional[Fraction] = None
    D: Optional[Fraction] = None
    E: Optional[Fraction] = None

    def __post_init__(self):
        for f in ("A", "B", "C", "D", "E"):
            v = getattr(self, f)
            if v is not None:
                object.__setattr__(self, f, _as_q(v))

    def derived_E(self) -> Fraction:
        base = self.family.rstrip("abdi")
        if base == "N8":
            return self.C * self.D / (self.C + self.D)
        if base == "N9":
            return (self.A + self.B) / (self.B + self.D)
        if base == "N10":
            return (self.B - self.D) / (self.C - self.D)
        if self.E is None:
            raise ConstraintViolated(f"{self.family} needs the E parameter")
        return self.E


def _quartet_base(fam: str, qp: QuartetParams, w0: Fraction) -> Network:
    A, B, C, D = qp.A, qp.B, qp.C, qp.D
    if fam == "N7":
        if not (A > 0 and B > 0 and C > 0):
            raise ConstraintViolated("N7 requires A, B, C > 0")
        return _bridge(
            n1=_leaf("r1", RESISTOR, A),
            n2=_leaf("r2", RESISTOR, B),
            n3=_leaf("c3", CAPACITOR, 1 / (C * w0)),
            n4=_leaf("l4", INDUCTOR, C / w0),
            n5=_leaf("l5", INDUCTOR, C / w0))
    if fam == "N8":
        if not (A > 0 and B > 0 and C > 0 and D > 0):
            raise ConstraintViolated("N8 requires A, B, C, D > 0")
        E = C * D / (C + D)
        return _bridge(
            n1=_leaf("r1", RESISTOR, A),
            n2=_leaf("r2", RESISTOR, B),
            n3=_leaf("c3", CAPACITOR, 1 / (D * w0)),
            n4=par(_leaf("l4", INDUCTOR, E / w0),
                   _leaf("c4", CAPACITOR, 1 / (C * w0))),
            n5=_leaf("l5", INDUCTOR, D / w0))
    if fam == "N9":
        if not (A > 0 and B > 0 and C > 0 and D > 0):
            raise ConstraintViolated("N9 requires A, B, C, D > 0")
        E = (A + B) / (B + D)
        return _bridge(
            n1=_leaf("r1", RESISTOR, C),
            n2=_leaf("c2", CAPACITOR, 1 / (B * w0)),
            n3=_leaf("c3", CAPACITOR, 1 / (A * w0)),
            n4=_leaf("l4", INDUCTOR, A / (E * w0)),
            n5=_leaf("l5", INDUCTOR, D * E / w0))
    if fam == "N10":
        if not (A > 0 and B > 0 and C > 0 and (B - D) * (C - D) > 0 and B != C):
            raise ConstraintViolated(
                "N10 requires A, B, C, (B-D)(C-D) > 0 and B != C")
        E = (B - D) / (C - D)
        return _bridge(
            n1=_leaf("c1", CAPACITOR, 1 / (C * E * w0)),
            n2=_leaf("c2", CAPACITOR, E / (B * w0)),
            n3=_leaf("r3", RESISTOR, A),
            n4=_leaf("l4", INDUCTOR, B / w0),
            n5=_leaf("l5", INDUCTOR, C / w0))
    if fam in ("N11", "N11a", "N11b", "N12", "N12a", "N12b"):
        base = fam[:3]
        degen = fam[3:]
        E = qp.derived_E()
        if degen == "a":
            if not (A == 0 and B > 0 and C > 0 and D > 0 and E > 0):
                raise ConstraintViolated(f"{fam} requires A = 0, B, C, D, E > 0")
        elif degen == "b":
            if not (C == 0 and A > 0 and B > 0 and D > 0 and E > 0):
                raise ConstraintViolated(f"{fam} requires C = 0, A, B, D, E > 0")
        else:
            if not (A > 0 and B > 0 and C > 0 and D > 0 and E > 0):
                raise ConstraintViolated(f"{fam} requires A, B, C, D, E > 0")
        storage = (_leaf("c1", CAPACITOR, 1 / (D * w0)) if base == "N11"
                   else _leaf("l1", INDUCTOR, D / w0))
        # N1-arm: series(R_A, parallel(R_{1/C}, storage)); the annotations:
        # A = 0 shorts the series resistor, C = 0 opens the parallel one
        parts = []
        if degen != "a":
            parts.append(_leaf("r1", RESISTOR, A))
        inner = [storage]
        if degen != "b":
            inner.append(_leaf("r3", RESISTOR, 1 / C))
        parts.append(par(*inner) if len(inner) > 1 else inner[0])
        n1 = ser(*parts) if len(parts) > 1 else parts[0]
        return _bridge(
            n1=n1,
            n2=_leaf("r2", RESISTOR, B),
            n3=_leaf("c3", CAPACITOR, 1 / (E * w0)),
            n4=_leaf("l4", INDUCTOR, E / w0),
            n5=_leaf("l5", INDUCTOR, E / w0))
    raise ValueError(f"unknown quartet family {fam!r}")


def build_quartet(qp: QuartetParams, omega0) -> Network:
    """Build a member of the quartet families.

    Family names: base N7/N8/N9/N10/N11/N12 (plus N11a/N11b/N12a/N12b
    degenerate members), with optional suffixes 'i' (frequency inversion),
    'd' (dual) and 'di' (both), e.g. "N8di"."""
    w0 = _as_q(omega0)
    fam = qp.family
    suffix = ""
    for cand in ("di", "d", "i"):
        if fam.endswith(cand) and fam[: -len(cand)] in (
                "N7", "N8", "N9", "N10", "N11", "N11a", "N11b",
                "N12", "N12a", "N12b"):
            suffix = cand
            fam = fam[: -len(cand)]
            break
    base = _quartet_base(fam, qp, w0)
    if suffix == "":
        return base
    if suffix == "i":
        return net.frequency_invert(base, w0)
    if suffix == "d":
        return net.dual(base)
    return net.frequency_invert(net.dual(base), w0)


# ---------------------------------------------------------------------------
# bridge structural matcher (minimum-function networks with <= 4 storage)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureMatch:
    """Decomposition of a network into the five-arm bridge with the
    condition (1-4) its one-port impedances satisfy at j*omega0."""

    lemma8_condition: int
    bridge_assignment: Dict[str, Tuple[str, ...]]
    corners: Tuple[str, str, str, str]      # (a, b, c, d)


def _tree_impedance(tree) -> RationalFunction:
    if isinstance(tree, Leaf):
        return tree.element.impedance()
    parts = [_tree_impedance(p) for p in tree.parts]
    if isinstance(tree, net.Ser):
        total = parts[0]
        for x in parts[1:]:
            total = total + x
        return total
    inv = parts[0].reciprocal()
    for x in parts[1:]:
        inv = inv + x.reciprocal()
    return inv.reciprocal()


def _arm_kinds(tree) -> List[str]:
    return [e.kind for e in net.tree_elements(tree)]


def _is_single(tree, kind) -> bool:
    ks = _arm_kinds(tree)
    return len(ks) == 1 and ks[0] == kind


def _is_lc_pair(tree) -> bool:
    if not isinstance(tree, (net.Ser, net.Par)):
        return False
    ks = sorted(_arm_kinds(tree))
    return len(ks) == 2 and ks == [CAPACITOR, INDUCTOR]


def match_minimum_structure(n: Network, omega0) -> StructureMatch:
    """Identify the bridge decomposition and which structural condition the
    arm impedances satisfy at j*omega0.

    Conditions (fixed structural list, conventional numbering):
    1. N1 only resistors; N2,N3 capacitors and N4,N5 inductors (or the
       swap); Z2(Z3+Z4) + Z4(Z3+Z5) = 0.
    2. N1,N2 capacitors; N3 only resistors; N4,N5 inductors;
       Z1 Z2 = Z4 Z5 with Z1 != -Z4 and Z1 != -Z5.
    3. N1 resistors plus at most one storage element; N2 only resistors;
       N3 only capacitors (resp. inductors); N4,N5 only inductors (resp.
       capacitors); Z3 = -Z4 = -Z5.
    4. N1,N2 only resistors; N3 a capacitor (resp. inductor); N4 a series
       or parallel LC pair; N5 an inductor (resp. capacitor);
       Z3 = -Z4 = -Z5.
    """
    from . import analysis

    w0 = _as_q(omega0)
    w2 = w0 * w0
    if analysis.storage_count(n) > 4:
        raise NoMatch("more than four storage elements")
    h = analysis.impedance(n)
    if isinstance(h, analysis.NoImpedance) or not is_minimum_function(h):
        raise NoMatch("impedance is not a minimum function")
    re, im = h.eval_jomega_pair(w2)
    if re != 0 or im == 0:
        raise NoMatch(f"omega0={w0} is not a minimum frequency")
    edges, kind = net.skeleton(n)
    if kind != "bridge":
        raise NoMatch("network does not reduce to the five-arm bridge")
    arms, (a, b, c, d) = net._bridge_positions(n, edges)

    def zval(tree) -> QC:
        za, zb = _tree_impedance(tree).eval_jomega_pair(w2)
        return (za, zb)

    base = {k: arms[k] for k in ("N1", "N2", "N3", "N4", "N5")}
    # the bridge's two-terminal symmetries: swap c<->d and/or a<->b
    relabelings = [
        {"N1": "N1", "N2": "N2", "N3": "N3", "N4": "N4", "N5": "N5"},
        {"N1": "N4", "N2": "N5", "N3": "N3", "N4": "N1", "N5": "N2"},
        {"N1": "N5", "N2": "N4", "N3": "N3", "N4": "N2", "N5": "N1"},
        {"N1": "N2", "N2": "N1", "N3": "N3", "N4": "N5", "N5": "N4"},
    ]
    for rel in relabelings:
        t = {pos: base[rel[pos]] for pos in base}
        z = {pos: zval(t[pos]) for pos in t}
        cond = _test_conditions(t, z, w2)
        if cond is not None:
            assignment = {pos: tuple(sorted(e.id for e in net.tree_elements(t[pos])))
                          for pos in t}
            return StructureMatch(cond, assignment, (a, b, c, d))
    raise NoMatch("no structural condition holds at j*omega0")


def _neg(z):
    return (-z[0], -z[1])


def _zmul(z1, z2, w2):
    # (a1 + j b1 w0)(a2 + j b2 w0) with w0^2 = w2
    return (z1[0] * z2[0] - w2 * z1[1] * z2[1], z1[0] * z2[1] + z1[1] * z2[0])


def _zadd(z1, z2):
    return (z1[0] + z2[0], z1[1] + z2[1])


def _test_conditions(t, z, w2) -> Optional[int]:
    kinds = {pos: _arm_kinds(t[pos]) for pos in t}

    def all_kind(pos, kind):
        return kinds[pos] and all(k == kind for k in kinds[pos])

    # condition 1
    if all_kind("N1", RESISTOR):
        for k23, k45 in ((CAPACITOR, INDUCTOR), (INDUCTOR, CAPACITOR)):
            if (_is_single(t["N2"], k23) and _is_single(t["N3"], k23)
                    and _is_single(t["N4"], k45) and _is_single(t["N5"], k45)):
                lhs = _zadd(_zmul(z["N2"], _zadd(z["N3"], z["N4"]), w2),
                            _zmul(z["N4"], _zadd(z["N3"], z["N5"]), w2))
                if lhs == (0, 0):
                    return 1
    # condition 2
    if (_is_single(t["N1"], CAPACITOR) and _is_single(t["N2"], CAPACITOR)
            and all_kind("N3", RESISTOR)
            and _is_single(t["N4"], INDUCTOR) and _is_single(t["N5"], INDUCTOR)):
        if (_zmul(z["N1"], z["N2"], w2) == _zmul(z["N4"], z["N5"], w2)
                and z["N1"] != _neg(z["N4"]) and z["N1"] != _neg(z["N5"])):
            return 2
    # condition 3
    n1k = kinds["N1"]
    n1_ok = (any(k == RESISTOR for k in n1k)
             and sum(1 for k in n1k if k != RESISTOR) <= 1)
    if n1_ok and all_kind("N2", RESISTOR):
        for k3, k45 in ((CAPACITOR, INDUCTOR), (INDUCTOR, CAPACITOR)):
            if (all_kind("N3", k3) and all_kind("N4", k45)
                    and all_kind("N5", k45)):
                if z["N3"] == _neg(z["N4"]) and z["N3"] == _neg(z["N5"]):
                    return 3
    # condition 4
    if all_kind("N1", RESISTOR) and all_kind("N2", RESISTOR) and _is_lc_pair(t["N4"]):
        for k3, k5 in ((CAPACITOR, INDUCTOR), (INDUCTOR, CAPACITOR)):
            if _is_single(t["N3"], k3) and _is_single(t["N5"], k5):
                if z["N3"] == _neg(z["N4"]) and z["N3"] == _neg(z["N5"]):
                    return 4
    return None


QC = Tuple[Fraction, Fraction]


# ---------------------------------------------------------------------------
# structural Sylvester-resultant fixtures
# ---------------------------------------------------------------------------

# arm index sets whose impedances multiply in the bridge formula
_TREE_COMPLEMENTS = [(1, 2), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]
_TWOTREE_COMPLEMENTS = [(2, 3, 5), (1, 2, 5), (1, 2, 3), (2, 4, 5),
                        (3, 4, 5), (1, 4, 5), (1, 2, 4), (1, 3, 4)]


def _pair_R(v):
    return (Polynomial([v]), ONE_POLY)


def _pair_L(v):
    return (Polynomial([0, v]), ONE_POLY)


def _pair_C(v):
    # impedance 1/(v s)
    return (ONE_POLY, Polynomial([0, v]))


ONE_POLY = Polynomial([1])


def _pair_ser(p1, p2):
    return (p1[0] * p2[1] + p2[0] * p1[1], p1[1] * p2[1])


def _pair_par(p1, p2):
    return (p1[0] * p2[0], p1[0] * p2[1] + p2[0] * p1[1])


def bridge_structural_polys(arms: Dict[int, Tuple[Polynomial, Polynomial]]):
    """Unreduced numerator/denominator polynomials of the five-arm bridge
    impedance, with every arm given as an unreduced (num, den) pair.

    The terms are the spanning-tree sums of the four-vertex bridge graph;
    clearing all arm denominators keeps the natural polynomial degrees
    (equal to the number of storage elements for single-storage arms)."""
    num = Polynomial()
    for combo in _TWOTREE_COMPLEMENTS:
        term = ONE_POLY
        for k in range(1, 6):
            term = term * (arms[k][0] if k in combo else arms[k][1])
        num = num + term
    den = Polynomial()
    for combo in _TREE_COMPLEMENTS:
        term = ONE_POLY
        for k in range(1, 6):
            term = term * (arms[k][0] if k in combo else arms[k][1])
        den = den + term
    return num, den


def _lagrange(points: List[Tuple[Fraction, Fraction]]) -> Polynomial:
    total = Polynomial()
    for i, (xi, yi) in enumerate(points):
        li = Polynomial([1])
        denom = Q(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            li = li * Polynomial([-xj, 1])
            denom *= (xi - xj)
        total = total + li * (yi / denom)
    return total


def _poly_sqrt(p: Polynomial) -> Optional[Polynomial]:
    """Exact polynomial square root with positive leading coefficient."""
    if p.is_zero():
        return Polynomial()
    deg = int(p.degree)
    if deg % 2:
        return None
    n = deg // 2
    lead = sqrt_fraction(p.leading())
    if lead is None:
        return None
    a = [Q(0)] * (n + 1)
    a[n] = lead
    for k in range(2 * n - 1, n - 1, -1):
        idx = k - n
        acc = Q(0)
        for i in range(idx + 1, n + 1):
            j = k - i
            if 0 <= j <= n:
                acc += a[i] * a[j]
        a[idx] = (p.coeff(k) - acc) / (2 * a[n])
    f = Polynomial(a)
    return f if f * f == p else None


def _fixture_samples(var_count: int = 24) -> List[Fraction]:
    return [Q(k, 7) for k in range(1, var_count + 1)]


def _sylvester_nominal(p: Polynomial, q: Polynomial, m: int, n: int) -> Fraction:
    """Resultant-style determinant at the nominal degrees (m, n) of the
    generic family, so that specialization (vanishing leading coefficients)
    commutes with the determinant."""
    from .polyrat import det_bareiss
    if int(p.degree) > m or int(q.degree) > n:
        raise ConstraintViolated("specialized degree exceeds the nominal one")
    pdesc = [p.coeff(m - i) for i in range(m + 1)]
    qdesc = [q.coeff(n - i) for i in range(n + 1)]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([pdesc[j - i] if 0 <= j - i <= m else Q(0)
                     for j in range(size)])
    for i in range(m):
        rows.append([qdesc[j - i] if 0 <= j - i <= n else Q(0)
                     for j in range(size)])
    return det_bareiss(rows)


def resultant_fixture_check(family: str, subs: Dict[str, Fraction]) -> bool:
    """Verify the closed-form Sylvester factorizations used in the
    biquadratic classification proofs, at an exact rational substitution
    point.

    family "Q7": subs g1, g2, F, omega0; checks the degree-3 structural
    resultant factorization directly.
    family "Q8": subs g1, g2, c2, omega0; reconstructs the elimination
    polynomials f1(F), f2(F) from the structural resultants and checks
    both printed factorizations and their resultant identity.
    family "N11"/"N12": subs r1, g2, g3, F, omega0; f1 has a known closed
    form, f2 is reconstructed, and both the R0/R1 factorizations and the
    final resultant identity are checked."""
    subs = {k: _as_q(v) for k, v in subs.items()}
    w0 = subs.get("omega0", Q(1))
    if family == "Q7":
        g1, g2, F = subs["g1"], subs["g2"], subs["F"]
        p, q = _q7_struct(g1, g2, F, w0)
        r0 = sylvester_determinant(p, q, 0)
        return r0 == F * F * w0 ** 9 * (g1 - g2) ** 2 * (1 + F * F * g1 * g2) ** 4
    if family == "Q8":
        return _check_q8(subs, w0)
    if family in ("N11", "N12"):
        return _check_n11_n12(family, subs, w0)
    raise ValueError(f"unknown fixture family {family!r}")


def _q7_struct(g1, g2, F, w0):
    arms = {
        1: _pair_R(1 / g1),
        2: _pair_R(1 / g2),
        3: _pair_C(1 / (F * w0)),
        4: _pair_L(F / w0),
        5: _pair_L(F / w0),
    }
    num, den = bridge_structural_polys(arms)
    if num.degree != 3 or den.degree != 3 or num(Q(0)) == 0:
        raise ConstraintViolated("Q7 structural polynomials are degenerate")
    c = w0 ** 3 / num(Q(0))
    return num * c, den * (c * F)


def _q8_struct(g1, g2, c2, F, w0):
    clab = F / c2
    e = clab * F / (clab + F)
    arms = {
        1: _pair_R(1 / g1),
        2: _pair_R(1 / g2),
        3: _pair_C(1 / (F * w0)),
        4: _pair_par(_pair_L(e / w0), _pair_C(1 / (clab * w0))),
        5: _pair_L(F / w0),
    }
    num, den = bridge_structural_polys(arms)
    if num.degree != 4 or den.degree != 4 or num(Q(0)) == 0:
        raise ConstraintViolated("Q8 structural polynomials are degenerate")
    c = (1 + c2) * w0 ** 4 / num(Q(0))
    return num * c, den * (c * F)


def _check_q8(subs, w0) -> bool:
    g1, g2, c2 = subs["g1"], subs["g2"], subs["c2"]
    r0_pts, r1_pts = [], []
    for F in _fixture_samples():
        p, q = _q8_struct(g1, g2, c2, F, w0)
        cof0 = c2 * w0 ** 16 * (1 + c2) * (1 + F * F * g1 * g2) ** 4
        cof1 = -c2 * w0 ** 9 * (1 + F * F * g1 * g2) ** 2
        r0 = sylvester_determinant(p, q, 0)
        r1 = sylvester_determinant(p, q, 1)
        if cof0 == 0 or cof1 == 0:
            return False
        val0 = r0 / cof0
        val1 = r1 / cof1
        r0_pts.append((F, val0))
        r1_pts.append((F, val1))
    f1sq = _lagrange(r0_pts)
    f2 = _lagrange(r1_pts)
    f1 = _poly_sqrt(f1sq)
    if f1 is None:
        return False
    # spot-check the interpolations on a fresh sample
    Fx = Q(31, 5)
    p, q = _q8_struct(g1, g2, c2, Fx, w0)
    if (sylvester_determinant(p, q, 0)
            != c2 * w0 ** 16 * (1 + c2) * (1 + Fx * Fx * g1 * g2) ** 4 * f1sq(Fx)):
        return False
    if (sylvester_determinant(p, q, 1)
            != -c2 * w0 ** 9 * (1 + Fx * Fx * g1 * g2) ** 2 * f2(Fx)):
        return False
    # the elimination identity at the generic degrees (2, 6); even nominal
    # degree of f2 makes the result invariant under the sign of f1
    res = _sylvester_nominal(f1, f2, 2, 6)
    rhs = (c2 ** 6 * g2 ** 10 * (1 + c2) ** 2
           * (c2 * c2 * g1 + 2 * c2 * (g1 - g2) + g1 - 3 * g2) ** 2)
    return res == rhs


def _n1112_struct(family, r1, g2, g3, F, var, w0, strict=True):
    # var is c1 (N11) or x1 (N12); g2 = 0 opens the parallel resistor
    storage = _pair_C(var / (F * w0)) if family == "N11" else _pair_L(F / (var * w0))
    inner = storage if g2 == 0 else _pair_par(_pair_R(1 / g2), storage)
    arm1 = _pair_ser(_pair_R(r1), inner)
    arms = {
        1: arm1,
        2: _pair_R(1 / g3),
        3: _pair_C(1 / (F * w0)),
        4: _pair_L(F / w0),
        5: _pair_L(F / w0),
    }
    num, den = bridge_structural_polys(arms)
    if strict and (num.degree != 4 or den.degree != 4 or num(Q(0)) == 0):
        raise ConstraintViolated(f"{family} structural polynomials are degenerate")
    if not strict:
        return num, den
    if family == "N11":
        target0 = F * (1 + r1 * g2) * w0 ** 4
    else:
        target0 = r1 * var * w0 ** 4
    c = target0 / num(Q(0))
    return num * c, den * (c * F)


def _check_n11_n12(family, subs, w0) -> bool:
    r1, g2, g3, F = subs["r1"], subs["g2"], subs["g3"], subs["F"]
    one_m = 1 - r1 * g3
    if family == "N11":
        f1_printed = Polynomial([F * F * g3 * (g3 - g2 * one_m), one_m])
        # positive-definite middle factor, so the vanishing locus is carried
        # by (1 - r1 g3) and the trailing factor alone
        rhs_final = (F ** 10 * g3 ** 5 * (1 - r1 * g3)
                     * ((g2 * one_m * (r1 + F * F * g3) + 1 - g3 * r1
                         - F * F * g3 * g3) ** 2 + g3 * g3 * F * F) ** 2
                     * (g3 * (3 - r1 * g3 + r1 * g2 * (2 - r1 * g3)) - g2))

        def cof0(v):
            return (F ** 4 * w0 ** 16 * v
                    * (v * v * (r1 + F * F * g3) ** 2
                       + F * F * (1 + r1 * g2 + F * F * g2 * g3) ** 2) ** 2)

        def cof1(v):
            return -F * F * v * w0 ** 9
    else:
        f1_printed = Polynomial([g3 - g2 * one_m, g3 * one_m])
        rhs_final = (-F * F * g3 ** 5
                     * ((g2 * one_m * (r1 + F * F * g3) - g3 * r1) ** 2
                        + g3 * g3 * F * F) ** 2
                     * (g3 - g2 * one_m)
                     * (g2 * one_m * one_m + g3 * (1 + r1 * g3)))

        def cof0(v):
            return (-F ** 6 * w0 ** 16 * v
                    * ((F * F * g3 + r1) ** 2 * v * v
                       + F * F * (1 + r1 * g2 + F * F * g2 * g3) ** 2) ** 2)

        def cof1(v):
            return F ** 6 * w0 ** 9

    pts0, pts1 = [], []
    for v in _fixture_samples():
        p, q = _n1112_struct(family, r1, g2, g3, F, v, w0)
        c0, c1 = cof0(v), cof1(v)
        if c0 == 0 or c1 == 0:
            return False
        pts0.append((v, sylvester_determinant(p, q, 0) / c0))
        pts1.append((v, sylvester_determinant(p, q, 1) / c1))
    f1sq = _lagrange(pts0)
    f2 = _lagrange(pts1)
    if f1sq != f1_printed * f1_printed:
        return False
    vx = Q(29, 4)
    p, q = _n1112_struct(family, r1, g2, g3, F, vx, w0)
    if sylvester_determinant(p, q, 0) != cof0(vx) * f1sq(vx):
        return False
    if sylvester_determinant(p, q, 1) != cof1(vx) * f2(vx):
        return False
    # elimination identity at the generic degrees (1, 5)
    return _sylvester_nominal(f1_printed, f2, 1, 5) == rhs_final


def n12_has_no_feasible_solution(r1, g2, g3, F) -> bool:
    """For feasible parameters (r1, g2 >= 0 and g3, F > 0), no x1 > 0 makes
    the structural polynomial pair drop to McMillan degree two; i.e. the
    family has no biquadratic members."""
    r1, g2, g3, F = map(_as_q, (r1, g2, g3, F))
    if r1 == 0:
        # the structural numerator then vanishes at s = 0: the impedance has
        # a zero there and cannot be a minimum function at all
        return True
    one_m = 1 - r1 * g3
    a, b = g3 * one_m, g3 - g2 * one_m
    if g2 != 0 and a != 0:
        # generic case: f1 = a*x1 + b is linear, degree drop needs f1 = 0
        # together with R1 = 0 at the same point
        x1 = -b / a
        if x1 <= 0:
            return True
        p, q = _n1112_struct("N12", r1, g2, g3, F, x1, w0=Q(1))
        return sylvester_determinant(p, q, 1) != 0
    if g2 != 0 and a == 0:
        return b != 0          # b = g3 > 0, so always true here
    # boundary g2 = 0 (open parallel resistor): interpolate R0, R1 in x1 and
    # look for a common positive root directly
    pts0, pts1 = [], []
    for v in _fixture_samples(16):
        p, q = _n1112_struct("N12", r1, g2, g3, F, v, w0=Q(1), strict=False)
        pts0.append((v, sylvester_determinant(p, q, 0)))
        pts1.append((v, sylvester_determinant(p, q, 1)))
    rho0 = _lagrange(pts0)
    rho1 = _lagrange(pts1)
    if rho0.is_zero() and rho1.is_zero():
        return False
    g = rho0.gcd(rho1) if not (rho0.is_zero() or rho1.is_zero()) else \
        (rho0 if rho1.is_zero() else rho1)
    if g.degree < 1:
        return True
    return count_real_roots(g.square_free_part(), Q(0), "+inf") == 0
