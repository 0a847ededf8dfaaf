import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from prsyn.polyrat import BiquadParams, Q  # noqa: E402
from prsyn.network import (CAPACITOR, INDUCTOR, RESISTOR, Element,  # noqa: E402
                           Network)


def rand_q(rng, lo=1, hi=12) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


def sample_region(region: str, rng: random.Random) -> BiquadParams:
    """Random valid parameters inside one classification region; regions
    with square-root boundaries are sampled through rationalizing
    substitutions so everything stays exactly rational."""
    K, w0 = rand_q(rng), rand_q(rng)
    if region == "a":
        return BiquadParams(K, w0, Q(1, 2), rand_q(rng))
    if region == "b":
        return BiquadParams(K, w0, Q(2), -rand_q(rng))
    if region == "c":
        # W = (1+t^2)/2 in (1/2, 1), F = W*t/(1-W)
        t = Fraction(rng.randint(1, 19), 20)
        W = (1 + t * t) / 2
        return BiquadParams(K, w0, W, W * t / (1 - W))
    if region == "d":
        # W = 2u^2/(1+u^2) in (1, 2), F = (1-W)*u
        u = 1 + rand_q(rng)
        W = 2 * u * u / (1 + u * u)
        return BiquadParams(K, w0, W, (1 - W) * u)
    if region == "e":
        u = 1 + rand_q(rng)
        W = 2 * u * u / (1 + u * u)
        return BiquadParams(K, w0, W, W * W / (u * (1 - W)))
    if region == "f":
        t = Fraction(rng.randint(1, 19), 20)
        W = (1 + t * t) / 2
        return BiquadParams(K, w0, W, W * (1 - W) / t)
    if region == "none":
        from prsyn.synth import classify_biquad
        while True:
            if rng.random() < 0.5:
                W = Fraction(rng.randint(1, 199), 200)
                if W in (Q(1, 2), 1):
                    continue
                F = rand_q(rng)
            else:
                W = 1 + Fraction(rng.randint(1, 300), 100)
                if W == 2:
                    continue
                F = -rand_q(rng)
            p = BiquadParams(K, w0, W, F)
            phi = 1 - W
            boundary = (
                (Q(1, 2) < W < 1 and F * F * phi * phi == W * W * (2 * W - 1))
                or (1 < W < 2 and F * F * (2 - W) == W * phi * phi)
                or (1 < W < 2 and F * F * phi * phi == W ** 3 * (2 - W))
                or (Q(1, 2) < W < 1 and F * F * (2 * W - 1) == W * W * phi * phi))
            if not boundary:
                return p
    raise ValueError(region)


def random_sp_network(rng: random.Random, max_elems=6) -> Network:
    """Random series-parallel RLC one-port, built by recursive composition."""
    counter = [0]

    def fresh():
        counter[0] += 1
        return f"v{counter[0]}"

    eid = [0]

    def leaf(a, b):
        eid[0] += 1
        kind = rng.choice([RESISTOR, INDUCTOR, CAPACITOR])
        return [Element(f"e{eid[0]}", kind, a, b, rand_q(rng))]

    def build(a, b, budget):
        if budget <= 1 or rng.random() < 0.35:
            return leaf(a, b)
        take = rng.randint(1, budget - 1)
        if rng.random() < 0.5:
            m = fresh()
            return build(a, m, take) + build(m, b, budget - take)
        return build(a, b, take) + build(a, b, budget - take)

    elements = build("p", "n", rng.randint(2, max_elems))
    verts = {v for e in elements for v in (e.head, e.tail)}
    return Network(verts, elements, ("p", "n"))


@pytest.fixture
def rng():
    return random.Random(20250808)
