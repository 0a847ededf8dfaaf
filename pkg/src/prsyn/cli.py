"""Command-line front end.

Exit codes: 0 success (or true verdict), 1 false verdict (check/verify),
2 usage errors, 3 domain errors.  --json emits machine-readable reports in
which every exact number is a fraction string.  The PRSYN_PRECISION
environment variable overrides the default 1e-9 numeric tolerance used on
floating-point paths.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from fractions import Fraction
from typing import List, Optional

from . import analysis, network, synth
from .polyrat import (BiquadParams, PolyratError, Q, QComplex, biquad_params,
                      biquad_template, format_ratfunc, is_lossless,
                      is_minimum_function, is_positive_real,
                      minimum_frequencies, parse_ratfunc)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _fmt_c(z) -> str:
    if isinstance(z, QComplex):
        return f"{_fmt(z.re)}{'+' if z.im >= 0 else '-'}{_fmt(abs(z.im))}j"
    return str(complex(z))


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_phasor(text: str) -> QComplex:
    if "," in text:
        re_s, im_s = text.split(",", 1)
        return QComplex(Fraction(re_s), Fraction(im_s))
    return QComplex(Fraction(text), 0)


def _load_network(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return network.parse_netlist(fh.read())


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _cmd_check(args) -> int:
    f = parse_ratfunc(args.function)
    pr = is_positive_real(f)
    lossless = is_lossless(f)
    minimum = is_minimum_function(f)
    freqs = []
    if pr and not lossless and not f.is_zero():
        freqs = minimum_frequencies(f)
    freq_strs = [_fmt(w.exact) if w.exact is not None
                 else (f"sqrt({_fmt(w.omega2)})" if w.omega2 is not None
                       else repr(w.value))
                 for w in freqs]
    _emit(args, {
        "positive_real": pr,
        "lossless": lossless,
        "minimum_function": minimum,
        "minimum_frequencies": freq_strs,
    }, f"positive_real={str(pr).lower()} lossless={str(lossless).lower()} "
       f"minimum_function={str(minimum).lower()} "
       f"minimum_frequencies=[{', '.join(freq_strs)}]")
    return 0 if pr else 1


def _cmd_params(args) -> int:
    p = biquad_params(parse_ratfunc(args.function))
    _emit(args, {"K": _fmt(p.K), "omega0": _fmt(p.omega0),
                 "W": _fmt(p.W), "F": _fmt(p.F)},
          f"K={_fmt(p.K)} omega0={_fmt(p.omega0)} W={_fmt(p.W)} F={_fmt(p.F)}")
    return 0


def _cmd_classify(args) -> int:
    p = biquad_params(parse_ratfunc(args.function))
    c = synth.classify_biquad(p)
    _emit(args, {
        "min_storage": c.storage_min,
        "condition": c.condition,
        "witness_netlist": network.serialize_netlist(c.witness_network),
    }, f"min_storage={c.storage_min} condition={c.condition}")
    return 0


def _cmd_synth(args) -> int:
    f = parse_ratfunc(args.function)
    step = synth.theorem2_step(f, args.omega0)
    n = synth.build_seven_element(step, args.which)
    text = network.serialize_netlist(n)
    _emit(args, {"netlist": text, "variant": args.which,
                 "branch": step.variant}, text.rstrip("\n"))
    return 0


def _cmd_impedance(args) -> int:
    n = _load_network(args.netlist)
    h = analysis.impedance(n)
    if isinstance(h, analysis.NoImpedance):
        _emit(args, {"impedance": None}, "no impedance (degenerate port law)")
        return 1
    _emit(args, {"impedance": format_ratfunc(h)}, format_ratfunc(h))
    return 0


def _cmd_phasor(args) -> int:
    n = _load_network(args.netlist)
    drive = None
    if args.current is not None:
        drive = ("current", _parse_phasor(args.current))
    elif args.voltage is not None:
        drive = ("voltage", _parse_phasor(args.voltage))
    sol = analysis.phasor_solve(n, _parse_fraction(args.omega), drive,
                                seed=args.seed)
    residual = analysis.energy_balance(sol)
    payload = {
        "omega": _fmt(sol.frequency),
        "source": {"current": _fmt_c(sol.source_current),
                   "voltage": _fmt_c(sol.source_voltage)},
        "elements": {eid: {"current": _fmt_c(sol.element_currents[eid]),
                           "voltage": _fmt_c(sol.element_voltages[eid])}
                     for eid in sorted(sol.element_currents)},
        "free_modes": sol.free_modes,
        "energy_residual": _fmt(residual),
    }
    lines = [f"omega={_fmt(sol.frequency)} i={_fmt_c(sol.source_current)} "
             f"v={_fmt_c(sol.source_voltage)} residual={_fmt(residual)}"]
    for eid in sorted(sol.element_currents):
        lines.append(f"  {eid}: i={_fmt_c(sol.element_currents[eid])} "
                     f"v={_fmt_c(sol.element_voltages[eid])}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_blocked(args) -> int:
    n = _load_network(args.netlist)
    rep = analysis.blocked_report(n, _parse_fraction(args.omega0),
                                  seed=args.seed or 0)
    ok = analysis.blocked_open_short_check(n, rep)
    payload = {
        "omega0": _fmt(rep.omega0),
        "blocked": [sorted(c) for c in rep.blocked],
        "unblocked": sorted(rep.unblocked),
        "blocked_oneport_flags": list(rep.blocked_oneport_flags),
        "draws_disagree": rep.draws_disagree,
        "open_short_check": ok,
    }
    human = (f"blocked={[sorted(c) for c in rep.blocked]} "
             f"unblocked={sorted(rep.unblocked)} "
             f"oneports={list(rep.blocked_oneport_flags)} "
             f"open_short_check={str(ok).lower()}")
    _emit(args, payload, human)
    return 0 if ok else 1


def _cmd_ss(args) -> int:
    n = _load_network(args.netlist)
    ss = analysis.state_space(n)
    pbh = analysis.pbh_diagnostics(ss)
    payload = {
        "states": list(ss.state_labels),
        "A": [[_fmt(x) for x in row] for row in ss.A],
        "B": [_fmt(x) for x in ss.B],
        "C": [_fmt(x) for x in ss.C],
        "D": _fmt(ss.D),
        "uncontrollable_modes": [_fmt(x) for x in pbh.uncontrollable_modes],
        "unobservable_modes": [_fmt(x) for x in pbh.unobservable_modes],
        "stabilizable": pbh.stabilizable,
    }
    lines = [f"states: {' '.join(ss.state_labels)}"]
    for i, row in enumerate(ss.A):
        lines.append("A[%d] = [%s]" % (i, ", ".join(_fmt(x) for x in row)))
    lines.append("B = [%s]" % ", ".join(_fmt(x) for x in ss.B))
    lines.append("C = [%s]" % ", ".join(_fmt(x) for x in ss.C))
    lines.append(f"D = {_fmt(ss.D)}")
    lines.append(f"uncontrollable_modes = [{', '.join(_fmt(x) for x in pbh.uncontrollable_modes)}]")
    lines.append(f"unobservable_modes = [{', '.join(_fmt(x) for x in pbh.unobservable_modes)}]")
    lines.append(f"stabilizable = {str(pbh.stabilizable).lower()}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_dual(args) -> int:
    n = _load_network(args.netlist)
    text = network.serialize_netlist(network.dual(n))
    _emit(args, {"netlist": text}, text.rstrip("\n"))
    return 0


def _cmd_invert(args) -> int:
    n = _load_network(args.netlist)
    text = network.serialize_netlist(
        network.frequency_invert(n, _parse_fraction(args.omega0)))
    _emit(args, {"netlist": text}, text.rstrip("\n"))
    return 0


def _cmd_mech(args) -> int:
    n = _load_network(args.netlist)
    if args.reverse:
        if not isinstance(n, network.MechanicalNetwork):
            raise network.NetworkError("--reverse expects a mechanical netlist")
        out = network.from_mechanical(n)
        grounded = {}
    else:
        if not isinstance(n, network.Network):
            raise network.NetworkError("mech expects an electrical netlist")
        out = network.to_mechanical(n)
        grounded = network.report_grounded_capacitors(n)
    text = network.serialize_netlist(out)
    payload = {"netlist": text}
    if grounded:
        payload["grounded_capacitors"] = grounded
    human = text.rstrip("\n")
    if grounded:
        human += "\n# grounded capacitors (mass-replaceable inerters): " + \
            ", ".join(f"{k}={str(v).lower()}" for k, v in sorted(grounded.items()))
    _emit(args, payload, human)
    return 0


def _cmd_verify(args) -> int:
    n = _load_network(args.netlist)
    target = parse_ratfunc(args.function)
    h = analysis.impedance(n)
    ok = not isinstance(h, analysis.NoImpedance) and h == target
    _emit(args, {"match": ok,
                 "impedance": None if isinstance(h, analysis.NoImpedance)
                 else format_ratfunc(h)},
          f"match={str(ok).lower()}")
    return 0 if ok else 1


def _cmd_batch(args) -> int:
    worst = 0
    for line in sys.stdin:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        code = main(shlex.split(line))
        worst = max(worst, code)
    return worst


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="prsyn",
        description="Passive network synthesis for positive-real impedances")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--seed", type=int, default=None,
                    help="seed for randomized trajectory draws")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="positive-real / minimum-function tests")
    p.add_argument("function")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("params", help="biquadratic canonical parameters")
    p.add_argument("function")
    p.set_defaults(fn=_cmd_params)

    p = sub.add_parser("classify", help="least storage count with witness")
    p.add_argument("function")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("synth", help="seven-element realization netlist")
    p.add_argument("function")
    p.add_argument("--which", default="rpfg_first",
                   choices=list(synth.SEVEN_ELEMENT_VARIANTS))
    p.add_argument("--omega0", type=Fraction, default=None,
                   help="minimum frequency (default: smallest)")
    p.set_defaults(fn=_cmd_synth)

    p = sub.add_parser("impedance", help="exact impedance of a netlist")
    p.add_argument("netlist")
    p.set_defaults(fn=_cmd_impedance)

    p = sub.add_parser("phasor", help="sinusoidal trajectory at a frequency")
    p.add_argument("netlist")
    p.add_argument("--omega", required=True)
    p.add_argument("--current", default=None, help="drive current re[,im]")
    p.add_argument("--voltage", default=None, help="drive voltage re[,im]")
    p.set_defaults(fn=_cmd_phasor)

    p = sub.add_parser("blocked", help="blocked-subnetwork report at omega0")
    p.add_argument("netlist")
    p.add_argument("--omega0", required=True)
    p.set_defaults(fn=_cmd_blocked)

    p = sub.add_parser("ss", help="state-space extraction + PBH diagnostics")
    p.add_argument("netlist")
    p.set_defaults(fn=_cmd_ss)

    p = sub.add_parser("dual", help="dual network netlist")
    p.add_argument("netlist")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("invert", help="frequency-inverted network netlist")
    p.add_argument("netlist")
    p.add_argument("--omega0", required=True)
    p.set_defaults(fn=_cmd_invert)

    p = sub.add_parser("mech", help="electrical <-> mechanical analogy")
    p.add_argument("netlist")
    p.add_argument("--reverse", action="store_true")
    p.set_defaults(fn=_cmd_mech)

    p = sub.add_parser("verify", help="netlist impedance equals a function")
    p.add_argument("netlist")
    p.add_argument("function")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("batch", help="run newline-delimited commands from stdin")
    p.set_defaults(fn=_cmd_batch)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (PolyratError, network.NetworkError, analysis.AnalysisError,
            synth.SynthError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
