"""``uav-sizer`` command line.

Exit codes: 0 success (and all checks passed), 1 checks failed,
2 bad input or validation error.
"""
from __future__ import annotations

import argparse
import dataclasses
import io
import json
import os
import sys

from .battery_feasibility import DEFAULT_PWM_STEP, build_frontier, classify_battery
from .catalog import design_to_dict, load_catalog, load_design
from .design_loop import DEFAULT_PWM_THRESHOLD, evaluate_design, search_catalog, sweep_auw
from .errors import InputError, InsufficientThrustError, OutOfDomainError
from .interpolation import KINDS, LINEAR
from .motor_curve import ingest_thrust_stand, write_curve
from .power_budget import predict_endurance
from .units import PwmUs

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _style(text, ok, stream):
    if os.environ.get("UAV_SIZER_NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _dump_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_design(args):
    design = load_design(args.design)
    changes = {}
    if args.usable_fraction is not None:
        changes["usable_fraction"] = args.usable_fraction
    if args.loss_power_w is not None:
        changes["loss_power"] = args.loss_power_w
    return dataclasses.replace(design, **changes) if changes else design


def _load_curve(args):
    return ingest_thrust_stand(args.curve, args.interp)


def cmd_fit(args):
    curve = ingest_thrust_stand(args.csv, args.interp)
    if args.out:
        write_curve(curve, args.out)
    s = curve.summary()
    if args.format == "json":
        sys.stdout.write(_dump_json(s))
    else:
        sys.stdout.write(
            f"domain {s['pwm_min_us']:g}–{s['pwm_max_us']:g} µs, "
            f"max thrust {s['max_thrust_kgf']:g} kgf, "
            f"max power {s['max_power_w']:g} W, {s['samples']} samples\n")
    return EXIT_OK


def cmd_check(args):
    design = _load_design(args)
    curve = _load_curve(args)
    report = evaluate_design(design, curve, args.pwm_threshold, args.pwm_step)
    if args.format == "json":
        _emit(args, _dump_json({"design": design_to_dict(design), "report": report.to_dict()}))
    else:
        text = report.render_text()
        if not args.out:
            last = text.rsplit("\n", 1)
            text = last[0] + "\n" + _style(last[1], report.passed, sys.stdout)
        _emit(args, text + "\n")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_predict(args):
    design = _load_design(args)
    curve = _load_curve(args)
    minutes = float(predict_endurance(design, curve))
    if args.format == "json":
        _emit(args, _dump_json({"auw": float(design.auw),
                                "predicted_flight_time": minutes}))
    else:
        _emit(args, f"AUW {float(design.auw):.4f} kg: predicted flight time "
                    f"{minutes:.4f} min\n")
    return EXIT_OK


def cmd_sweep(args):
    design = _load_design(args)
    curve = _load_curve(args)
    sweep = sweep_auw(design, curve, (args.payload_min, args.payload_max), args.step)
    if args.format == "json":
        _emit(args, _dump_json({
            "points": [dataclasses.asdict(p) for p in sweep.points],
            "truncated_at": sweep.truncated_at}))
    elif args.format == "text":
        lines = [f"{p.auw:.4f} kg  {p.flight_power:.4f} W  "
                 f"{p.predicted_flight_time:.4f} min" for p in sweep.points]
        if sweep.truncated_at is not None:
            lines.append(f"truncated: insufficient thrust at +{sweep.truncated_at:.4f} kg")
        _emit(args, "\n".join(lines) + "\n")
    else:
        buf = io.StringIO()
        sweep.write_csv(buf)
        _emit(args, buf.getvalue())
        if sweep.truncated_at is not None:
            print(f"truncated: insufficient thrust at +{sweep.truncated_at:g} kg",
                  file=sys.stderr)
    return EXIT_OK


def cmd_frontier(args):
    design = _load_design(args)
    curve = _load_curve(args)
    target = (design.target_flight_time if args.target_min is None else args.target_min)
    frontier = build_frontier(curve, design.motor_count, design.auw_other,
                              design.compute_power, design.radio_power, target,
                              design.usable_fraction, args.pwm_step, design.loss_power)
    verdict = None
    if design.batteries:
        verdict = classify_battery(frontier, design.battery_mass, design.battery_capacity)
    if args.format == "json":
        _emit(args, _dump_json({
            "auw_other": frontier.auw_other,
            "points": [{"pwm_us": p, "max_battery_mass_kg": m, "required_capacity_wh": c}
                       for p, m, c in frontier.rows()],
            "battery_verdict": None if verdict is None else verdict.to_dict()}))
    elif args.format == "text":
        lines = [f"{p:.4f} µs  {m:.4f} kg  {c:.4f} Wh" for p, m, c in frontier.rows()]
        if verdict is not None:
            lines.append(f"design battery pack: "
                         f"{'feasible' if verdict.feasible else 'infeasible'}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        buf = io.StringIO()
        frontier.write_csv(buf)
        _emit(args, buf.getvalue())
    return EXIT_OK


def cmd_search(args):
    catalog = load_catalog(args.catalog)
    result = search_catalog(catalog, target_flight_time=args.target_min,
                            pwm_threshold=args.pwm_threshold, max_auw=args.max_auw,
                            pwm_step=args.pwm_step, usable_fraction=args.usable_fraction,
                            loss_power=args.loss_power_w, interp=args.interp)
    if args.format == "json":
        _emit(args, _dump_json(result.to_dict()))
    else:
        lines = [f"{len(result.passing)} passing design(s)"]
        for rank, r in enumerate(result.passing[:args.top], start=1):
            lines.append(f"#{rank} {r.predicted_flight_time:.4f} min  AUW {r.auw:.4f} kg  "
                         f"hover {r.hover_pwm:.4f} µs  {r.name}")
        if not result.passing:
            for name, reasons in result.failures[:args.top]:
                lines.append(f"FAIL {name}: {'; '.join(reasons)}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if result.passing else EXIT_FAILED


def _pwm(text):
    try:
        return float(PwmUs(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--interp", choices=KINDS, default=LINEAR,
                        help="interpolation between thrust-stand samples")
    common.add_argument("--pwm-step", type=_positive, default=DEFAULT_PWM_STEP,
                        help="frontier sampling step in microseconds")
    common.add_argument("--pwm-threshold", type=_pwm, default=DEFAULT_PWM_THRESHOLD,
                        help="maximum allowed hover PWM in microseconds")
    common.add_argument("--usable-fraction", type=float,
                        help="override usable battery fraction")
    common.add_argument("--loss-power-w", type=float, help="override loss power")

    design_args = argparse.ArgumentParser(add_help=False)
    design_args.add_argument("--design", required=True, help="design JSON file")
    design_args.add_argument("--curve", required=True, help="thrust-stand CSV")

    def fmt(default, *choices):
        p = argparse.ArgumentParser(add_help=False)
        p.add_argument("--format", choices=choices, default=default)
        return p

    parser = _Parser(prog="uav-sizer", description="Multirotor UAV sizing toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fit", parents=[common, fmt("text", "text", "json")],
                       help="ingest and validate a thrust-stand CSV")
    p.add_argument("csv")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("check", parents=[common, design_args, fmt("text", "text", "json")],
                       help="evaluate a design against all checks")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("predict", parents=[common, design_args, fmt("text", "text", "json")],
                       help="predict hover endurance")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("sweep", parents=[common, design_args,
                                         fmt("csv", "csv", "text", "json")],
                       help="flight time versus added payload")
    p.add_argument("--payload-min", type=float, default=0.0)
    p.add_argument("--payload-max", type=float, default=0.0)
    p.add_argument("--step", type=float, default=0.05, help="payload step in kg")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("frontier", parents=[common, design_args,
                                            fmt("csv", "csv", "text", "json")],
                       help="battery capacity vs mass frontier")
    p.add_argument("--target-min", type=float, help="override target flight time")
    p.set_defaults(func=cmd_frontier)

    p = sub.add_parser("search", parents=[common, fmt("text", "text", "json")],
                       help="exhaustive catalog search")
    p.add_argument("--catalog", required=True)
    p.add_argument("--target-min", type=float)
    p.add_argument("--max-auw", type=float)
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InsufficientThrustError as exc:
        print(f"uav-sizer {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (InputError, OutOfDomainError, ValueError, OSError) as exc:
        print(f"uav-sizer {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
