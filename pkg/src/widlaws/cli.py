"""Command-line front end.

Subcommands: verify (run a config's verification suite), sample (dump
raw draws), haar-demo (Haar construction check on the p-adic integers
or the solenoid), selftest (built-in fixtures for the arithmetic
oracle, the centering bound, compatibility, and divisibility).

Machine-readable output (JSON document, optional CSV) goes to stdout or
--out; human-readable summaries go to stderr.  Exit codes: 0 pass,
1 verification failure, 2 usage/config error.  All commands honor
--seed, and fixed seeds give byte-identical machine output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .groups import (
    PadicInt,
    PadicIntegers,
    PadicSubgroup,
    Solenoid,
    SolenoidPoint,
    SolenoidSubgroup,
    Torus,
    TorusPoint,
    TorusSubgroup,
    canonical_angle,
)
from .measures import EMPTY_LEVY, LevyMeasure, Quadruplet, validate_quadruplet
from .sampling import make_rng
from .verification import (
    PadicSamples,
    SolenoidSamples,
    TorusSamples,
    check_compare_inequality,
    check_compatibility,
    check_divisibility,
    default_characters,
    oracle_padic_arithmetic,
    quadruplet_sampler,
    run_suite,
)
from .characters import PadicCharacter, SolenoidCharacter, TorusCharacter

SCHEMA_VERSION = 1
CSV_COLUMNS = ["character", "re_theory", "im_theory", "re_emp", "im_emp", "abs_err", "tol", "pass"]


class ConfigError(Exception):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"field '{field}': {message}")


def _get(doc, field, default=None, required=False):
    if field in doc:
        return doc[field]
    if required:
        raise ConfigError(field, "missing")
    return default


def _as_int(field, value, minimum=None):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(field, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigError(field, f"must be >= {minimum}")
    return value


def _as_real(field, value):
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ConfigError(field, f"expected a number, got {value!r}")
    return float(value)


def _parse_point(field, group, depth, raw):
    try:
        if isinstance(group, Torus):
            return TorusPoint(_as_real(field, raw))
        if isinstance(group, PadicIntegers):
            if not isinstance(raw, list):
                raise ConfigError(field, "expected a list of digits")
            digits = [_as_int(field, d) for d in raw]
            if len(digits) > depth + 1:
                raise ConfigError(field, f"more than depth+1 = {depth + 1} digits")
            digits += [0] * (depth + 1 - len(digits))
            return PadicInt(group.p, tuple(digits))
        return SolenoidPoint(group.p, depth, _as_real(field, raw))
    except ValueError as exc:
        raise ConfigError(field, str(exc)) from exc


def _parse_subgroup(group, raw):
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ConfigError("quadruplet.H", "expected an object with a 'kind'")
    kind = raw["kind"]
    try:
        if isinstance(group, Torus):
            if kind == "full":
                return TorusSubgroup.full()
            if kind == "cyclic":
                return TorusSubgroup.cyclic(_as_int("quadruplet.H.r", _get(raw, "r", required=True), 1))
            if kind == "trivial":
                return TorusSubgroup.trivial()
        elif isinstance(group, PadicIntegers):
            if kind == "lambda":
                return PadicSubgroup(_as_int("quadruplet.H.r", _get(raw, "r", required=True), 0))
        else:
            if kind == "trivial":
                return SolenoidSubgroup.trivial()
            if kind == "full":
                return SolenoidSubgroup.full()
    except ValueError as exc:
        raise ConfigError("quadruplet.H", str(exc)) from exc
    raise ConfigError("quadruplet.H.kind", f"unknown kind {kind!r} for this group")


def _parse_characters(group, depth, raw):
    if raw == "default" or raw is None:
        return default_characters(group, depth=depth)
    if not isinstance(raw, list):
        raise ConfigError("characters", "expected 'default' or a list")
    chars = []
    for i, item in enumerate(raw):
        field = f"characters[{i}]"
        try:
            if isinstance(group, Torus):
                chars.append(TorusCharacter(_as_int(field, item)))
                continue
            if not (isinstance(item, list) and len(item) == 2):
                raise ConfigError(field, "expected a [d, ell] pair")
            d = _as_int(field, item[0], 0)
            ell = _as_int(field, item[1])
            if d > depth:
                raise ConfigError(field, f"character depth {d} exceeds configured depth {depth}")
            if isinstance(group, PadicIntegers):
                if not 0 <= ell < group.p ** (d + 1):
                    raise ConfigError(field, f"ell outside 0..{group.p ** (d + 1) - 1}")
                chars.append(PadicCharacter(d, ell))
            else:
                chars.append(SolenoidCharacter(d, ell))
        except ValueError as exc:
            raise ConfigError(field, str(exc)) from exc
    return chars


def parse_config(doc):
    """Parse a JSON experiment config into (quadruplet, depth, characters,
    samples, seed, tolerance_c).  Raises ConfigError naming the offending
    field."""
    if not isinstance(doc, dict):
        raise ConfigError("<root>", "config must be a JSON object")
    group_name = _get(doc, "group", required=True)
    if group_name == "torus":
        group = Torus()
    elif group_name in ("padic", "solenoid"):
        p = _as_int("p", _get(doc, "p", required=True), 2)
        try:
            group = PadicIntegers(p) if group_name == "padic" else Solenoid(p)
        except ValueError as exc:
            raise ConfigError("p", str(exc)) from exc
    else:
        raise ConfigError("group", f"unknown group {group_name!r}")
    depth = _as_int("depth", _get(doc, "depth", 3), 0)

    qraw = _get(doc, "quadruplet", required=True)
    if not isinstance(qraw, dict):
        raise ConfigError("quadruplet", "expected an object")
    subgroup = _parse_subgroup(group, _get(qraw, "H", required=True))
    shift = _parse_point("quadruplet.a", group, depth, _get(qraw, "a", required=True))
    b = _as_real("quadruplet.b", _get(qraw, "b", 0.0))
    eta_raw = _get(qraw, "eta", [])
    if not isinstance(eta_raw, list):
        raise ConfigError("quadruplet.eta", "expected a list of atoms")
    atoms = []
    for i, atom in enumerate(eta_raw):
        field = f"quadruplet.eta[{i}]"
        if not (isinstance(atom, dict) and "point" in atom and "mass" in atom):
            raise ConfigError(field, "expected an object with 'point' and 'mass'")
        pt = _parse_point(field + ".point", group, depth, atom["point"])
        atoms.append((pt, _as_real(field + ".mass", atom["mass"])))
    try:
        levy = LevyMeasure(tuple(atoms))
        quad = Quadruplet(group, subgroup, shift, b, levy)
        validate_quadruplet(quad)
    except ValueError as exc:
        raise ConfigError("quadruplet", str(exc)) from exc

    samples = _as_int("samples", _get(doc, "samples", 100000), 1)
    seed = _as_int("seed", _get(doc, "seed", 0))
    tolerance_c = _as_real("tolerance_c", _get(doc, "tolerance_c", 4.0))
    if tolerance_c <= 0:
        raise ConfigError("tolerance_c", "must be positive")
    characters = _parse_characters(group, depth, _get(doc, "characters", "default"))
    return quad, depth, characters, samples, seed, tolerance_c


def load_config(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError("<config file>", str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise ConfigError("<config file>", f"invalid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# report serialization

def report_to_document(report):
    """Machine JSON form of a report.  wall_time is deliberately omitted
    so that fixed seeds give byte-identical output; it is shown in the
    stderr summary instead."""
    return {
        "schema_version": SCHEMA_VERSION,
        "config": report.config,
        "overall_pass": report.overall_pass,
        "rows": [
            {
                "character": r.label,
                "re_theory": r.theory.real,
                "im_theory": r.theory.imag,
                "re_emp": r.empirical.real,
                "im_emp": r.empirical.imag,
                "abs_err": r.abs_error,
                "tol": r.tolerance,
                "pass": r.passed,
            }
            for r in report.rows
        ],
    }


def rows_to_csv(report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        writer.writerow(
            [
                r.label,
                repr(r.theory.real),
                repr(r.theory.imag),
                repr(r.empirical.real),
                repr(r.empirical.imag),
                repr(r.abs_error),
                repr(r.tolerance),
                "true" if r.passed else "false",
            ]
        )
    return buf.getvalue()


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_report(report, out_path, csv_path):
    _emit(json.dumps(report_to_document(report), indent=2, sort_keys=True) + "\n", out_path)
    if csv_path is not None:
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(rows_to_csv(report))


def _summary(name, report):
    npass = sum(r.passed for r in report.rows)
    print(
        f"{name}: {npass}/{len(report.rows)} rows pass; "
        f"overall={'PASS' if report.overall_pass else 'FAIL'}; "
        f"wall={report.wall_time:.2f}s",
        file=sys.stderr,
    )


# ---------------------------------------------------------------------------
# commands

def cmd_verify(args) -> int:
    doc = load_config(args.config)
    if args.samples is not None:
        doc["samples"] = args.samples
    if args.seed is not None:
        doc["seed"] = args.seed
    if args.depth is not None:
        doc["depth"] = args.depth
    if args.tolerance_c is not None:
        doc["tolerance_c"] = args.tolerance_c
    quad, depth, characters, samples, seed, tolerance_c = parse_config(doc)
    report = run_suite(quad, characters, samples, seed, tolerance_c, depth=depth)
    _emit_report(report, args.out, args.csv)
    _summary("verify", report)
    return 0 if report.overall_pass else 1


def _sample_lines(batch, fmt):
    lines = []
    if isinstance(batch, TorusSamples):
        for a in batch.angles:
            lines.append(repr(float(a)) if fmt == "csv" else json.dumps({"angle": float(a)}))
    elif isinstance(batch, PadicSamples):
        for row in batch.digits:
            digits = [int(d) for d in row]
            lines.append(
                ",".join(str(d) for d in digits)
                if fmt == "csv"
                else json.dumps({"digits": digits})
            )
    elif isinstance(batch, SolenoidSamples):
        for deep in batch.deep_angles:
            coords = [
                float(canonical_angle(batch.p ** (batch.depth - j) * float(deep)))
                for j in range(batch.depth + 1)
            ]
            if fmt == "csv":
                lines.append(",".join(repr(c) for c in [float(deep)] + coords))
            else:
                lines.append(json.dumps({"deep_angle": float(deep), "coordinates": coords}))
    return "\n".join(lines) + "\n"


def cmd_sample(args) -> int:
    doc = load_config(args.config)
    if args.seed is not None:
        doc["seed"] = args.seed
    if args.depth is not None:
        doc["depth"] = args.depth
    quad, depth, _, samples, seed, _ = parse_config(doc)
    count = args.count if args.count is not None else samples
    if count < 1:
        raise ConfigError("count", "must be >= 1")
    sampler = quadruplet_sampler(quad, depth=depth)
    batch = sampler(make_rng(seed, stream=0), count)
    _emit(_sample_lines(batch, args.format), args.out)
    print(f"sample: wrote {count} draws ({args.format})", file=sys.stderr)
    return 0


def _haar_quadruplet(group_name, p, depth):
    if group_name == "padic":
        group = PadicIntegers(p)
        return Quadruplet(group, PadicSubgroup(0), PadicInt.zero(p, depth), 0.0, EMPTY_LEVY)
    group = Solenoid(p)
    return Quadruplet(
        group, SolenoidSubgroup.full(), SolenoidPoint.identity(p, depth), 0.0, EMPTY_LEVY
    )


def cmd_haar_demo(args) -> int:
    try:
        quad = _haar_quadruplet(args.group, args.p, args.depth)
    except ValueError as exc:
        raise ConfigError("p", str(exc)) from exc
    characters = default_characters(quad.group, depth=args.depth)
    report = run_suite(quad, characters, args.samples, args.seed, args.tolerance_c, depth=args.depth)
    _emit_report(report, args.out, args.csv)
    print(f"Haar construction on {args.group} (p={args.p}, depth={args.depth}):", file=sys.stderr)
    print(f"{'character':>12} {'|empirical|':>12} {'abs_err':>10} {'tol':>8} pass", file=sys.stderr)
    for r in report.rows:
        print(
            f"{r.label:>12} {abs(r.empirical):>12.5f} {r.abs_error:>10.5f} "
            f"{r.tolerance:>8.5f} {'yes' if r.passed else 'NO'}",
            file=sys.stderr,
        )
    _summary("haar-demo", report)
    return 0 if report.overall_pass else 1


def _selftest_fixtures(samples, seed):
    """The four built-in checks; returns a list of (name, pass) pairs."""
    results = []
    results.append(("padic-arithmetic-oracle", oracle_padic_arithmetic(10000, seed)))

    grids = []
    grids += check_compare_inequality(Torus(), default_characters(Torus()), 1000)
    for p in (2, 3):
        grids += check_compare_inequality(
            Solenoid(p), default_characters(Solenoid(p), depth=3), 1000
        )
    results.append(("centering-bound-grid", all(ok for _, ok in grids)))

    p = 2
    padic_eta = LevyMeasure(
        (
            (PadicInt(p, (1, 0, 1, 0, 0, 0)), 0.8),
            (PadicInt(p, (0, 1, 1, 0, 0, 0)), 0.5),
        )
    )
    padic_q = Quadruplet(
        PadicIntegers(p), PadicSubgroup(6), PadicInt(p, (1, 1, 0, 0, 0, 0)), 0.0, padic_eta
    )
    sol_eta = LevyMeasure(
        (
            (SolenoidPoint(p, 5, 0.7), 0.6),
            (SolenoidPoint(p, 5, -1.2), 0.4),
        )
    )
    sol_q = Quadruplet(
        Solenoid(p), SolenoidSubgroup.trivial(), SolenoidPoint(p, 5, 0.3), 0.2, sol_eta
    )
    compat_ok = True
    for q in (padic_q, sol_q):
        for n in (1, 2, 3):
            compat_ok = compat_ok and check_compatibility(q, n, samples, seed).overall_pass
    results.append(("depth-compatibility", compat_ok))

    torus_q = Quadruplet(
        Torus(),
        TorusSubgroup.trivial(),
        TorusPoint.identity(),
        0.8,
        LevyMeasure(((TorusPoint(2.1), 1.1), (TorusPoint(-0.6), 0.5))),
    )
    padic_div = Quadruplet(PadicIntegers(p), PadicSubgroup(6), PadicInt.zero(p, 5), 0.0, padic_eta)
    sol_div = Quadruplet(
        Solenoid(p), SolenoidSubgroup.trivial(), SolenoidPoint.identity(p, 5), 0.5, sol_eta
    )
    div_ok = True
    for q in (torus_q, padic_div, sol_div):
        div_ok = div_ok and check_divisibility(q, 4, samples, seed).overall_pass
    results.append(("convolution-divisibility", div_ok))
    return results


def cmd_selftest(args) -> int:
    results = _selftest_fixtures(args.samples, args.seed)
    overall = all(ok for _, ok in results)
    for name, ok in results:
        print(f"{name}: {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "selftest": [{"name": name, "pass": ok} for name, ok in results],
        "overall_pass": overall,
    }
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if overall else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="widlaws",
        description="Construct, sample, and verify weakly infinitely divisible laws "
        "on the circle, the p-adic integers, and the p-adic solenoid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a config's verification suite")
    verify.add_argument("--config", required=True, help="JSON experiment config")
    verify.add_argument("--out", help="write the JSON report here instead of stdout")
    verify.add_argument("--csv", help="also write the row table as CSV")
    verify.add_argument("--samples", type=int, help="override config sample count")
    verify.add_argument("--seed", type=int, help="override config seed")
    verify.add_argument("--depth", type=int, help="override config depth")
    verify.add_argument("--tolerance-c", dest="tolerance_c", type=float, help="override tolerance constant")
    verify.set_defaults(func=cmd_verify)

    sample = sub.add_parser("sample", help="dump raw draws from a config's law")
    sample.add_argument("--config", required=True)
    sample.add_argument("--count", type=int, help="number of draws (default: config samples)")
    sample.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    sample.add_argument("--out", help="write draws here instead of stdout")
    sample.add_argument("--seed", type=int)
    sample.add_argument("--depth", type=int)
    sample.set_defaults(func=cmd_sample)

    haar = sub.add_parser("haar-demo", help="verify the Haar construction")
    haar.add_argument("--group", choices=["padic", "solenoid"], required=True)
    haar.add_argument("--p", type=int, required=True)
    haar.add_argument("--depth", type=int, default=3)
    haar.add_argument("--samples", type=int, default=100000)
    haar.add_argument("--seed", type=int, default=0)
    haar.add_argument("--tolerance-c", dest="tolerance_c", type=float, default=4.0)
    haar.add_argument("--out", help="write the JSON report here instead of stdout")
    haar.add_argument("--csv", help="also write the row table as CSV")
    haar.set_defaults(func=cmd_haar_demo)

    selftest = sub.add_parser("selftest", help="run the built-in fixture checks")
    selftest.add_argument("--seed", type=int, default=0)
    selftest.add_argument("--samples", type=int, default=100000)
    selftest.add_argument("--out", help="write the JSON summary here instead of stdout")
    selftest.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
