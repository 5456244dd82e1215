"""Command line entry point: ``ncg <command> ...``.

Exit codes: 0 pass, 1 pairing-table mismatch, 2 verification failure,
3 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field

from . import cyclic
from .fredholm import (
    DESCRIPTORS,
    EXPECTED_TABLE,
    PROJECTION_LABELS,
    TABLE_ROWS,
    InstabilityError,
    ModuleError,
    chern_pair_odd,
    pairing_table,
    verify_module,
)
from .groups import conjugacy_classes, dihedral_name
from .homotopy import homotopy_report
from .ring import DIHEDRAL, RingElement, projection

EXIT_OK, EXIT_MISMATCH, EXIT_FAIL, EXIT_INPUT = 0, 1, 2, 3


def _default_window() -> int:
    raw = os.environ.get("NCG_DEFAULT_WINDOW")
    if raw is None:
        return 32
    value = int(raw)
    if value < 1:
        raise ValueError("NCG_DEFAULT_WINDOW must be a positive integer")
    return value


@dataclass
class RunConfig:
    command: str = "table"
    window_radius: int = field(default_factory=_default_window)
    word_bound: int = 12
    k_list: list = field(default_factory=lambda: [1, 2])
    tolerance: float = 1e-9
    format: str = "json"
    seed: int = 0


class InputError(ValueError):
    pass


def _emit(obj, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        json.dump(obj, out, indent=2, default=str)
        out.write("\n")
    elif isinstance(obj, dict):
        for key, value in obj.items():
            if fmt == "md":
                out.write(f"- **{key}**: {json.dumps(value, default=str)}\n")
            else:
                out.write(f"{key},{json.dumps(value, default=str)}\n")
    else:
        out.write(f"{obj}\n")


def _read_json(path: str | None):
    if path is None:
        return None
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc


# table ----------------------------------------------------------------------


def _render_table(table, fmt: str) -> str:
    if fmt == "json":
        cells = [
            {"module": m, "class": PROJECTION_LABELS[j], "value": table[i][j]}
            for i, m in enumerate(TABLE_ROWS)
            for j in range(3)
        ]
        return json.dumps({"rows": list(TABLE_ROWS), "columns": list(PROJECTION_LABELS), "table": table, "cells": cells}, indent=2)
    if fmt == "csv":
        lines = ["module," + ",".join(PROJECTION_LABELS)]
        lines += [f"{m}," + ",".join(str(v) for v in row) for m, row in zip(TABLE_ROWS, table)]
        return "\n".join(lines)
    lines = ["| module | " + " | ".join(PROJECTION_LABELS) + " |", "|---" * 4 + "|"]
    lines += [f"| {m} | " + " | ".join(str(v) for v in row) + " |" for m, row in zip(TABLE_ROWS, table)]
    return "\n".join(lines)


def cmd_table(cfg: RunConfig) -> int:
    try:
        table = pairing_table(cfg.window_radius, tuple(cfg.k_list))
    except InstabilityError as exc:
        print(f"instability: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(_render_table(table, cfg.format))
    if table != EXPECTED_TABLE:
        for i, m in enumerate(TABLE_ROWS):
            for j, label in enumerate(PROJECTION_LABELS):
                if table[i][j] != EXPECTED_TABLE[i][j]:
                    print(f"mismatch <{m}, {label}>: got {table[i][j]}, expected {EXPECTED_TABLE[i][j]}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# verify / index -------------------------------------------------------------


def cmd_verify(cfg: RunConfig, module: str, restrict=None) -> int:
    if module not in DESCRIPTORS:
        raise InputError(f"unknown module {module!r}; choose from {sorted(DESCRIPTORS)}")
    w = cfg.window_radius
    if DESCRIPTORS[module].window_kind == "plane":
        w = min(w, 16)  # the plane window has (2N+1)^2 sites
    try:
        report = verify_module(module, w, restrict, cfg.tolerance)
    except ModuleError as exc:
        raise InputError(str(exc)) from exc
    _emit(report, cfg.format)
    return EXIT_OK if report["status"] in ("valid", "degenerate") else EXIT_FAIL


def parse_unitary(module: str, text: str) -> RingElement:
    d = DESCRIPTORS[module]
    if d.group == DIHEDRAL and d.generators == ("S",):
        text = text.replace("V", "S")  # the unitary generator of C(T)
    try:
        u = RingElement.word(d.group, text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if d.generators == ("S",) and u.max_word_length() and any(g.flip for g in u.terms):
        raise InputError(f"{module} only sees powers of S")
    return u


def cmd_index(cfg: RunConfig, module: str, text: str) -> int:
    if module not in DESCRIPTORS:
        raise InputError(f"unknown module {module!r}")
    u = parse_unitary(module, text)
    try:
        result = chern_pair_odd(module, u, cfg.window_radius)
    except ModuleError as exc:
        raise InputError(str(exc)) from exc
    except InstabilityError as exc:
        print(f"instability: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if cfg.format == "json":
        _emit({"module": module, "unitary": text, **result.to_json()}, "json")
    else:
        print(result.value)
    return EXIT_OK


# cyclic ---------------------------------------------------------------------


def _random_cd(rng: random.Random, support: int = 8):
    c = {rng.randint(-support, support): rng.randint(-5, 5) for _ in range(rng.randint(0, 5))}
    d = {}
    for _ in range(rng.randint(0, 4)):
        n, v = rng.randint(1, support), rng.randint(-5, 5)
        d[n], d[-n] = v, -v
    return cyclic.cocycle1_from_cd(c, d)


def _psi_from_name(name: str) -> cyclic.Cochain0:
    if name in ("0", "1", "2"):
        return cyclic.make_psi(int(name))
    if name.startswith("k"):
        return cyclic.make_psi_k(int(name[1:]))
    raise InputError(f"psi must be 0, 1, 2 or k<n>, got {name!r}")


def cmd_cyclic(cfg: RunConfig, args) -> int:
    sub = args.sub
    W = cfg.word_bound
    if sub == "solve1":
        data = _read_json(args.input)
        if args.random:
            rng = random.Random(cfg.seed)
            phis = [_random_cd(rng) for _ in range(args.random)]
        elif data is None:
            raise InputError("solve1 needs --input FILE|- with {\"c\": ..., \"d\": ...} or --random N")
        else:
            try:
                phis = [cyclic.CDCocycle.from_json(data)]
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        results = []
        for phi in phis:
            try:
                psi = cyclic.solve_1coboundary(phi, max(W, 16) if args.random else W)
            except cyclic.CoboundaryError as exc:
                print(str(exc), file=sys.stderr)
                return EXIT_FAIL
            results.append({"phi": phi.to_json(), "psi": psi.to_json(), "residual": 0})
        _emit(results[0] if len(results) == 1 else {"count": len(results), "residual": 0, "seed": cfg.seed}, cfg.format)
        return EXIT_OK
    if sub == "spsik":
        if args.k == 0:
            raise InputError("k must be nonzero")
        phi = cyclic.solve_2coboundary_psik(args.k, cyclic._scalar_in(args.ck))
        residual = cyclic.b1(phi, W) - cyclic.S0(cyclic.make_psi_k(args.k), W)
        out = {"k": args.k, "c_k": args.ck, "word_bound": W, "residual_entries": len(residual.table)}
        if args.tables:
            out["phi"] = phi.to_json(args.tables)
        else:
            out["alpha"] = {f"{m},{n}": str(phi.alpha(m, n)) for m in range(-W, W + 1) for n in range(-W, W + 1) if phi.alpha(m, n)}
            out["gamma"] = {f"{m},{n}": str(phi.gamma(m, n)) for m in range(-W, W) for n in range(-W, W) if phi.gamma(m, n)}
            out["beta"] = {}
        _emit(out, cfg.format)
        return EXIT_FAIL if residual.table else EXIT_OK
    if sub == "feasible":
        bound = args.bound
        if args.target == "spsi0":
            target = cyclic.S0(cyclic.make_psi(0), bound)
        elif args.target == "spsik":
            target = cyclic.S0(cyclic.make_psi_k(args.k), bound)
        else:
            data = _read_json(args.input)
            if data is None:
                raise InputError("--target file needs --input")
            try:
                target = cyclic.RawCochain2.from_json(data)
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        try:
            result = cyclic.coboundary_feasible(target, bound)
        except cyclic.OutsideWindow as exc:
            raise InputError(str(exc)) from exc
        _emit(result.to_json(), cfg.format)
        if not result.feasible and not result.certificate_checked:
            return EXIT_FAIL
        return EXIT_OK
    if sub == "pair0":
        psi = _psi_from_name(args.psi)
        if args.proj not in (0, 1, 2):
            raise InputError("--proj must be 0, 1 or 2")
        value = cyclic.pair0(psi, projection(args.proj))
        if cfg.format == "json":
            _emit({"psi": args.psi, "proj": args.proj, "value": str(value)}, "json")
        else:
            print(value)
        return EXIT_OK
    raise InputError(f"unknown cyclic subcommand {sub!r}")


# homotopy / conjugacy -------------------------------------------------------


def cmd_homotopy(cfg: RunConfig, steps: int, window: int | None) -> int:
    report = homotopy_report(steps, window or 64, cfg.tolerance)
    if cfg.format == "csv":
        sys.stdout.write(report.tail_csv())
    else:
        _emit(report.to_json(), cfg.format)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_conjugacy(cfg: RunConfig, max_length: int) -> int:
    classes = conjugacy_classes(max_length)
    _emit({"max_length": max_length, "classes": [[dihedral_name(g) for g in c] for c in classes]}, cfg.format)
    return EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--window", type=int, default=None, help="window radius N (default 32, or NCG_DEFAULT_WINDOW)")
    base.add_argument("--word-bound", type=int, default=None)
    base.add_argument("--tolerance", type=float, default=None)
    base.add_argument("--format", choices=["json", "csv", "md"], default=None)
    base.add_argument("--seed", type=int, default=None)
    common = argparse.ArgumentParser(add_help=False, parents=[base])
    common.add_argument("--k", type=int, nargs="+", default=None, dest="k_list")

    p = argparse.ArgumentParser(prog="ncg", description="Fredholm modules and cyclic cocycles for the infinite dihedral group.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="pairing table of w0, w1, w2 against K_0")
    v = sub.add_parser("verify", parents=[common], help="check the Fredholm-module axioms")
    v.add_argument("module")
    v.add_argument("--restrict", nargs="+", default=None, help="only these generators")
    ix = sub.add_parser("index", parents=[common], help="odd index pairing")
    ix.add_argument("module")
    ix.add_argument("unitary")
    h = sub.add_parser("homotopy", parents=[common], help="phase homotopy report")
    h.add_argument("--steps", type=int, default=10)
    cj = sub.add_parser("conjugacy", parents=[common], help="conjugacy classes of short elements")
    cj.add_argument("--max-length", type=int, required=True)

    c = sub.add_parser("cyclic", help="cyclic cochain solvers")
    csub = c.add_subparsers(dest="sub", required=True)
    s1 = csub.add_parser("solve1", parents=[common], help="solve b(psi) = phi for a (c, d) cocycle")
    s1.add_argument("--input", default=None, help="JSON file, or - for stdin")
    s1.add_argument("--random", type=int, default=0, help="check N seeded random cocycles instead")
    sk = csub.add_parser("spsik", parents=[base], help="explicit phi with b(phi) = S(psi_k)")
    sk.add_argument("--k", type=int, required=True, dest="k")
    sk.add_argument("--ck", default="0", help="free scalar c_k (rational string)")
    sk.add_argument("--tables", type=int, default=0, help="emit the raw pair table up to this word length")
    fe = csub.add_parser("feasible", parents=[base], help="exact coboundary test for a 2-cochain")
    fe.add_argument("--target", choices=["spsi0", "spsik", "file"], required=True)
    fe.add_argument("--k", type=int, default=2, dest="k")
    fe.add_argument("--bound", type=int, default=8)
    fe.add_argument("--input", default=None)
    pz = csub.add_parser("pair0", parents=[common], help="evaluate psi on a projection")
    pz.add_argument("--psi", required=True, help="0, 1, 2 or k<n>")
    pz.add_argument("--proj", type=int, required=True)
    return p


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for key, attr in (("window", "window_radius"), ("word_bound", "word_bound"), ("k_list", "k_list"),
                      ("tolerance", "tolerance"), ("format", "format"), ("seed", "seed")):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, attr, value)
    if cfg.window_radius < 1 or cfg.word_bound < 1:
        raise InputError("window and word bound must be positive")
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "table":
            return cmd_table(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args.module, args.restrict)
        if args.command == "index":
            return cmd_index(cfg, args.module, args.unitary)
        if args.command == "homotopy":
            return cmd_homotopy(cfg, args.steps, args.window)
        if args.command == "conjugacy":
            return cmd_conjugacy(cfg, args.max_length)
        if args.command == "cyclic":
            return cmd_cyclic(cfg, args)
    except (InputError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    parser.error(f"unknown command {args.command}")
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
