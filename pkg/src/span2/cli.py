"""``span2`` command line: compose, limit, verify, demo.

Exit status: 0 when everything requested succeeded and every law passed,
1 if some law failed, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import finset as fs
from .coherence import verify_bicategory
from .cospans import CoTwoCell, Cospan, co_hcompose_cells, co_vcompose, cospan_compose, demo_cobordism
from .errors import ApexTooLarge, Span2Error
from .serialize import DecodeError, decode, decode_diagram, encode, locate
from .spans import Span, TwoCell, hcompose_cells, hcompose_spans, vcompose

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    input_paths: list = field(default_factory=list)
    seed: int = 0
    max_obj: int = 3
    trials: int = 50
    output: str | None = None
    format: str = "json"
    vertical: bool = False
    n_in: int = 2
    n_out: int = 2

    def __post_init__(self):
        if self.command not in ("compose", "limit", "verify", "demo"):
            raise ValueError(f"unknown command {self.command!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.max_obj < 0:
            raise ValueError("max_obj must be >= 0")
        if self.n_in < 0 or self.n_out < 0:
            raise ValueError("circle counts must be >= 0")
        if self.format not in ("json", "text"):
            raise ValueError("format must be json or text")


class InputError(Exception):
    pass


def _load(path, decoder=decode):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: cannot read: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from None
    try:
        return decoder(data)
    except DecodeError as exc:
        line = locate(text, exc.path)
        raise InputError(f"{path}:{line}: {exc.path}: {exc.message}") from None


def _max_apex():
    raw = os.environ.get("SPAN2_MAX_APEX", "10000")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"SPAN2_MAX_APEX must be an integer, got {raw!r}") from None


def _compose(a, b, vertical):
    if isinstance(a, Span) and isinstance(b, Span):
        return hcompose_spans(a, b)
    if isinstance(a, Cospan) and isinstance(b, Cospan):
        return cospan_compose(a, b)
    if isinstance(a, TwoCell) and isinstance(b, TwoCell):
        return vcompose(b, a) if vertical else hcompose_cells(a, b)
    if isinstance(a, CoTwoCell) and isinstance(b, CoTwoCell):
        return co_vcompose(b, a) if vertical else co_hcompose_cells(a, b)
    raise InputError(
        f"cannot compose {type(a).__name__} with {type(b).__name__}"
    )


def _text_value(v):
    if isinstance(v, (Span, Cospan)):
        arrow = ("<-", "->") if isinstance(v, Span) else ("->", "<-")
        lines = [f"{v.left_foot!r} {arrow[0]} {v.apex!r} {arrow[1]} {v.right_foot!r}"]
        for name in ("left_leg", "right_leg"):
            m = getattr(v, name)
            lines.append(f"  {name}: " + ", ".join(
                f"{x}->{y}" for x, y in zip(m.dom.elements, m.images)))
        return "\n".join(lines)
    if isinstance(v, fs.LimitResult):
        lines = [f"apex ({len(v.apex)}): {v.apex!r}"]
        for n in sorted(v.projections):
            m = v.projections[n]
            lines.append(f"  pi[{n}]: " + ", ".join(
                f"{x}->{y}" for x, y in zip(m.dom.elements, m.images)))
        return "\n".join(lines)
    if isinstance(v, (TwoCell, CoTwoCell)):
        return f"2-cell with signature {encode(v)['signature']}"
    return repr(v)


def _reports_out(reports, fmt):
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=2) + "\n"
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.law.value} trial={r.trial}: {r.evidence}"
        for r in reports
    ]
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def run(config: RunConfig) -> int:
    out = sys.stdout if config.output is None else open(config.output, "w")
    try:
        return _run(config, out)
    except InputError as exc:
        print(f"span2: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if out is not sys.stdout:
            out.close()


def _run(config, out):
    cmd = config.command
    if cmd == "compose":
        if len(config.input_paths) != 2:
            raise InputError("compose takes exactly two input files")
        a, b = (_load(p) for p in config.input_paths)
        try:
            result = _compose(a, b, config.vertical)
        except Span2Error as exc:
            raise InputError(
                f"{config.input_paths[0]}, {config.input_paths[1]}: {exc}"
            ) from None
        _emit(out, result, config.format)
        return EXIT_OK
    if cmd == "limit":
        if len(config.input_paths) != 1:
            raise InputError("limit takes exactly one diagram file")
        path = config.input_paths[0]
        D = _load(path, decode_diagram)
        try:
            L = fs.limit(D, max_product=_max_apex())
        except ApexTooLarge as exc:
            raise InputError(f"{path}: {exc} (raise SPAN2_MAX_APEX to allow)") from None
        _emit(out, L, config.format)
        return EXIT_OK
    if cmd == "verify":
        reports = verify_bicategory(config.seed, config.max_obj, config.trials)
    else:
        reports = demo_cobordism(
            config.n_in, config.n_out, config.seed, config.trials, config.max_obj
        )
    out.write(_reports_out(reports, config.format))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _emit(out, value, fmt):
    if fmt == "json":
        out.write(json.dumps(encode(value), indent=2) + "\n")
    else:
        out.write(_text_value(value) + "\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="span2",
        description="Spans, cospans and machine-checked bicategory laws over finite sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", "-o", default=None, help="write here instead of stdout")

    p = sub.add_parser("compose", help="compose two spans, cospans or 2-cells")
    p.add_argument("inputs", nargs=2, metavar="FILE")
    p.add_argument("--vertical", action="store_true",
                   help="compose 2-cells vertically (second after first)")
    common(p)

    p = sub.add_parser("limit", help="limit of a finite diagram")
    p.add_argument("inputs", nargs=1, metavar="DIAGRAM")
    common(p)

    p = sub.add_parser("verify", help="check every bicategory law on random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-obj", type=int, default=3)
    p.add_argument("--trials", type=int, default=50)
    common(p)

    p = sub.add_parser("demo", help="coherence suite on random toy cobordisms")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-in", type=int, default=2)
    p.add_argument("--n-out", type=int, default=2)
    p.add_argument("--max-obj", type=int, default=3)
    p.add_argument("--trials", type=int, default=10)
    common(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            input_paths=list(getattr(args, "inputs", [])),
            seed=getattr(args, "seed", 0),
            max_obj=getattr(args, "max_obj", 3),
            trials=getattr(args, "trials", 50),
            output=args.output,
            format=args.format,
            vertical=getattr(args, "vertical", False),
            n_in=getattr(args, "n_in", 2),
            n_out=getattr(args, "n_out", 2),
        )
    except ValueError as exc:
        parser.error(str(exc))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
