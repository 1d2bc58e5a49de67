"""Command-line front end: build models, compute decompositions, enumerate levels.

One binary, subcommand style; every numeric output is exact and every JSON
report is deterministic (sorted keys) for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib import resources

from .bb import VarietyModel, bb_stratify, generic_coweight
from .errors import ComputationError, EqcohomError, UsageError
from .flags import FlagSpec, flag_model
from .grassmannian import (
    GrSpec,
    base_ring_description,
    default_alpha,
    gr_fixed_points,
    gr_limit_module,
)
from .rings import FGLTruncation, euler_class
from .root_system import (
    RootSystemSpec,
    Weight,
    build_root_datum,
    generate_weyl,
    longest_element,
    word_label,
)
from .stratification import (
    assemble_module,
    is_open,
    linear_extension,
    poincare_series,
    render_poincare,
)

SCHEMA_VERSION = "v1"


def _emit(payload, args):
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in _text_lines(payload):
            print(line)


def _text_lines(payload, prefix=""):
    for key in payload:
        value = payload[key]
        if isinstance(value, dict):
            yield f"{prefix}{key}:"
            yield from _text_lines(value, prefix + "  ")
        elif isinstance(value, list):
            yield f"{prefix}{key}: {json.dumps(value, sort_keys=True)}"
        else:
            yield f"{prefix}{key}: {value}"


def _parse_type(name: str) -> RootSystemSpec:
    try:
        return RootSystemSpec.parse(name)
    except EqcohomError as exc:
        raise UsageError(str(exc)) from exc


def _parse_coords(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: comma-separated integers expected") from exc


def _parse_weights(text: str) -> list[Weight]:
    text = text.strip()
    if not text:
        return []
    return [Weight(_parse_coords(chunk, "weight")) for chunk in text.split(";")]


def _parse_parabolic(text: str | None, rank: int) -> frozenset[int]:
    if not text:
        return frozenset()
    indices = _parse_coords(text, "parabolic subset")
    for i in indices:
        if not 1 <= i <= rank:
            raise UsageError(f"parabolic index {i} out of range 1..{rank}")
    return frozenset(i - 1 for i in indices)


def _fgl(args, dimension=0) -> FGLTruncation | None:
    if args.mu_truncation is not None:
        if args.mu_truncation < 2 or args.mu_truncation % 2:
            raise UsageError("--mu-truncation must be an even integer >= 2")
        return FGLTruncation(args.mu_truncation)
    if dimension:
        return FGLTruncation(max(6, 2 * dimension))
    return None


def _verify_decomposition(poset, theory, args):
    """Order-independence check: rerun assembly along other legal orders."""
    from collections import Counter

    reference = assemble_module(poset, theory)
    ref_shifts = Counter(g.shift for g in reference.generators)
    ref_classes = Counter(g.euler for g in reference.generators)
    labels = list(poset.labels)
    if len(labels) <= 8:
        orders = _all_orders(poset)
    else:
        orders = [_random_order(poset, random.Random(args.seed + k)) for k in range(20)]
    for order in orders:
        dec = assemble_module(poset, theory, order=order)
        assert dec.rank == reference.rank
        assert Counter(g.shift for g in dec.generators) == ref_shifts
        assert Counter(g.euler for g in dec.generators) == ref_classes
        for k in range(1, len(order) + 1):
            assert is_open(poset, order[:k])
    return f"order-independence ok over {len(orders)} linear extensions"


def _all_orders(poset):
    def rec(remaining):
        if not remaining:
            return [()]
        out = []
        for b in sorted(remaining):
            if all(g == b or g not in remaining for g in poset.up[b]):
                for rest in rec(remaining - {b}):
                    out.append((b,) + rest)
        return out

    return rec(frozenset(poset.labels))


def _random_order(poset, rng):
    remaining = set(poset.labels)
    order = []
    while remaining:
        maximal = [
            b for b in remaining if all(g == b or g not in remaining for g in poset.up[b])
        ]
        pick = rng.choice(sorted(maximal))
        order.append(pick)
        remaining.discard(pick)
    return order


# -- subcommands ------------------------------------------------------------


def _cmd_weyl(args):
    spec = _parse_type(args.type)
    weyl = generate_weyl(build_root_datum(spec))
    w0 = longest_element(weyl)
    payload = {
        "type": spec.name,
        "order": len(weyl),
        "longest": {"word": word_label(w0), "length": w0.length},
        "elements": [{"word": word_label(w), "length": w.length} for w in weyl],
    }
    _emit(payload, args)
    return 0


def _decomposition_payload(model, theory, fgl, args):
    lam = generic_coweight(model)
    poset = bb_stratify(model, lam, theory, fgl)
    dec = assemble_module(poset, theory)
    payload = {
        "theory": theory,
        "dimension": model.dimension,
        "rank": dec.rank,
        "coweight": list(lam.coords),
        "poincare": render_poincare(poincare_series(dec)),
        "generators": [
            {"label": g.label, "shift": g.shift, "euler": g.euler.to_json()}
            for g in dec.generators
        ],
        "poset": poset.to_json(),
    }
    if args.verify:
        payload["verify"] = _verify_decomposition(poset, theory, args)
    return payload


def _cmd_flag(args):
    spec = _parse_type(args.type)
    parabolic = _parse_parabolic(args.parabolic, spec.rank)
    model = flag_model(FlagSpec(spec, parabolic))
    payload = _decomposition_payload(model, args.theory, _fgl(args, model.dimension), args)
    payload["type"] = spec.name
    payload["parabolic"] = sorted(i + 1 for i in parabolic)
    _emit(payload, args)
    return 0


def _cmd_model(args):
    if args.input == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input!r}: {exc}") from exc
    try:
        data = json.loads(raw)
        model = VarietyModel.from_json(data)
    except (KeyError, TypeError, ValueError, EqcohomError) as exc:
        raise UsageError(f"invalid variety model: {exc}") from exc
    payload = _decomposition_payload(model, args.theory, _fgl(args, model.dimension), args)
    _emit(payload, args)
    return 0


def _cmd_euler(args):
    weights = _parse_weights(args.weights)
    nvars = args.rank
    if nvars is None and not weights:
        raise UsageError("--rank is required when --weights is empty")
    try:
        elem = euler_class(args.theory, weights, nvars=nvars, fgl=_fgl(args))
    except EqcohomError as exc:
        raise UsageError(str(exc)) from exc
    payload = {
        "theory": args.theory,
        "weights": [list(w.coords) for w in weights],
        "euler": elem.to_json(),
    }
    _emit(payload, args)
    return 0


def _gr_spec(args) -> tuple[RootSystemSpec, Weight]:
    spec = _parse_type(args.type)
    if args.alpha is None:
        alpha = default_alpha(spec)
        if alpha is None:
            raise UsageError(f"--alpha is required for type {spec.name}")
    else:
        alpha = Weight(_parse_coords(args.alpha, "alpha"))
    return spec, alpha


def _cmd_gr(args):
    spec, alpha = _gr_spec(args)
    try:
        gs = GrSpec(spec, alpha, args.level)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    points = gr_fixed_points(gs)
    payload = {
        "type": spec.name,
        "alpha": list(alpha.coords),
        "level": args.level,
        "count": len(points),
        # no tangent data exists on these levels, so the module record is rank-only
        "module": {"rank": len(points), "base_ring": base_ring_description(args.theory, spec.rank)},
        "fixed_points": [
            {
                "coweight": list(p.coweight.coords),
                "dominant": list(p.dominant_rep.coords),
                "witness": word_label(p.witness),
            }
            for p in points
        ],
    }
    _emit(payload, args)
    return 0


def _cmd_gr_limit(args):
    spec, alpha = _gr_spec(args)
    if args.levels < 0:
        raise UsageError("--levels must be non-negative")
    try:
        GrSpec(spec, alpha, args.levels)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    pres = gr_limit_module(spec, alpha, args.levels, args.theory)
    if not pres.verify():
        raise EqcohomError("limit presentation failed its own verification")
    _emit(pres.to_json(), args)
    return 0


# -- parser -------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(sub, theory=True):
    if theory:
        sub.add_argument("--theory", choices=["H", "K", "MU"], default="H")
        sub.add_argument("--mu-truncation", type=int, default=None, metavar="D")
    sub.add_argument("--output", choices=["text", "json"], default="text")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eqcohom", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--schema", action="store_true", help="print the versioned I/O schemas and exit"
    )
    subs = parser.add_subparsers(dest="command")

    weyl = subs.add_parser("weyl", help="generate a Weyl group")
    weyl.add_argument("--type", required=True)
    _add_common(weyl, theory=False)
    weyl.set_defaults(fn=_cmd_weyl)

    flag = subs.add_parser("flag", help="module decomposition of a partial flag variety")
    flag.add_argument("--type", required=True)
    flag.add_argument("--parabolic", default=None, metavar="I,J,..")
    flag.add_argument("--verify", action="store_true")
    _add_common(flag)
    flag.set_defaults(fn=_cmd_flag)

    model = subs.add_parser("model", help="module decomposition of a variety model JSON")
    model.add_argument("--input", required=True, metavar="FILE")
    model.add_argument("--verify", action="store_true")
    _add_common(model)
    model.set_defaults(fn=_cmd_model)

    euler = subs.add_parser("euler", help="Euler class of a weight multiset")
    euler.add_argument("--weights", required=True, metavar="C,..;C,..")
    euler.add_argument("--rank", type=int, default=None)
    _add_common(euler)
    euler.set_defaults(fn=_cmd_euler)

    gr = subs.add_parser("gr", help="fixed points of one valuation level")
    gr.add_argument("--type", required=True)
    gr.add_argument("--alpha", default=None, metavar="C,..")
    gr.add_argument("--level", type=int, required=True)
    _add_common(gr)
    gr.set_defaults(fn=_cmd_gr)

    grl = subs.add_parser("gr-limit", help="direct-limit presentation across levels")
    grl.add_argument("--type", required=True)
    grl.add_argument("--alpha", default=None, metavar="C,..")
    grl.add_argument("--levels", type=int, required=True)
    _add_common(grl)
    grl.set_defaults(fn=_cmd_gr_limit)

    return parser


def _error_json(exc: Exception, cause: Exception | None = None) -> str:
    body = {"type": type(exc).__name__, "message": str(exc)}
    if cause is not None:
        body["cause"] = type(cause).__name__
    return json.dumps({"error": body}, sort_keys=True)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.schema:
            print(resources.files("eqcohom").joinpath("schemas.md").read_text(encoding="utf-8"))
            return 0
        if getattr(args, "command", None) is None:
            raise UsageError("a subcommand is required (see --help)")
        return args.fn(args)
    except UsageError as exc:
        print(_error_json(exc), file=sys.stderr)
        return 2
    except EqcohomError as exc:
        wrapped = ComputationError(str(exc))
        print(_error_json(wrapped, cause=exc), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
