"""Command-line front end: cells, smooth, verify, av, rs, oracle."""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .av import NonUniqueMinimum, NotIntegralMinimal, av_representative, verify_av
from .cells import right_cell, table_cell_size, w0_right_cell
from .patterns import bar
from .rootsys import CartanType, RootSystem, build
from .smoothness import DEFAULT_ORACLE_CAP, is_smooth, poincare, verify_theorem_smcell
from .tableaux import rs_insert
from .weyl import (
    IntervalTooLarge,
    WeylElement,
    from_one_line,
    from_word,
    longest_element,
    multiply,
    one_line,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    cartan_type: CartanType
    node: int | None = None
    fmt: str = "text"
    extended: bool = False
    oracle_cap: int = DEFAULT_ORACLE_CAP
    side: str = "C"

    def __post_init__(self):
        if self.node is not None and not 1 <= self.node <= self.cartan_type.rank:
            raise UsageError(f"--node must be in 1..{self.cartan_type.rank}")

    @property
    def rs(self) -> RootSystem:
        return build(self.cartan_type)


# --- element parsing and rendering ---------------------------------------------


def parse_element(rs: RootSystem, text: str, one_line_input: bool = False) -> WeylElement:
    """A word ("1 2 1", "121", "1,2,1") or a one-line form ("(-2,-3,1)").

    Parentheses (or ``one_line_input``) force one-line reading. Unbracketed
    input is a word when every entry is a generator index, and otherwise a
    one-line form in the classical types. Compact words without separators
    are only accepted for rank < 10.
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        one_line_input, text = True, text[1:-1]
    if one_line_input and not rs.cartan_type.is_classical:
        raise UsageError("one-line input needs a classical type")
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    try:
        if one_line_input:
            return from_one_line(rs, [int(t) for t in tokens])
        if len(tokens) == 1 and rs.rank < 10 and tokens[0].isdigit():
            tokens = list(tokens[0])
        word = [int(t) for t in tokens]
        if all(1 <= i <= rs.rank for i in word):
            return from_word(rs, word)
        if rs.cartan_type.is_classical:
            # not a word: read it as a one-line form, e.g. "3 4 1 2" in A3
            return from_one_line(rs, word)
        raise UsageError(f"generator out of range 1..{rs.rank} in {text!r}")
    except ValueError as exc:
        raise UsageError(f"cannot parse element {text!r}: {exc}") from exc


def element_json(w: WeylElement) -> dict:
    ct = w.rs.cartan_type
    return {
        "word": list(w.word),
        "one_line": list(one_line(w)) if ct.is_classical else None,
        "length": w.length,
    }


def element_text(w: WeylElement) -> str:
    word = "".join(map(str, w.word)) if w.rs.rank < 10 else " ".join(map(str, w.word))
    parts = [f"s[{word or 'e'}]"]
    if w.rs.cartan_type.is_classical:
        parts.append(bar(one_line(w)))
    parts.append(f"len {w.length}")
    return "  ".join(parts)


def _w0_form(w: WeylElement) -> str:
    """Render w as w0*x."""
    x = multiply(longest_element(w.rs), w)
    return f"w0*s[{''.join(map(str, x.word)) or 'e'}]"


def _witness_text(verdict) -> str | None:
    wit = verdict.witness
    if wit is None:
        return None
    if verdict.engine in ("typeA",):
        return f"pattern {wit[0]} at positions {list(wit[1])}"
    if verdict.engine == "restricted_list":
        return f"pattern {bar(wit[0])} at positions {list(wit[1])}"
    if verdict.engine == "bp":
        sub, sigma = wit
        return f"{sub.type_label} subsystem on base {list(map(list, sub.base))}, flattening s[{''.join(map(str, sigma.word))}]"
    return str(wit)


def _witness_json(verdict):
    wit = verdict.witness
    if wit is None:
        return None
    if verdict.engine in ("typeA", "restricted_list"):
        return {"pattern": list(wit[0]) if verdict.engine != "typeA" else wit[0], "positions": list(wit[1])}
    if verdict.engine == "bp":
        sub, sigma = wit
        return {"subsystem": sub.type_label, "base": [list(b) for b in sub.base], "flattening": list(sigma.word)}
    return str(wit)


# --- commands -------------------------------------------------------------------


def _nodes(config: RunConfig):
    return [config.node] if config.node is not None else list(range(1, config.cartan_type.rank + 1))


def _require_extended(config: RunConfig):
    ct = config.cartan_type
    if ct.family == "E" and ct.rank >= 7 and not config.extended:
        raise UsageError(f"{ct} needs --extended")


def cmd_cells(config: RunConfig) -> tuple[list, int]:
    rs = config.rs
    results = []
    for i in _nodes(config):
        cell = right_cell(rs, i) if config.side == "C" else w0_right_cell(rs, i)
        results.append({"node": i, "side": config.side, "size": len(cell), "elements": list(cell)})
    return results, EXIT_OK


def cmd_smooth(config: RunConfig, w: WeylElement) -> tuple[list, int]:
    v = is_smooth(config.rs, w)
    return [{"element": w, "verdict": v}], EXIT_OK


def cmd_verify(config: RunConfig) -> tuple[list, int]:
    _require_extended(config)
    rs = config.rs
    ct = config.cartan_type
    status = EXIT_OK
    results = []
    for row in verify_theorem_smcell(rs, cross_check=True):
        results.append({"check": "smooth_cell", **row})
        if not row["match"]:
            status = EXIT_MISMATCH
    for i in range(1, rs.rank + 1):
        size = len(right_cell(rs, i))
        want = table_cell_size(ct, i)
        ok = want is None or size == want
        results.append({"check": "cell_size", "node": i, "computed": size, "expected": want, "match": ok})
        if not ok:
            status = EXIT_MISMATCH
    for entry in verify_av(rs):
        ok = entry["error"] is None and entry["stated_is_min"] is not False
        results.append({"check": "av", **entry, "match": ok})
        if not ok:
            status = EXIT_MISMATCH
    return results, status


def cmd_av(config: RunConfig, w: WeylElement) -> tuple[list, int]:
    res = av_representative(config.rs, w)
    return [{"element": w, "av": res}], EXIT_OK


def cmd_rs(config: RunConfig, w: WeylElement) -> tuple[list, int]:
    P, Q = rs_insert(one_line(w))
    return [{"element": w, "P": P, "Q": Q}], EXIT_OK


def cmd_oracle(config: RunConfig, w: WeylElement) -> tuple[list, int]:
    p = poincare(config.rs, w, cap=config.oracle_cap)
    return [{"element": w, "poincare": p}], EXIT_OK


# --- rendering -----------------------------------------------------------------


def _to_json(obj):
    from .av import AVResult
    from .smoothness import PoincarePolynomial
    from .tableaux import Tableau

    if isinstance(obj, WeylElement):
        return element_json(obj)
    if isinstance(obj, dict):
        if "verdict" in obj:
            v = obj["verdict"]
            return {
                "element": element_json(obj["element"]),
                "smooth": v.smooth,
                "engine": v.engine,
                "witness": _witness_json(v),
            }
        return {k: _to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_json(x) for x in obj]
    if isinstance(obj, AVResult):
        return {
            "cell_index": obj.cell_index,
            "representative_min": element_json(obj.representative_min),
            "min_length_elements": [element_json(x) for x in obj.min_length_elements],
            "representative_max": None if obj.representative_max is None else element_json(obj.representative_max),
            "irreducible": obj.irreducible,
        }
    if isinstance(obj, PoincarePolynomial):
        return list(obj.coefficients)
    if isinstance(obj, Tableau):
        return [list(r) for r in obj.rows]
    return obj


def _render_text(command: str, results: list) -> str:
    lines = []
    for r in results:
        if command == "cells":
            lines.append(f"{'C' if r['side'] == 'C' else 'w0C'}_{r['node']}: {r['size']} elements")
            lines.extend("  " + element_text(w) for w in r["elements"])
        elif command == "smooth":
            v = r["verdict"]
            lines.append(element_text(r["element"]))
            lines.append(f"{'smooth' if v.smooth else 'not smooth'} (engine: {v.engine})")
            wit = _witness_text(v)
            if wit:
                lines.append(f"witness: {wit}")
        elif command == "verify":
            mark = "PASS" if r["match"] else "FAIL"
            if r["check"] == "smooth_cell":
                n = len(r["computed"])
                lines.append(f"[{mark}] S(w0C_{r['node']}): {n} smooth, expected {len(r['expected'])}")
            elif r["check"] == "cell_size":
                lines.append(f"[{mark}] |C_{r['node']}| = {r['computed']} (table: {r['expected'] if r['expected'] is not None else '-'})")
            else:
                if r["error"]:
                    lines.append(f"[{mark}] av node {r['node']}: {r['error']}")
                    continue
                res = r["result"]
                ties = "" if r["unique"] else f" (tie among {len(r['min_length_elements'])})"
                stated = "" if r["stated_is_min"] is None else f", stated representative {'found' if r['stated_is_min'] else 'MISSING'}"
                lines.append(f"[{mark}] av node {r['node']}: w_min {element_text(res.representative_min)}{ties}{stated}")
        elif command == "av":
            res = r["av"]
            lines.append(f"cell: w0C_{res.cell_index}")
            lines.append(f"w_min: {_w0_form(res.representative_min)}  {element_text(res.representative_min)}")
            for other in res.min_length_elements[1:]:
                lines.append(f"       {_w0_form(other)}  {element_text(other)}  (same length)")
            if res.representative_max is not None:
                lines.append(f"w_max: {_w0_form(res.representative_max)}  {element_text(res.representative_max)}")
        elif command == "rs":
            lines.append(element_text(r["element"]))
            lines.append(f"P (shape {r['P'].shape}):")
            lines.extend("  " + row for row in str(r["P"]).splitlines())
            lines.append(f"Q (shape {r['Q'].shape}):")
            lines.extend("  " + row for row in str(r["Q"]).splitlines())
        elif command == "oracle":
            p = r["poincare"]
            pal = p.coefficients == p.coefficients[::-1]
            lines.append(element_text(r["element"]))
            lines.append(f"P(t) = {p}")
            lines.append(f"palindromic: {pal}")
    return "\n".join(lines)


# --- argument handling ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="family letter A..G, or a full label such as E6")
    common.add_argument("--rank", type=int, help="rank (optional when --type carries it)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--extended", action="store_true", help="allow E7/E8 in verify")
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)

    elem = argparse.ArgumentParser(add_help=False)
    elem.add_argument("-w", "--element", required=True, help='word "1 2 1" / "121", or one-line "(-2,-3,1)"')
    elem.add_argument("--one-line", action="store_true", help="read -w as a one-line form")

    parser = argparse.ArgumentParser(prog="smoothcells", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("cells", parents=[common], help="list C_i or w0 C_i")
    p.add_argument("--node", type=int)
    p.add_argument("--side", choices=("C", "w0"), default="C")
    sub.add_parser("smooth", parents=[common, elem], help="smoothness of X(w)")
    p = sub.add_parser("verify", parents=[common], help="check smooth sets, cell sizes and AV labels")
    sub.add_parser("av", parents=[common, elem], help="orbital-variety label for L_w")
    sub.add_parser("rs", parents=[common, elem], help="RS tableaux of the one-line form")
    sub.add_parser("oracle", parents=[common, elem], help="Poincare polynomial of X(w)")
    return parser


def _config(args) -> RunConfig:
    try:
        if args.rank is None:
            ct = CartanType.parse(args.type)
        elif len(args.type) > 1:
            ct = CartanType.parse(args.type)
            if ct.rank != args.rank:
                raise UsageError(f"--type {args.type} conflicts with --rank {args.rank}")
        else:
            ct = CartanType(args.type.upper(), args.rank)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    side = "w0C" if getattr(args, "side", "C") == "w0" else "C"
    return RunConfig(ct, getattr(args, "node", None), args.format, args.extended, args.oracle_cap, side)


def run(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = _config(args)
        if args.command in ("rs",) and config.cartan_type.family != "A":
            raise UsageError("rs needs type A")
        if args.command in ("cells", "verify"):
            handler = cmd_cells if args.command == "cells" else cmd_verify
            results, status = handler(config)
        else:
            w = parse_element(config.rs, args.element, args.one_line)
            handler = {"smooth": cmd_smooth, "av": cmd_av, "rs": cmd_rs, "oracle": cmd_oracle}[args.command]
            results, status = handler(config, w)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except NotIntegralMinimal:
        print("error: not integral minimal (element is outside w0*C)", file=err)
        return EXIT_MISMATCH
    except NonUniqueMinimum as exc:
        print(f"error: {exc}", file=err)
        return EXIT_MISMATCH
    except IntervalTooLarge as exc:
        print(f"error: {exc} (raise --oracle-cap)", file=err)
        return EXIT_USAGE

    ct = config.cartan_type
    if config.fmt == "json":
        payload = {"type": ct.family, "rank": ct.rank, "command": args.command, "results": _to_json(results)}
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(f"{ct} {args.command}", file=out)
        print(_render_text(args.command, results), file=out)
        if args.command == "verify":
            print("PASS" if status == EXIT_OK else "FAIL", file=out)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
