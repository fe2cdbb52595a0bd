"""Command-line front end: ``qv <verb> [--group G] [--json] <payload...>``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import actions, presentations
from .characters import chi
from .fixtures import check_figures
from .quasi import (
    GROUPS,
    SUBGROUPS,
    abelianization_image,
    apply,
    format_qelement,
    in_commutator,
    membership,
    parity,
)
from .thompson import act as apply_v, format_velement, is_in_F
from .words import format_vertex, lex_sorted, parse_vertex, words_up_to

ALL_GROUPS = ("F", "T", "V") + GROUPS
SUITES = ("F", "T", "V", "QF", "tQT", "tQV", "symStar", "symZ", "figures", "all")
WITNESSES = ("sigma", "lambda", "delta", "bnsr", "kernel")


class UsageError(Exception):
    pass


def _parity_name(p: int) -> str:
    return "odd" if p else "even"


def _group_and_payload(args, count: int) -> tuple[str, list[str]]:
    """The group comes from --group or else from the first positional."""
    items = list(args.items)
    group = args.group
    if group is None:
        if not items:
            raise UsageError("missing group")
        group = items.pop(0)
    if group not in ALL_GROUPS:
        raise UsageError(f"unknown group {group!r}")
    if len(items) != count:
        raise UsageError(f"expected {count} argument(s) after the group, got {len(items)}")
    return group, items


def _evaluate(group: str, word: str):
    try:
        return presentations.evaluate(presentations.GroupWord.parse(word), group)
    except presentations.WordError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args) -> tuple[dict, str, int]:
    group, (word,) = _group_and_payload(args, 1)
    q = _evaluate(group, word)
    text = format_qelement(q)
    return {"group": group, "word": word, "element": text}, text, 0


def cmd_apply(args):
    group, (word, vertex) = _group_and_payload(args, 2)
    q = _evaluate(group, word)
    try:
        x = parse_vertex(vertex)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    y = format_vertex(apply(q, x))
    return {"group": group, "word": word, "vertex": vertex, "image": y}, y, 0


def cmd_invariants(args):
    group, (word,) = _group_and_payload(args, 1)
    q = _evaluate(group, word)
    data = {"group": group, "word": word, "element": format_qelement(q), "parity": _parity_name(parity(q))}
    lines = [f"element: {data['element']}", f"parity: {data['parity']}"]
    if is_in_F(q.v):
        data["chi"] = list(chi(q.v))
        lines.append(f"chi: ({data['chi'][0]}, {data['chi'][1]})")
    flags = {g: membership(q, g) for g in GROUPS + SUBGROUPS}
    data["membership"] = flags
    lines.append("membership: " + " ".join(f"{g}={'yes' if v else 'no'}" for g, v in flags.items()))
    if group in GROUPS:
        inside = in_commutator(q, group)
        image = abelianization_image(q, group)
        data["in_commutator"] = inside
        data["abelianization"] = list(image)
        lines.append(f"in [{group},{group}]: {'yes' if inside else 'no'}")
        lines.append("abelianization: (" + ", ".join(str(x) for x in image) + ")")
    return data, "\n".join(lines), 0


def _sym_suite(flavor: str, depth: int = 3, max_size: int = 5):
    vertices = list(words_up_to(depth))
    if flavor == "Z":
        vertices.append("z")
    failures = presentations.check_sym_subsets(lex_sorted(vertices), flavor, max_size)
    name = f"sym{flavor}"
    lines = [f"FAIL {name} {r.line()[5:]}" for r in failures]
    lines.append(f"{'PASS' if not failures else 'FAIL'} {name}: subsets of size <= {max_size}, depth <= {depth}")
    return lines, not failures


def run_suite(suite: str) -> tuple[list[str], bool]:
    if suite in presentations.PRESENTATIONS:
        results = presentations.check_relators(presentations.builtin_presentation(suite))
        return [r.line() for r in results], all(r.passed for r in results)
    if suite == "symStar":
        return _sym_suite("Star")
    if suite == "symZ":
        return _sym_suite("Z")
    if suite == "figures":
        results = check_figures()
        return [r.line() for r in results], all(r.passed for r in results)
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args):
    if len(args.items) != 1 or args.items[0] not in SUITES:
        raise UsageError("verify takes one suite: " + ", ".join(SUITES))
    suite = args.items[0]
    names = SUITES[:-1] if suite == "all" else (suite,)
    sections = {}
    lines = []
    ok = True
    for name in names:
        sec_lines, sec_ok = run_suite(name)
        sections[name] = {"passed": sec_ok, "lines": sec_lines}
        ok &= sec_ok
        lines.append(f"== {name}")
        lines += sec_lines
    return {"suite": suite, "passed": ok, "sections": sections}, "\n".join(lines), 0 if ok else 1


def cmd_orbit(args):
    group, (tuple_text, bound_text) = _group_and_payload(args, 2)
    try:
        start = actions.parse_tuple(tuple_text)
        bound = int(bound_text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if bound < 0:
        raise UsageError("bound must be non-negative")
    symbols = presentations.GROUP_SYMBOLS[group]
    gens = [presentations.GroupWord.parse(ch) for ch in symbols]
    orbit = presentations.orbit_enumerate(gens, start, bound, group, slack=args.slack)
    texts = [actions.format_tuple(t) for t in orbit]
    return {"group": group, "start": tuple_text, "bound": bound, "orbit": texts}, "\n".join(texts), 0


def _words(text: str) -> tuple[str, ...]:
    return tuple(parse_vertex(tok) for tok in text.split(","))


def cmd_witness(args):
    if not args.items or args.items[0] not in WITNESSES:
        raise UsageError("witness flavor must be one of " + ", ".join(WITNESSES))
    flavor, rest = args.items[0], args.items[1:]
    if len(rest) != 1:
        raise UsageError(f"witness {flavor} takes one argument")
    arg = rest[0]
    try:
        if flavor in ("sigma", "lambda", "delta"):
            code = {"sigma": "S", "lambda": "L", "delta": "D"}[flavor]
            targets = actions.VertexTuple(_words(arg), code)
            fn = {"sigma": actions.sigma_witness, "lambda": actions.lambda_witness, "delta": actions.delta_witness}
            v = fn[flavor](targets)
            base = actions.base_tuple(len(targets))
            images = [format_vertex(apply_v(v, y)) for y in base]
            check = "images: " + ", ".join(f"{format_vertex(y)}->{i}" for y, i in zip(base, images))
            data = {"images": dict(zip([format_vertex(y) for y in base], images))}
        elif flavor == "bnsr":
            v = actions.bnsr_witness_fixing(int(arg))
            fixed = {format_vertex(x): format_vertex(apply_v(v, x)) for x in ("", "0", "1")}
            check = f"chi: {chi(v)}; fixes e, 0, 1: {'yes' if all(k == w for k, w in fixed.items()) else 'no'}"
            data = {"chi": list(chi(v))}
        else:
            x1, x2 = _words(arg)
            if lex_sorted([x1, x2]) != [x1, x2] or x1 == x2:
                raise UsageError("tuple not strictly increasing")
            v = actions.kernel_transitivity_witness(x1, x2)
            check = f"chi: {chi(v)}; 0->{format_vertex(apply_v(v, '0'))}, e->{format_vertex(apply_v(v, ''))}"
            data = {"chi": list(chi(v))}
    except (actions.ActionError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    text = format_velement(v)
    data.update({"flavor": flavor, "argument": arg, "element": text})
    return data, f"{text}\n{check}", 0


COMMANDS = {
    "eval": cmd_eval,
    "apply": cmd_apply,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "orbit": cmd_orbit,
    "witness": cmd_witness,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qv", description="Exact arithmetic in QF, QT, QV, tQT, tQV and Thompson's F, T, V.")
    p.add_argument("verb", choices=sorted(COMMANDS))
    p.add_argument("--group", choices=ALL_GROUPS)
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--slack", type=int, default=1, help="extra search depth for orbit (default 1)")
    p.add_argument("items", nargs="*")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_intermixed_args(argv)
        data, text, code = COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"qv: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(data, ensure_ascii=False, sort_keys=True))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
