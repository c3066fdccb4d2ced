"""Command-line front end for enumeration, bijections, series, and identity
verification.

Exit codes: 0 on success (or verified), 1 when a verification finds a
mismatch, 2 on usage errors (malformed partitions, unknown colors, broken
energy files), with a diagnostic naming the violated constraint.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import characters, deg1, deg2, degk, families, series
from .core import (
    EnergyStructureError,
    InvalidPartitionError,
    UsageError,
    format_partition,
    load_energy,
    parse_partition,
    part_color_seq,
    part_size,
    partition_size,
)


def _workers():
    raw = os.environ.get("PARTITION_FORGE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _grid_map(fn, items):
    n = _workers()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _parse_word(text, colors):
    if not text:
        return ()
    from .core import _label_splits

    splits = _label_splits(text, colors)
    splits = [w for w in splits if colors.ground not in w]
    if not splits:
        raise UsageError("word %r does not spell non-ground colors" % (text,))
    if len(splits) > 1:
        raise UsageError("word %r is ambiguous" % (text,))
    return splits[0]


def _partition_json(pi, colors, energy):
    return [
        {
            "size": part_size(p, energy),
            "colors": [colors.label(c) for c in part_color_seq(p)],
        }
        for p in pi
    ]


def _cmd_enumerate(args):
    colors, energy = load_energy(args.energy)
    word = _parse_word(args.word, colors) if args.word is not None else None
    max_parts = args.max_parts
    if max_parts is None:
        max_parts = args.max_size + (len(word) if word else 0) + 1
    budget = families.Budget(args.max_size, max_parts, word)
    found = families.members(args.family, energy, colors, budget, degree=args.degree)
    if args.json:
        print(
            json.dumps(
                {
                    "family": args.family,
                    "members": [
                        {
                            "text": format_partition(pi, colors, energy),
                            "size": partition_size(pi, energy),
                            "parts": _partition_json(pi, colors, energy),
                        }
                        for pi in found
                    ],
                },
                indent=2,
            )
        )
    else:
        for pi in found:
            print(format_partition(pi, colors, energy))
    return 0


def _cmd_count(args):
    colors, energy = load_energy(args.energy)
    word = _parse_word(args.word, colors)
    print(
        families.count_by_word(
            args.family, energy, colors, word, args.size, degree=args.degree
        )
    )
    return 0


def _map_command(args, fn):
    colors, energy = load_energy(args.energy)
    pi = parse_partition(args.part, colors, energy)
    out = fn(pi, energy, colors)
    print(format_partition(out, colors, energy))
    return 0


def _cmd_flatten(args):
    from .core import DegreeK, Secondary

    colors, energy = load_energy(args.energy)
    pi = parse_partition(args.part, colors, energy)
    # two-color tokens parse as secondary parts; the degree-k maps take the
    # equivalent degree-2 form
    pi = tuple(
        DegreeK(p.half, (p.left, p.right)) if isinstance(p, Secondary) else p
        for p in pi
    )
    if args.invert:
        out = degk.unflatten_k(pi, energy, colors, args.degree)
    else:
        out = degk.flatten_k(pi, energy, colors, args.degree)
    print(format_partition(out, colors, energy))
    return 0


def _cmd_verify_deg2(args):
    colors, energy = load_energy(args.energy)
    word = _parse_word(args.word, colors)
    rows = _grid_map(
        lambda n: deg2.verify_flatreg2(energy, colors, word, n),
        range(args.max_size + 1),
    )
    ok = all(row["all_equal"] for row in rows)
    if args.json:
        print(json.dumps({"word": args.word, "rows": [
            {"n": r["n"], **r["counts"], "all_equal": r["all_equal"]} for r in rows
        ], "pass": ok}, indent=2))
    else:
        labels = ("F2", "F1", "R1", "O", "E", "R2")
        print("n    " + "".join("%6s" % t for t in labels) + "   equal")
        for r in rows:
            print(
                "%-4d " % r["n"]
                + "".join("%6d" % r["counts"][t] for t in labels)
                + "   %s" % ("yes" if r["all_equal"] else "NO")
            )
        print("verdict: %s" % ("pass" if ok else "FAIL"))
    return 0 if ok else 1


def _cmd_character(args):
    report = characters.verify_character(args.family, args.rank, args.order)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(
            "%s rank %d to order %d: paths %s, product %s"
            % (
                args.family,
                args.rank,
                args.order,
                "agree" if report["paths_agree"] else "DISAGREE",
                "matches" if report["lhs_equals_rhs"] else "MISMATCH",
            )
        )
        for bad in report.get("mismatches", [])[:20]:
            print("  q^%d %s: %r" % (bad["q"], bad["exps"], bad))
    return 0 if report["pass"] else 1


def _cmd_verify(args):
    report = characters.verify_named_identity(args.identity, args.order, m=args.m)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        keys = [k for k in report["rows"][0] if k not in ("n", "match")]
        print("n    " + "".join("%18s" % k for k in keys))
        for row in report["rows"]:
            print(
                "%-4d " % row["n"]
                + "".join("%18s" % row[k] for k in keys)
                + ("" if row["match"] else "   MISMATCH")
            )
        print("verdict: %s" % ("pass" if report["pass"] else "FAIL"))
    return 0 if report["pass"] else 1


def _cmd_series(args):
    spec = args.factors
    if spec.startswith("@"):
        with open(spec[1:], encoding="utf-8") as handle:
            spec = handle.read()
    data = json.loads(spec)
    names = args.colors.split(",") if args.colors else []
    names = [n for n in names if n]
    factors = []
    for item in data:
        factors.append(
            series.ProductFactor(
                item.get("sign", 1),
                tuple(item.get("exps", [0] * len(names))),
                item["offset"],
                item.get("modulus", 1),
                item.get("reciprocal", False),
            )
        )
    out = series.pochhammer_expand(factors, args.order, len(names))
    if args.json:
        print(json.dumps(out.to_json(names), indent=2))
    else:
        print(out.text(names))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="partition-forge",
        description="colored-partition bijections, enumeration oracles, and q-series checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("enumerate", _cmd_enumerate, help="list family members under a budget")
    p.add_argument("--family", required=True, choices=families.FAMILY_TAGS)
    p.add_argument("--energy", required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--max-parts", type=int)
    p.add_argument("--word")
    p.add_argument("--degree", type=int)
    p.add_argument("--json", action="store_true")

    p = add("count", _cmd_count, help="count members with a fixed word and size")
    p.add_argument("--family", required=True, choices=families.FAMILY_TAGS)
    p.add_argument("--energy", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--degree", type=int)

    for name, fn in (
        ("omega", lambda a: _map_command(a, deg1.omega)),
        ("omega-inv", lambda a: _map_command(a, deg1.omega_inv)),
        ("split2", lambda a: _map_command(a, deg2.split_flat2)),
        ("merge2", lambda a: _map_command(a, deg2.merge_flat1)),
    ):
        p = add(name, fn, help="apply the %s map to one partition" % name)
        p.add_argument("--energy", required=True)
        p.add_argument("--in", dest="part", required=True)

    p = add("flatten", _cmd_flatten, help="split (or regroup) degree-k parts")
    p.add_argument("--energy", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--in", dest="part", required=True)
    p.add_argument("--invert", action="store_true")

    p = add("verify-deg2", _cmd_verify_deg2, help="six-family count table for one word")
    p.add_argument("--energy", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("character", _cmd_character, help="check one level-one character identity")
    p.add_argument("--family", required=True, choices=characters.CHARACTER_FAMILIES)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("verify", _cmd_verify, help="check one named partition identity")
    p.add_argument("--identity", required=True, choices=characters.IDENTITIES)
    p.add_argument("--m", type=int)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("series", _cmd_series, help="expand a Pochhammer-style product")
    p.add_argument("--factors", required=True, help="JSON list of factors, or @file")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--colors", help="comma-separated color variable names")
    p.add_argument("--json", action="store_true")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, InvalidPartitionError, EnergyStructureError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
