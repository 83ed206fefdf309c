"""Command-line interface: ``schurlab <command> [options]``.

Every command prints to stdout in one of the formats text, json, dot or csv.
JSON output is wrapped as {"command", "seed", "result"} and is byte-identical
for a fixed argument list.  Exit status is 0 on success, 1 on a usage or
domain error and 2 when ``verify`` finds a failing check.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import random
import sys
from typing import Callable

from schurlab.autocorrelation import MAX_SEARCH_N, autocorr_vector, check_divisibility, search_two_level
from schurlab.codes import CodeSet, code_witness, count_pt_free_subgroups, generated_masks
from schurlab.constructions import (
    default_invariant_base,
    g_lattice,
    g_subgroup,
    invariant_code,
    invariant_order_exponent,
    invariant_subgroup,
    invariant_subgroup_scan,
    lattice_dot,
    sym_code,
    sym_subgroup,
    xfd_code,
)
from schurlab.perm_groups import GROUP_ALIASES, CapExceeded, group, orbit, partition, partition_cap
from schurlab.schur_ring import gset_product_weights, lambda_bruteforce, lambda_formula
from schurlab.theorems import TheoremResult, theorem_ids, theorem_suite
from schurlab.words import Word, parse_word, render_word

FORMATS = ("text", "json", "dot", "csv")
CENSUS_ENUM_MAX = 10
LAMBDA_CHECK_MAX = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors share exit status 1 with domain errors
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _words(n: int, masks) -> list[str]:
    return [render_word(Word(n, m)) for m in masks]


def _cap(args) -> int:
    return args.max_n if args.max_n is not None else partition_cap()


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


def _check_cap(args, n: int) -> None:
    cap = _cap(args)
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap} (set --max-n or SCHURLAB_MAX_N)")


def _parse_words(texts: list[str]) -> list[Word]:
    words = [parse_word(t) for t in texts]
    if not words:
        raise UsageError("at least one word is required")
    if len({w.n for w in words}) != 1:
        raise ValueError("words have different lengths")
    return words


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# Each handler returns (result for JSON, renderer for the other formats, ok flag).
Rendered = tuple[object, Callable[[str], str], bool]


def _unsupported(fmt: str) -> str:
    raise UsageError(f"format {fmt} is not available for this command")


def cmd_partition(args) -> Rendered:
    _need(args, "n")
    _check_cap(args, args.n)
    g = group(args.n, args.group)
    sp = partition(args.n, g, max_n=_cap(args))
    orbits = sp.to_json()
    result = {"n": args.n, "group": args.group, "num_orbits": len(orbits), "orbits": orbits}

    def render(fmt: str) -> str:
        if fmt == "text":
            return "".join(" ".join(o) + "\n" for o in orbits)
        if fmt == "csv":
            return _csv([[i, len(o), w] for i, o in enumerate(orbits) for w in o], ["orbit", "size", "word"])
        return _unsupported(fmt)

    return result, render, True


def cmd_orbit(args) -> Rendered:
    if not args.word:
        raise UsageError("orbit takes one word")
    x = parse_word(args.word[0])
    g = group(x.n, args.group)
    orb = [render_word(w) for w in orbit(x, g)]
    result = {"n": x.n, "group": args.group, "word": render_word(x), "size": len(orb), "orbit": orb}

    def render(fmt: str) -> str:
        if fmt == "text":
            return "".join(w + "\n" for w in orb)
        return _unsupported(fmt)

    return result, render, True


def cmd_code_check(args) -> Rendered:
    words = _parse_words(args.word)
    code = CodeSet.of(words)
    wit = code_witness(code, args.method)
    result = {"n": code.n, "words": [render_word(w) for w in words], "is_code": wit is None}
    if wit is not None:
        result["witness"] = wit.to_json()

    def render(fmt: str) -> str:
        if fmt != "text":
            return _unsupported(fmt)
        if wit is None:
            return "code\n"
        return f"not a code: {render_word(wit.word)} = {list(wit.first)} = {list(wit.second)}\n"

    return result, render, True


def cmd_generate(args) -> Rendered:
    words = _parse_words(args.word)
    n = words[0].n
    masks = generated_masks(words)
    out = _words(n, masks)
    result = {"n": n, "generators": [render_word(w) for w in words], "order": len(out), "elements": out}

    def render(fmt: str) -> str:
        if fmt == "text":
            return "".join(w + "\n" for w in out)
        return _unsupported(fmt)

    return result, render, True


def cmd_construct(args) -> Rendered:
    _need(args, "n")
    n, kind = args.n, args.family
    _check_cap(args, n)
    if kind == "gd":
        _need(args, "d")
        code = xfd_code(n, args.d)
        masks = g_subgroup(n, args.d)
        params = {"d": args.d}
    elif kind == "inv":
        _need(args, "a")
        code = invariant_code(n, args.a)
        masks = invariant_subgroup(n, args.a)
        if masks != invariant_subgroup_scan(n, args.a):
            raise AssertionError("coset code and fixed-point scan disagree")
        params = {"a": args.a, "base": default_invariant_base(n), "exponent": invariant_order_exponent(n, args.a)}
    else:
        code = sym_code(n)
        masks = sym_subgroup(n)
        if masks != generated_masks(code.words):
            raise AssertionError("code and palindrome scan disagree")
        params = {}
    elements = _words(n, masks)
    result = {
        "family": kind,
        "n": n,
        **params,
        "code": [render_word(w) for w in code.words],
        "order": len(elements),
        "elements": elements,
    }

    def render(fmt: str) -> str:
        if fmt == "text":
            return "".join(w + "\n" for w in elements)
        if fmt == "csv":
            return _csv([[w, w.count("+")] for w in elements], ["word", "weight"])
        return _unsupported(fmt)

    return result, render, True


def cmd_lattice(args) -> Rendered:
    _need(args, "n")
    if args.n < 1:
        raise ValueError("n must be positive")
    nodes, edges = g_lattice(args.n)
    result = {"n": args.n, "nodes": nodes, "edges": [list(e) for e in edges]}

    def render(fmt: str) -> str:
        if fmt == "dot":
            return lattice_dot(args.n)
        if fmt == "text":
            return "".join(f"G_{d}({args.n}) < G_{e}({args.n})\n" for d, e in edges)
        if fmt == "csv":
            return _csv([list(e) for e in edges], ["d", "e"])
        return _unsupported(fmt)

    return result, render, True


def cmd_lambda(args) -> Rendered:
    _need(args, "n")
    n = args.n
    if None in (args.i, args.j, args.k):
        triples = [(i, j, k) for i in range(n + 1) for j in range(n + 1) for k in range(n + 1)]
    else:
        triples = [(args.i, args.j, args.k)]
    check = n <= LAMBDA_CHECK_MAX and args.check
    rows = []
    ok = True
    for i, j, k in triples:
        row = {"i": i, "j": j, "k": k, "value": lambda_formula(n, i, j, k)}
        if check:
            row["bruteforce"] = lambda_bruteforce(n, i, j, k)
            ok &= row["bruteforce"] == row["value"]
        rows.append(row)
    result = {"n": n, "checked": check, "agree": ok if check else None, "constants": rows}

    def render(fmt: str) -> str:
        if fmt == "text":
            return "".join(f"lambda[{r['i']},{r['j']},{r['k']}] = {r['value']}\n" for r in rows)
        if fmt == "csv":
            return _csv([[r["i"], r["j"], r["k"], r["value"]] for r in rows], ["i", "j", "k", "value"])
        return _unsupported(fmt)

    return result, render, ok


def cmd_product(args) -> Rendered:
    _need(args, "n", "a", "b")
    weights = sorted(gset_product_weights(args.n, args.a, args.b))
    result = {"n": args.n, "a": args.a, "b": args.b, "weights": weights}

    def render(fmt: str) -> str:
        if fmt == "text":
            return " ".join(f"G_{args.n}({c})" for c in weights) + "\n"
        return _unsupported(fmt)

    return result, render, True


def cmd_autocorr(args) -> Rendered:
    if not args.word:
        raise UsageError("autocorr takes one word")
    x = parse_word(args.word[0])
    v = autocorr_vector(x)
    result = {
        "n": x.n,
        "word": render_word(x),
        "values": list(v.values),
        "two_level": v.is_two_level(),
        "divisibility": check_divisibility(x),
    }

    def render(fmt: str) -> str:
        if fmt == "text":
            return " ".join(str(p) for p in v.values) + "\n"
        if fmt == "csv":
            return _csv([[k, p] for k, p in enumerate(v.values)], ["k", "value"])
        return _unsupported(fmt)

    return result, render, True


def cmd_search(args) -> Rendered:
    _need(args, "n")
    cap = min(MAX_SEARCH_N, args.max_n) if args.max_n is not None else MAX_SEARCH_N
    classes = [c.to_json() for c in search_two_level(args.n, max_n=cap)]
    result = {"n": args.n, "classes": classes}
    fields = ["n", "representative", "weight", "offpeak", "orbit_size"]

    def render(fmt: str) -> str:
        if fmt == "csv":
            return _csv([[c[f] for f in fields] for c in classes], fields)
        if fmt == "text":
            return "".join(
                f"{c['representative']} weight={c['weight']} offpeak={c['offpeak']} orbit={c['orbit_size']}\n"
                for c in classes
            )
        return _unsupported(fmt)

    return result, render, True


def _random_code_agreement(n: int, seed: int, samples: int) -> TheoremResult:
    """Rank elimination and subset enumeration agree on random candidate sets."""
    rng = random.Random(seed)
    for _ in range(samples):
        size = rng.randint(1, n + 1)
        masks = rng.sample(range(1, 1 << n), min(size, (1 << n) - 1))
        code = CodeSet(n, tuple(Word(n, m) for m in masks))
        if (code_witness(code, "rank") is None) != (code_witness(code, "subsets") is None):
            return TheoremResult("code_oracle_agreement", n, "fail", ",".join(_words(n, masks)))
    return TheoremResult("code_oracle_agreement", n, "pass")


def cmd_verify(args) -> Rendered:
    _need(args, "n")
    _check_cap(args, args.n)
    only = args.theorem or None
    if only:
        unknown = sorted(set(only) - set(theorem_ids()) - {"code_oracle_agreement"})
        if unknown:
            raise UsageError(f"unknown theorem id(s): {', '.join(unknown)}")
    results = theorem_suite(args.n, only)
    if not only or "code_oracle_agreement" in only:
        results.append(_random_code_agreement(args.n, args.seed, args.samples))
    ok = all(r.passed for r in results)
    result = {"n": args.n, "passed": ok, "results": [r.to_json() for r in results]}

    def render(fmt: str) -> str:
        if fmt == "text":
            lines = [f"{r.status.upper():4} {r.theorem_id}" + (f"  [{r.witness}]" if r.witness else "") for r in results]
            return "\n".join(lines) + "\n"
        if fmt == "csv":
            return _csv([[r.theorem_id, r.n, r.status, r.witness or ""] for r in results],
                        ["theorem_id", "n", "status", "witness"])
        return _unsupported(fmt)

    return result, render, ok


def cmd_census(args) -> Rendered:
    _need(args, "n")
    census = count_pt_free_subgroups(args.n, enumerate_all=args.n <= CENSUS_ENUM_MAX)
    result = census.to_json()
    result["enumerated"] = args.n <= CENSUS_ENUM_MAX
    if args.list_subgroups and census.subgroups:
        result["subgroups"] = [_words(args.n, g) for g in census.subgroups]

    def render(fmt: str) -> str:
        if fmt != "text":
            return _unsupported(fmt)
        lines = [f"formula {census.formula}"]
        if result["enumerated"]:
            lines += [f"constructions {census.constructions}", f"distinct subgroups {census.distinct_subgroups}"]
        for g in result.get("subgroups", []):
            lines.append(" ".join(g))
        return "\n".join(lines) + "\n"

    ok = not result["enumerated"] or census.formula == census.distinct_subgroups
    return result, render, ok


COMMANDS: dict[str, Callable] = {
    "partition": cmd_partition,
    "orbit": cmd_orbit,
    "code-check": cmd_code_check,
    "generate": cmd_generate,
    "construct": cmd_construct,
    "lattice": cmd_lattice,
    "lambda": cmd_lambda,
    "product": cmd_product,
    "autocorr": cmd_autocorr,
    "search-2level": cmd_search,
    "verify": cmd_verify,
    "census": cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--a", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--group", choices=sorted(GROUP_ALIASES), default="sn")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int, dest="max_n", help="enumeration cap (default: SCHURLAB_MAX_N or 24)")

    parser = _Parser(prog="schurlab", description="Schur rings over Z_2^n and their named S-subgroups.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True
    helps = {
        "partition": "orbits of a group acting on Z_2^n",
        "orbit": "orbit of one word",
        "code-check": "test unique factorization of a word set",
        "generate": "subgroup generated by words",
        "construct": "named S-subgroups: gd, inv, sym",
        "lattice": "divisor lattice of the G_d(n)",
        "lambda": "structure constants of the weight-class S-ring",
        "product": "weight classes in G_n(a) G_n(b)",
        "autocorr": "periodic autocorrelation vector",
        "search-2level": "words with two-level autocorrelation",
        "verify": "run the theorem checks at one length",
        "census": "count P(T)-free subgroups",
    }
    ps = {name: sub.add_parser(name, parents=[common], help=h) for name, h in helps.items()}
    for name in ("orbit", "code-check", "generate", "autocorr"):
        ps[name].add_argument("word", nargs="*", help="words of '+' and '-'")
    ps["code-check"].add_argument("--method", choices=("rank", "subsets"), default="rank")
    ps["construct"].add_argument("family", choices=("gd", "inv", "sym"))
    ps["lambda"].add_argument("--i", type=int)
    ps["lambda"].add_argument("--j", type=int)
    ps["lambda"].add_argument("--k", type=int)
    ps["lambda"].add_argument("--check", action="store_true", help="compare with brute-force counts")
    ps["product"].add_argument("--b", type=int)
    ps["verify"].add_argument("--theorem", action="append", help="restrict to these check ids")
    ps["verify"].add_argument("--samples", type=int, default=200, help="random code candidates")
    ps["census"].add_argument("--list-subgroups", action="store_true")
    return parser


def _split_words(argv: list[str]) -> tuple[list[str], list[str]]:
    """Separate +/- word tokens, which argparse would mistake for options when they start with '-'."""
    rest, words = [], []
    for tok in argv:
        if tok != "--" and tok and set(tok) <= set("+-−"):
            words.append(tok)
        else:
            rest.append(tok)
    return rest, words


def run_cli(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv, words = _split_words(sys.argv[1:] if argv is None else list(argv))
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if hasattr(args, "word"):
        args.word = words + args.word
    elif words:
        err.write(f"schurlab {args.command}: usage error: unexpected word arguments\n")
        return 1
    if args.max_n is None and os.environ.get("SCHURLAB_MAX_N"):
        args.max_n = partition_cap()
    try:
        result, render, ok = COMMANDS[args.command](args)
        if args.format == "json":
            text = json.dumps({"command": args.command, "seed": args.seed, "result": result}, indent=2) + "\n"
        else:
            text = render(args.format)
    except UsageError as exc:
        err.write(f"schurlab {args.command}: usage error: {exc}\n")
        return 1
    except CapExceeded as exc:
        err.write(f"schurlab {args.command}: cap exceeded: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"schurlab {args.command}: invalid input: {exc}\n")
        return 1
    out.write(text)
    if not ok:
        return 2 if args.command == "verify" else 1
    return 0


def main(argv: list[str] | None = None) -> int:
    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())
