"""Command-line entry point.

Exit codes: 0 everything checked holds, 1 a violation or counterexample
was found, 2 bad input or an exhausted budget.  Generator subcommands
write graph6 by default so they pipe straight into the checkers.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from contextlib import contextmanager
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import families, reductions, trees, verification
from .bits import to_list
from .clutter import (
    ClutterError,
    ComplexityReport,
    clutter_complexity,
    fmt_fraction,
    format_clutter_text,
    graph_complexity,
    matching_complexity,
    parse_clutter_text,
)
from .config import Budget, BudgetExceeded, get_budget, set_budget
from .graph import (
    Graph,
    GraphError,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
)

FORMATS = ("json", "tsv", "human")


class InputError(Exception):
    """Anything that should end the run with exit code 2."""


@dataclass(frozen=True)
class CliConfig:
    command: str
    fmt: str
    budget: Budget
    seed: int
    source: Optional[str]


# --------------------------------------------------------------------------
# input and output helpers
# --------------------------------------------------------------------------

def _read_source(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _looks_like_graph6(lines: list[str]) -> bool:
    return all(" " not in ln and not ln.isdigit() for ln in lines)


def read_graphs(args) -> Iterator[tuple[str, Graph]]:
    """``(label, graph)`` pairs from ``--graph6`` words, a file or stdin.

    Input text is either one graph6 word per line or a single edge list
    (first line ``n``, then ``u v`` per line).
    """
    if getattr(args, "graph6", None):
        for code in args.graph6:
            yield code, _parse6(code, 1)
        return
    text = _read_source(getattr(args, "input", None))
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("no graph on input")
    if _looks_like_graph6(lines):
        for lineno, ln in enumerate(lines, 1):
            g = _parse6(ln, lineno)
            yield encode_graph6(g), g
        return
    try:
        g = parse_edge_list(text)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    yield encode_graph6(g), g


def _parse6(code: str, lineno: int) -> Graph:
    try:
        return parse_graph6(code)
    except GraphError as exc:
        raise InputError(f"line {lineno}: {exc}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def _tsv(*cols) -> None:
    sys.stdout.write("\t".join("" if c is None else str(c) for c in cols) + "\n")


def _emit_graph(g: Graph, fmt: str, extra: Optional[dict] = None) -> None:
    if fmt == "json":
        _emit({"graph6": encode_graph6(g), "n": g.n, "m": g.m, **(extra or {})})
    elif fmt == "human":
        sys.stdout.write(format_edge_list(g))
        for k, v in (extra or {}).items():
            sys.stdout.write(f"# {k}: {v}\n")
    else:
        sys.stdout.write(encode_graph6(g) + "\n")


@contextmanager
def _time_limit(seconds: Optional[float]):
    if not seconds or not hasattr(signal, "SIGALRM"):
        yield
        return

    def on_alarm(signum, frame):
        raise BudgetExceeded(f"time limit of {seconds}s exceeded")

    old = signal.signal(signal.SIGALRM, on_alarm)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def _print_complexity(label: str, rep: ComplexityReport, fmt: str) -> None:
    if fmt == "json":
        _emit({"input": label, **rep.to_json()})
    elif fmt == "tsv":
        best = rep.per_edge[rep.argmax]
        _tsv(label, fmt_fraction(rep.c), rep.edge_count,
             json.dumps(rep._label(rep.clutter.edges[rep.argmax])), json.dumps(rep._label(best.min_set)))
    else:
        best = rep.per_edge[rep.argmax]
        print(f"{label}: c = {fmt_fraction(rep.c)} over {rep.edge_count} edges")
        print(f"  argmax edge {rep._label(rep.clutter.edges[rep.argmax])}"
              f" recognized by {rep._label(best.min_set)}")


def cmd_complexity(args) -> int:
    if args.clutter_file:
        try:
            l = parse_clutter_text(_read_source(args.clutter_file))
            rep = clutter_complexity(l)
        except ClutterError as exc:
            raise InputError(str(exc)) from None
        _print_complexity(args.clutter_file, rep, args.format)
        return 0
    for label, g in read_graphs(args):
        try:
            rep = matching_complexity(g) if args.matching else graph_complexity(g)
        except ClutterError as exc:
            raise InputError(f"{label}: {exc}") from None
        _print_complexity(label, rep, args.format)
    return 0


def cmd_label_tree(args) -> int:
    for label, g in read_graphs(args):
        try:
            lab = trees.label_tree(g)
        except trees.NotATreeError as exc:
            raise InputError(f"{label}: {exc}") from None
        nec = trees.check_necessary_condition(g, lab)
        if args.format == "json":
            _emit({"input": label, "passes": lab.passes, "vertices": lab.to_json(),
                   "necessary_condition": nec.to_json()})
        elif args.format == "tsv":
            for row in lab.to_json():
                _tsv(label, row["vertex"], ",".join(row["labels"]), row["step"], int(row["pure_delta"]))
        else:
            print(f"{label}: {lab.passes} passes, necessary condition "
                  f"{'holds' if nec.holds else 'fails'}")
            for row in lab.to_json():
                print(f"  {row['vertex']}: {' '.join(row['labels']) or '-'}"
                      f"{' (pure delta)' if row['pure_delta'] else ''}")
    return 0


def cmd_construct(args) -> int:
    status = 0
    for label, g in read_graphs(args):
        try:
            u, trace = trees.construct_full_complexity_mis(g, args.leaf)
            ok = True
        except (trees.NotATreeError, trees.ConstructionPreconditionError) as exc:
            raise InputError(f"{label}: {exc}") from None
        except trees.CertificateFailure as exc:
            u, trace, ok, status = exc.trace.u_set, exc.trace, False, 1
        if args.format == "json":
            _emit({"input": label, "leaf": args.leaf, "ok": ok, **trace.to_json()})
        elif args.format == "tsv":
            _tsv(label, args.leaf, int(ok), " ".join(map(str, to_list(u))))
        else:
            print(f"{label}: U = {to_list(u)} ({'verified' if ok else 'FAILED'})")
            print(f"  specific neighbours {to_list(trace.spec)}")
    return status


def _read_instance(args) -> reductions.SetCoverInstance:
    try:
        return reductions.parse_instance_text(_read_source(args.input))
    except reductions.InstanceError as exc:
        raise InputError(str(exc)) from None


def cmd_reduce(args) -> int:
    inst = _read_instance(args)
    if args.which in ("problem1", "problem2"):
        out = (reductions.build_problem1_graph(inst) if args.which == "problem1"
               else reductions.build_problem2_graph(inst, args.multiplicity))
        _emit_graph(out.graph, args.format, {"distinguished_mis": to_list(out.distinguished_mis),
                                             "multiplicity": out.multiplicity})
        return 0
    fmt = "json" if args.format == "graph6" else args.format
    status = 0
    for which in ("problem1", "problem2"):
        rep = reductions.verify_reduction(inst, which, args.multiplicity)
        status |= 0 if rep.holds else 1
        if fmt == "json":
            _emit(rep.to_json())
        elif fmt == "tsv":
            _tsv(which, rep.l_min, rep.m, int(rep.holds), rep.details.get("c", ""))
        else:
            extra = f", c = {rep.details['c']}" if "c" in rep.details else ""
            print(f"{which}: l_min = {rep.l_min}, m = {rep.m}{extra}: "
                  f"{'holds' if rep.holds else 'FAILS'}")
    return status


def cmd_family(args) -> int:
    try:
        if args.family == "main-bound":
            g, spec = families.main_bound_extremal(args.n), families.main_bound_spec(args.n)
        elif args.family == "all-rationals":
            g, spec = families.all_rationals_graph(args.m, args.n), families.all_rationals_spec(args.m, args.n)
        elif args.family == "addendum":
            l, spec = families.addendum_clutter(args.k), families.addendum_spec(args.k)
            if args.format == "json":
                _emit({"clutter": [to_list(e) for e in l.edges], "n": l.n,
                       "expected": fmt_fraction(spec.expected), "formula": spec.formula})
            else:
                sys.stdout.write(format_clutter_text(l))
            return 0
        else:
            target = Fraction(args.target)
            w = families.rational_witness_search(target, args.max_vertices, args.random_trials,
                                                 args.seed, get_budget().time_limit)
            if w is None:
                if args.format == "json":
                    _emit({"target": fmt_fraction(target), "found": False})
                else:
                    sys.stderr.write(f"no witness for {fmt_fraction(target)} found\n")
                return 0
            _emit_graph(w.graph, args.format, {"target": fmt_fraction(target), "label": w.label,
                                               "rank": w.rank})
            return 0
    except (families.FamilyError, ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from None
    _emit_graph(g, args.format, {"expected": fmt_fraction(spec.expected), "formula": spec.formula})
    return 0


def cmd_check(args) -> int:
    status = 0
    if args.what == "bound":
        if args.clutter_file:
            try:
                items = [(args.clutter_file, parse_clutter_text(_read_source(args.clutter_file)))]
            except ClutterError as exc:
                raise InputError(str(exc)) from None
        else:
            items = list(read_graphs(args))
        for label, obj in items:
            rep = verification.check_bound(obj, args.kind)
            status |= 1 if rep.violated else 0
            if args.format == "json":
                _emit({"input": label, **rep.to_json()})
            elif args.format == "tsv":
                _tsv(label, rep.kind, int(rep.applicable), rep.lhs and fmt_fraction(rep.lhs),
                     rep.rhs, rep.holds, rep.tight)
            else:
                verdict = "holds" if rep.holds else "fails"
                app = "" if rep.applicable else f" [not applicable: {rep.reason}]"
                lhs = "n/a" if rep.lhs is None else fmt_fraction(rep.lhs)
                print(f"{label}: {rep.kind}: {lhs} vs {rep.rhs}: {verdict}"
                      f"{' (tight)' if rep.tight else ''}{app}")
        return status
    for label, g in read_graphs(args):
        rep = verification.check_lemma(g, args.kind)
        status |= 0 if rep.passed else 1
        if args.format == "json":
            _emit({"input": label, **rep.to_json()})
        elif args.format == "tsv":
            _tsv(label, rep.kind, int(rep.premise_holds), int(rep.passed))
        else:
            print(f"{label}: {rep.kind}: premise {'holds' if rep.premise_holds else 'fails'}, "
                  f"{'pass' if rep.passed else 'FAIL'}")
            for c in rep.conclusions:
                print(f"  {'ok ' if c['passed'] else 'BAD'} {c['name']}"
                      + ("" if c["passed"] else f" {c['witnesses'][:3]}"))
    return status


def _scan_codes(args) -> Iterator[str]:
    if args.builtin:
        try:
            yield from verification.builtin_regular_codes(args.max_n)
        except BudgetExceeded as exc:
            raise InputError(str(exc)) from None
        return
    for ln in _read_source(args.input).splitlines():
        if ln.strip():
            yield ln.strip()


def cmd_scan(args) -> int:
    if args.bound:
        rep = verification.bound_scan(_scan_codes(args), args.bound)
    else:
        rep = verification.conjecture_scan(_scan_codes(args), args.jobs)
    if args.format == "json":
        _emit(rep.to_json())
    elif args.format == "tsv":
        for k, v in sorted(rep.tallies.items()):
            _tsv(k, v)
        for c in rep.counterexamples:
            _tsv("counterexample", c if isinstance(c, str) else json.dumps(c))
    else:
        print(f"scanned {rep.scanned} graphs in {rep.elapsed:.2f}s")
        for k, v in sorted(rep.tallies.items()):
            print(f"  {k}: {v}")
        print(f"  counterexamples: {len(rep.counterexamples)}")
        for c in rep.counterexamples:
            print(f"    {c}")
    return 1 if rep.counterexamples else 0


def cmd_report(args) -> int:
    status = 0
    for label, g in read_graphs(args):
        try:
            rep = verification.full_report(g)
        except ClutterError as exc:
            raise InputError(f"{label}: {exc}") from None
        bad = any(b["applicable"] and b["holds"] is False for b in rep["bounds"])
        bad |= any(not l["passed"] for l in rep["lemmas"])
        status |= int(bad)
        if args.format == "json":
            _emit(rep)
        elif args.format == "tsv":
            _tsv(label, rep["c_independent"], rep["c_matching"], int(not bad))
        else:
            print(f"{label}: c_independent = {rep['c_independent']}, c_matching = {rep['c_matching']}")
            for b in rep["bounds"]:
                if b["applicable"]:
                    print(f"  bound {b['kind']}: {b['lhs']} vs {b['rhs']}: "
                          f"{'holds' if b['holds'] else 'FAILS'}{' (tight)' if b['tight'] else ''}")
            for l in rep["lemmas"]:
                if l["premise_holds"]:
                    print(f"  lemma {l['kind']}: {'pass' if l['passed'] else 'FAIL'}")
    return status


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostic, exit 2
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--vertex-cap", type=int)
    common.add_argument("--enum-cap", type=int)
    common.add_argument("--time-limit", type=float)
    common.add_argument("--seed", type=int, default=0)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--graph6", action="append", metavar="CODE", help="graph6 word (repeatable)")
    graph_in.add_argument("--input", "-i", metavar="PATH", help="graph6 lines or edge list (default stdin)")

    p = _Parser(prog="clutter-complexity", description="Exact recognizing-set complexity toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("complexity", parents=[common, graph_in], help="c of a graph or clutter")
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--independent", action="store_true", help="maximal independent sets (default)")
    mode.add_argument("--matching", action="store_true", help="maximal matchings")
    mode.add_argument("--clutter-file", metavar="PATH", help="clutter text file")
    c.set_defaults(func=cmd_complexity)

    c = sub.add_parser("label-tree", parents=[common, graph_in], help="alpha/beta/gamma/delta labels")
    c.set_defaults(func=cmd_label_tree)

    c = sub.add_parser("construct-tree-mis", parents=[common, graph_in],
                       help="complexity-one maximal independent set through a leaf")
    c.add_argument("--leaf", type=int, required=True)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("reduce", parents=[common], help="Set Cover gadgets")
    c.add_argument("which", choices=("problem1", "problem2", "verify"))
    c.add_argument("--input", "-i", metavar="PATH", help="instance file (default stdin)")
    c.add_argument("--multiplicity", type=int, help="copies per element (default (n+m)^2)")
    c.set_defaults(func=cmd_reduce, default_format="graph6")

    c = sub.add_parser("family", parents=[common], help="extremal families and witness search")
    fam = c.add_subparsers(dest="family", required=True, parser_class=_Parser)
    f = fam.add_parser("main-bound", parents=[common])
    f.add_argument("n", type=int)
    f = fam.add_parser("all-rationals", parents=[common])
    f.add_argument("-m", type=int, required=True)
    f.add_argument("-n", type=int, required=True)
    f = fam.add_parser("addendum", parents=[common])
    f.add_argument("k", type=int)
    f = fam.add_parser("witness", parents=[common])
    f.add_argument("--target", required=True, help="rational p/q in [0, 1]")
    f.add_argument("--max-vertices", type=int, default=8)
    f.add_argument("--random-trials", type=int, default=200)
    c.set_defaults(func=cmd_family, default_format="graph6")

    c = sub.add_parser("check", parents=[common], help="single-graph bound or lemma check")
    chk = c.add_subparsers(dest="what", required=True, parser_class=_Parser)
    b = chk.add_parser("bound", parents=[common, graph_in])
    b.add_argument("kind", choices=verification.GRAPH_BOUNDS + verification.CLUTTER_BOUNDS)
    b.add_argument("--clutter-file", metavar="PATH")
    l = chk.add_parser("lemma", parents=[common, graph_in])
    l.add_argument("kind", choices=verification.LEMMAS)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("scan", parents=[common], help="batch scan of a graph6 stream")
    c.add_argument("--input", "-i", metavar="PATH", help="graph6 file (default stdin)")
    c.add_argument("--builtin", action="store_true", help="enumerate labeled regular graphs")
    c.add_argument("--max-n", type=int, default=7)
    c.add_argument("--bound", action="append", choices=verification.GRAPH_BOUNDS,
                   help="tally this bound instead of running the conjecture scan (repeatable)")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_scan)

    c = sub.add_parser("report", parents=[common, graph_in], help="everything about a graph")
    c.set_defaults(func=cmd_report)
    return p


def _config(args) -> CliConfig:
    budget = get_budget()
    if args.vertex_cap is not None:
        budget = replace(budget, vertex_cap=args.vertex_cap)
    if args.enum_cap is not None:
        budget = replace(budget, enum_cap=args.enum_cap)
    if args.time_limit is not None:
        budget = replace(budget, time_limit=args.time_limit)
    fmt = args.format or getattr(args, "default_format", "json")
    return CliConfig(args.command, fmt, budget, args.seed, getattr(args, "input", None))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    previous = get_budget()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        args.format = cfg.fmt
        set_budget(cfg.budget)
        with _time_limit(cfg.budget.time_limit):
            return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (BudgetExceeded, GraphError, ClutterError, reductions.InstanceError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    finally:
        set_budget(previous)


if __name__ == "__main__":
    sys.exit(main())
