"""
Command-line interface.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage or
domain error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .arrangement import (
    enumerate_regions,
    inversion_arrangement,
    region_poincare,
    region_poset,
    verify_special_F4,
    verify_special_bn,
)
from .bruhat import lower_interval, poincare, weak_order_poset
from .errors import BruhatLabError, ConfigurationError, DomainError, ResourceError
from .known_lists import REFERENCE_LISTS
from .mlattice import (
    mn_label,
    mn_palindromic,
    mn_palindromic_closed_form,
    mn_poset,
    verify_iso_bn,
    verify_iso_dn,
)
from .parabolic import (
    SIDES,
    Tag,
    classify_quotient_element,
    complement,
    get_quotient,
    match_palindromic_list,
    removed_leaf,
    special_case_match,
)
from .poly import IntPolynomial
from .rootsystem import RootSystem, parse_group
from .weyl import DEFAULT_GROUP_CAP, canonical_word, enumerate_group, from_word, word_string

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# default group-size cap for the exhaustive scan; the scan is quadratic in |W|
VERIFY_MAIN_CAP = 4000


def parse_word(rs: RootSystem, text: str) -> list:
    """Whitespace- or comma-separated node labels; an empty string is the identity."""
    tokens = text.replace(",", " ").split()
    return [rs.parse_label(t) for t in tokens]


def _emit(args, obj: dict, text: str) -> None:
    if args.json:
        obj = {"version": __version__, **obj}
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# poincare / regions

def cmd_poincare(args) -> int:
    rs = parse_group(args.group)
    w = from_word(rs, parse_word(rs, args.word))
    p = poincare(w, cap=args.cap or 10**6)
    _emit(args, {"group": rs.name, "word": list(canonical_word(w)), "poly": p.to_list(),
                 "palindromic": p.is_palindromic(), "length": w.length},
          "\n".join([
              ",".join(map(str, p.coeffs)),
              f"P(q) = {p}",
              f"length {w.length}, palindromic: {'yes' if p.is_palindromic() else 'no'}",
          ]))
    return EXIT_OK


def cmd_regions(args) -> int:
    rs = parse_group(args.group)
    w = from_word(rs, parse_word(rs, args.word))
    p = region_poincare(w, cap=args.cap or DEFAULT_GROUP_CAP)
    _emit(args, {"group": rs.name, "word": list(canonical_word(w)), "poly": p.to_list(),
                 "regions": p(1), "palindromic": p.is_palindromic(), "length": w.length},
          "\n".join([
              ",".join(map(str, p.coeffs)),
              f"R(q) = {p}",
              f"{p(1)} regions, {w.length} hyperplanes",
          ]))
    return EXIT_OK


# exhaustive scan: palindromic P_w against R_w

@dataclass
class VerificationReport:
    scope: str
    elements: int = 0
    rationally_smooth: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {"scope": self.scope, "elements": self.elements,
                "rationally_smooth": self.rationally_smooth, "failures": self.failures,
                "counterexamples": self.counterexamples}


def _scan_range(group: str, start: int, stop: int) -> list[tuple[int, tuple, tuple]]:
    rs = parse_group(group)
    G = enumerate_group(rs)
    return [(n, poincare(G[n]).coeffs, region_poincare(G[n]).coeffs) for n in range(start, stop)]


def verify_main(rs: RootSystem, cap: int = VERIFY_MAIN_CAP, threads: int = 1) -> VerificationReport:
    """For every ``w``: ``P_w`` palindromic iff ``P_w = R_w``, and ``R_w`` palindromic."""
    order = rs.group_order()
    if order > cap:
        raise ResourceError(
            f"|W({rs.name})| = {order} exceeds the cap {cap}; feasible groups include "
            "A1-A6, B2-B5, D4-D5, G2, F4 (raise --cap to try larger ones)", cap)
    t0 = time.perf_counter()
    report = VerificationReport(scope=f"all {order} elements of W({rs.name})")
    if threads > 1 and order > 200:
        step = -(-order // (threads * 4))
        bounds = [(a, min(a + step, order)) for a in range(0, order, step)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(_scan_range, [rs.name] * len(bounds),
                              [a for a, _ in bounds], [b for _, b in bounds])
            results = [r for chunk in chunks for r in chunk]
    else:
        results = _scan_range(rs.name, 0, order)
    G = enumerate_group(rs)
    for n, pc, rc in sorted(results):
        P, R = IntPolynomial(pc), IntPolynomial(rc)
        smooth = P.is_palindromic()
        report.elements += 1
        report.rationally_smooth += smooth
        if smooth != (P == R) or not R.is_palindromic():
            report.failures += 1
            report.counterexamples.append(
                {"word": list(canonical_word(G[n])), "P": P.to_list(), "R": R.to_list()})
    report.wall_time = time.perf_counter() - t0
    return report


def cmd_verify_main(args) -> int:
    rs = parse_group(args.group)
    rep = verify_main(rs, cap=args.cap or VERIFY_MAIN_CAP, threads=args.threads)
    lines = [rep.scope,
             f"rationally smooth: {rep.rationally_smooth}",
             f"failures: {rep.failures}"]
    lines += [f"  counterexample {word_string(c['word'])}: P={c['P']} R={c['R']}"
              for c in rep.counterexamples]
    if args.timing:
        lines.append(f"wall time: {rep.wall_time:.2f}s")
    obj = rep.as_dict()
    if args.timing:
        obj["wall_time"] = rep.wall_time
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


# quotients

def cmd_quotient(args) -> int:
    rs = parse_group(args.group)
    node = rs.parse_label(args.node)
    J = complement(rs, [node])
    removed_leaf(rs, J)
    q = get_quotient(rs, J, args.side, cap=args.cap or 10**5)
    entries = []
    for n, v in enumerate(q.elements):
        if not q.is_palindromic_at(n) or n == 0 or n == len(q) - 1:
            continue
        tag = classify_quotient_element(v, J, args.side)
        entry = {"word": list(canonical_word(v)), "length": v.length, "tag": str(tag)}
        if tag in (Tag.SPECIAL_F4, Tag.SPECIAL_BN):
            entry["orientation"] = special_case_match(v, J)[1]
        entries.append(entry)
    obj = {"group": rs.name, "removed": node, "side": args.side, "size": len(q),
           "rank_sizes": q.rank_sizes(), "chain": q.is_chain(),
           "nontrivial_palindromic": entries}
    reference = REFERENCE_LISTS.get((rs.name, node))
    if reference is not None:
        m = match_palindromic_list(rs, J, reference)
        obj["reference_list_side"] = m.side
    lines = [f"{rs.name} / W_J with node {node} removed ({args.side}): {len(q)} elements",
             f"rank sizes: {' '.join(map(str, q.rank_sizes()))}"
             + ("  (chain)" if q.is_chain() else ""),
             f"nontrivial palindromic elements: {len(entries)}"]
    for e in entries:
        extra = f" [{e['orientation']}]" if "orientation" in e else ""
        lines.append(f"  {word_string(e['word']):<40} {e['tag']}{extra}")
    if reference is not None:
        side = obj["reference_list_side"]
        lines.append(f"reference list matches: {side if side else 'NO'}")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_mlattice(args) -> int:
    n = args.n
    pal = mn_palindromic(n)
    closed = mn_palindromic_closed_form(n)
    P = mn_poset(n)
    ordered = sorted(pal, key=lambda A: (sum(A), A))
    obj = {"n": n, "size": len(P), "rank_sizes": P.rank_sizes(),
           "palindromic": [list(A) for A in ordered], "matches_closed_form": pal == closed}
    text = "\n".join([
        f"M({n}): {len(P)} elements, rank sizes {' '.join(map(str, P.rank_sizes()))}",
        f"palindromic elements ({len(pal)}): {' '.join(mn_label(A) for A in ordered)}",
        f"equal to empty set, singletons and initial segments: {'yes' if pal == closed else 'NO'}",
    ])
    _emit(args, obj, text)
    return EXIT_OK if pal == closed else EXIT_FAIL


def cmd_verify_iso(args) -> int:
    rs = parse_group(args.group)
    node = rs.parse_label(args.node)
    t, n = rs.datum.type_label, rs.rank
    if t == "B" and node == 0:
        target, ok = n, verify_iso_bn(n)
    elif t == "D" and node in (0, 1):
        target, ok = n - 1, verify_iso_dn(n, node)
    else:
        raise DomainError("verify-iso supports B_n with node 0 and D_n with node 0 or 1")
    obj = {"group": rs.name, "removed": node, "target": f"M({target})", "isomorphic": ok}
    _emit(args, obj, f"{rs.name} / node {node} {'is' if ok else 'is NOT'} isomorphic to M({target})")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_special(args) -> int:
    if args.case == "f4":
        rep = verify_special_F4()
    else:
        rep = verify_special_bn(args.n)
    obj = rep.as_dict()
    lines = [f"{rep.name}: w = u v, u = {word_string(canonical_word(rep.u))}, "
             f"v = {word_string(canonical_word(rep.v))}",
             f"arrangement taken for {rep.arrangement_element}",
             f"P_w = {rep.P_w}", f"R_w = {rep.R_w}",
             f"R_w / R_u = {rep.R_ratio}", f"P_w / P_u = {rep.P_ratio}"]
    lines += [f"{'ok  ' if v else 'FAIL'} {k}" for k, v in rep.checks.items()]
    lines += [f"{'holds' if v else 'fails'}: {k}" for k, v in rep.displayed_factors.items()]
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


# export

def _export_object(args):
    kind, rest = args.kind, args.args
    need = {"mlattice": 1, "quotient": 2, "interval": 2, "regions": 2, "weak": 1}
    if kind not in need:
        raise DomainError(f"unknown export object {kind!r}; choose from {', '.join(need)}")
    if len(rest) != need[kind]:
        raise DomainError(f"export {kind} takes {need[kind]} argument(s)")
    if kind == "mlattice":
        return mn_poset(int(rest[0])), mn_label
    rs = parse_group(rest[0])
    welabel = lambda w: word_string(canonical_word(w))  # noqa: E731
    if kind == "weak":
        return weak_order_poset(enumerate_group(rs, args.cap or DEFAULT_GROUP_CAP), "right"), welabel
    if kind == "quotient":
        node = rs.parse_label(rest[1])
        return get_quotient(rs, complement(rs, [node]), args.side).poset, welabel
    w = from_word(rs, parse_word(rs, rest[1]))
    if kind == "interval":
        return lower_interval(w), welabel
    arr = inversion_arrangement(w)

    def sign_label(m):
        return "".join("-" if m >> k & 1 else "+" for k in arr.normals) or "()"
    return region_poset(arr), sign_label


def cmd_export(args) -> int:
    poset, label = _export_object(args)
    if args.format == "dot":
        out = poset.to_dot(label, name=args.kind)
    elif args.format == "json":
        out = poset.to_json(label)
    else:
        raise DomainError(f"unknown format {args.format!r}")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap", type=int, default=None, help="override the enumeration cap")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for exhaustive scans (output does not depend on it)")

    p = argparse.ArgumentParser(prog="bruhatlab",
                                description="Bruhat intervals, inversion arrangements and "
                                            "parabolic quotients of finite Weyl groups.")
    p.add_argument("--version", action="version", version=f"bruhatlab {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("poincare", parents=[common], help="P_w(q) of the element with a given word")
    s.add_argument("group")
    s.add_argument("word")
    s.set_defaults(func=cmd_poincare)

    s = sub.add_parser("regions", parents=[common], help="R_w(q) of the inversion arrangement")
    s.add_argument("group")
    s.add_argument("word")
    s.set_defaults(func=cmd_regions)

    s = sub.add_parser("verify-main", parents=[common],
                       help="check P_w = R_w exactly for the palindromic P_w, over the whole group")
    s.add_argument("group")
    s.add_argument("--timing", action="store_true", help="also print wall time")
    s.set_defaults(func=cmd_verify_main)

    s = sub.add_parser("quotient", parents=[common], help="leaf quotient and its palindromic elements")
    s.add_argument("group")
    s.add_argument("node", help="the removed leaf")
    s.add_argument("side", nargs="?", default="rightfree", choices=SIDES)
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("mlattice", parents=[common], help="palindromic elements of M(n)")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_mlattice)

    s = sub.add_parser("verify-iso", parents=[common], help="B_n/A_{n-1} and D_n/A_{n-1} against M(n)")
    s.add_argument("group")
    s.add_argument("node")
    s.set_defaults(func=cmd_verify_iso)

    s = sub.add_parser("special", parents=[common], help="the explicit F4 and B_n factorizations")
    s.add_argument("case", choices=("f4", "bn"))
    s.add_argument("n", type=int, nargs="?", default=3)
    s.set_defaults(func=cmd_special)

    s = sub.add_parser("export", parents=[common], help="write a poset as DOT or JSON")
    s.add_argument("kind", help="mlattice N | quotient GROUP NODE | interval GROUP WORD | "
                                "regions GROUP WORD | weak GROUP")
    s.add_argument("args", nargs="*")
    s.add_argument("--format", default="dot", help="dot or json")
    s.add_argument("--side", default="rightfree", choices=SIDES)
    s.add_argument("-o", "--output", help="file to write (default: stdout)")
    s.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ResourceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConfigurationError, DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BruhatLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
