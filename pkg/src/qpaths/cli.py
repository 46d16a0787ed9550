"""
Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verdict failure, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Callable, Iterator

from qpaths.cyclic import MAPS, Orbit, check_sequence, close_square_path, get_map, orbit_of
from qpaths.distributions import (
    area_distribution,
    inversion_distribution,
    maj_distribution,
    subset_product_distribution,
    subset_sum_distribution,
    verify_theorem,
)
from qpaths.errors import InvalidArgumentError, PreconditionError, ResourceLimitError
from qpaths.gaussian import gauss_binom, verify_q_identities
from qpaths.intpoly import content_sums, has_equal_content
from qpaths.numbertheory import is_prime, verify_eq1
from qpaths.paths import (
    LatticePath,
    area,
    check_word,
    column_partition,
    exceedance,
    inversions,
    major_index,
    max_steps,
)
from qpaths.render import RenderSpec, csv_text, orbit_svg, path_svg, render_distribution, table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERDICT = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _render_spec(args, allow_svg: bool) -> RenderSpec:
    if args.format == "svg" and not allow_svg:
        raise UsageError("svg output is only available for the orbit and path commands")
    return RenderSpec(args.format, args.output)


# --- qbinom ------------------------------------------------------------------


def cmd_qbinom(args) -> int:
    if not 0 <= args.k <= args.n:
        raise UsageError(f"need 0 <= k <= n, got n={args.n}, k={args.k}")
    spec = _render_spec(args, allow_svg=False)
    f = gauss_binom(args.n, args.k)
    sums = equal = None
    if args.mod is not None:
        if args.mod < 1:
            raise UsageError("--mod must be >= 1")
        sums = content_sums(f, args.mod)
        equal = has_equal_content(f, args.mod)

    if spec.format == "json":
        doc = {"n": args.n, "k": args.k, "coefficients": [str(c) for c in f.coeffs]}
        if sums is not None:
            doc.update(modulus=args.mod, content_sums=[str(s) for s in sums], equal_content=equal)
        text = json.dumps(doc, indent=2) + "\n"
    elif spec.format == "csv":
        if sums is None:
            text = csv_text(["power", "coefficient"], list(enumerate(f.coeffs)))
        else:
            text = csv_text(["residue", "count"], list(enumerate(sums)))
    else:
        text = f"[{args.n} brack {args.k}]_q = {f}\ncoefficients: {','.join(map(str, f.coeffs))}\n"
        if sums is not None:
            text += f"content sums mod {args.mod}: {','.join(map(str, sums))}\n"
            text += f"equal content mod {args.mod} ([{args.mod}]_q divides): {str(equal).lower()}\n"
    spec.write(text)
    return EXIT_OK


# --- dist --------------------------------------------------------------------


def cmd_dist(args) -> int:
    spec = _render_spec(args, allow_svg=False)
    params = args.params
    kind = args.kind

    def need(count: int, names: str) -> list[int]:
        if len(params) != count:
            raise UsageError(f"dist {kind} takes {names}")
        return params

    def need_mod() -> int:
        if args.mod is None or args.mod < 1:
            raise UsageError(f"dist {kind} needs --mod M with M >= 1")
        return args.mod

    if kind == "area":
        w, h = need(2, "WIDTH HEIGHT")
        dist = area_distribution(w, h, need_mod(), args.mode)
    elif kind == "sum":
        n, k = need(2, "N K (k-subsets of 1..N)")
        dist = subset_sum_distribution(n, k, need_mod())
    elif kind == "product":
        p, l = need(2, "P L (l-subsets of 1..P-1)")
        dist = subset_product_distribution(p, l, diagnostic=args.diagnostic)
    elif kind == "maj":
        (n,) = need(1, "N (even words of length 2N)")
        dist = maj_distribution(n, need_mod())
    elif kind == "inv":
        (n,) = need(1, "N (even words of length 2N)")
        dist = inversion_distribution(n, need_mod())
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown kind {kind}")

    spec.write(render_distribution(dist, spec.format))
    if args.expect_uniform and not dist.uniform():
        return EXIT_VERDICT
    return EXIT_OK


# --- orbit / path ------------------------------------------------------------


def _parse_start(map_name: str, text: str, n: int | None):
    if map_name == "phi-word":
        return check_word(text.strip())
    if map_name == "phi-seq":
        try:
            seq = [int(t) for t in text.replace(" ", "").split(",") if t]
        except ValueError:
            raise UsageError(f"sequence must be comma-separated integers, got {text!r}") from None
        return check_sequence(seq, n)
    path = LatticePath.parse(text)
    if map_name == "catalan" and path.width == path.height:
        path = close_square_path(path)
    return path


def _element_text(e) -> str:
    if isinstance(e, tuple):
        return ",".join(map(str, e))
    return str(e)


def cmd_orbit(args) -> int:
    spec = _render_spec(args, allow_svg=True)
    cmap = get_map(args.map)
    start = _parse_start(args.map, args.start, args.n)
    orbit: Orbit = orbit_of(start, args.map)
    m = orbit.modulus
    deltas = orbit.deltas
    rows = [
        [i, _element_text(e), v, v % m, f"{d:+d}", f"{d % m:+d}"]
        for i, (e, v, d) in enumerate(zip(orbit.elements, orbit.statistic_values, deltas))
    ]
    headers = ["step", "element", cmap.statistic_name, f"mod {m}", "delta", f"delta mod {m}"]
    if spec.format == "svg":
        text = orbit_svg(orbit, cmap.statistic_name)
    elif spec.format == "json":
        doc = {
            "map": args.map,
            "modulus": m,
            "length": len(orbit),
            "statistic": cmap.statistic_name,
            "elements": [_element_text(e) for e in orbit.elements],
            "values": orbit.statistic_values,
            "deltas": deltas,
            "distinct_residues": orbit.has_distinct_residues(),
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif spec.format == "csv":
        text = csv_text(headers, rows)
    else:
        text = table(headers, rows)
        text += f"orbit length {len(orbit)}, residues mod {m} distinct: {str(orbit.has_distinct_residues()).lower()}\n"
    spec.write(text)
    return EXIT_OK


def cmd_path(args) -> int:
    spec = _render_spec(args, allow_svg=True)
    path = LatticePath.parse(args.path)
    stats = {
        "steps": path.steps,
        "word": path.word,
        "width": path.width,
        "height": path.height,
        "area": area(path),
        "inversions": inversions(path.word),
        "major_index": major_index(path.word),
        "column_partition": ",".join(map(str, column_partition(path))),
    }
    if path.width == path.height:
        stats["exceedance"] = exceedance(path)
    if spec.format == "svg":
        text = path_svg(path, f"area {stats['area']}")
    elif spec.format == "json":
        text = json.dumps(stats, indent=2) + "\n"
    elif spec.format == "csv":
        text = csv_text(["statistic", "value"], list(stats.items()))
    else:
        text = table(["statistic", "value"], [list(kv) for kv in stats.items()])
    spec.write(text)
    return EXIT_OK


# --- verify ------------------------------------------------------------------

SCOPES = ("all", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "qids", "eq1")


def _theorem_mode(n_steps: int, requested: str) -> str:
    if requested != "auto":
        return requested
    return "oracle" if n_steps <= max_steps() else "poly"


def _checks(scope: str, max_n: int, mode: str) -> Iterator[tuple[str, Callable[[], bool]]]:
    """Yield (label, thunk) pairs; a thunk returns a bool or (bool, detail)."""

    def theorem(t, mode_for, **kw):
        def run():
            v = verify_theorem(t, mode=mode_for, **kw)
            if v.passed:
                return True, ""
            counts = ",".join(map(str, v.distribution.counts))
            return False, f"counts {counts}, expected {v.expected_count} each"

        return run

    if scope in ("t1", "all"):
        for n in range(1, max_n + 1):
            yield f"t1 n={n} (mod {2 * n - 1})", theorem(1, _theorem_mode(2 * n, mode), n=n)
    if scope in ("t2", "all"):
        for n in range(1, max_n + 1):
            yield f"t2 n={n} (mod {2 * n - 1})", theorem(2, "oracle", n=n)
    if scope in ("t3", "all"):
        for n in range(1, max_n + 1):
            yield f"t3 n={n} (mod {2 * n - 1})", theorem(3, "oracle", n=n)
    if scope in ("t4", "all"):
        for n in range(2, max_n + 1):
            for k in range(1, n):
                if math.gcd(n, k) == 1:
                    yield f"t4 n={n} k={k} (mod {n})", theorem(4, _theorem_mode(n, mode), n=n, k=k)
    if scope in ("t5", "all"):
        for p in range(2, max_n + 1):
            if not is_prime(p):
                continue
            for l in range(1, p):
                if math.gcd(l, p - 1) == 1:
                    yield f"t5 p={p} l={l}", theorem(5, "oracle", p=p, l=l)
    if scope in ("t6", "all"):
        for n in range(2, max_n + 1):
            for k in range(1, n):
                g = math.gcd(n, k)
                yield f"t6 n={n} k={k} (mod {n // g})", theorem(6, _theorem_mode(n, mode), n=n, k=k)
    if scope in ("t7", "all"):
        for n in range(1, max_n + 1):
            yield f"t7 n={n} (mod {n + 1})", theorem(7, _theorem_mode(2 * n, mode), n=n)
    if scope in ("qids", "all"):
        for n in range(1, max_n + 1):
            yield f"qids n={n}", lambda n=n: verify_q_identities(n).all_hold
    if scope in ("eq1", "all"):
        for n in range(1, max_n + 1):
            yield f"eq1 n={n}", lambda n=n: verify_eq1(n)


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    passed = failed = limited = 0
    out = []
    for label, check in _checks(args.scope, args.max_n, args.mode):
        try:
            result = check()
        except ResourceLimitError as exc:
            limited += 1
            out.append(f"LIMIT {label}: {exc}")
            continue
        ok, detail = result if isinstance(result, tuple) else (result, "")
        if ok:
            passed += 1
            out.append(f"PASS  {label}")
        else:
            failed += 1
            out.append(f"FAIL  {label}" + (f": {detail}" if detail else ""))
    out.append(f"{passed} passed, {failed} failed, {limited} skipped at resource limit")
    RenderSpec("table", args.output).write("\n".join(out) + "\n")
    if failed:
        return EXIT_VERDICT
    if limited:
        return EXIT_RESOURCE
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qpaths", description="Lattice-path area partitions and Gaussian binomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def output_opts(p, formats):
        p.add_argument("--format", choices=formats, default="table")
        p.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")

    p = sub.add_parser("qbinom", help="Gaussian binomial coefficients and content sums")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--mod", type=int, default=None, help="report content sums modulo M")
    output_opts(p, ["table", "json", "csv"])
    p.set_defaults(func=cmd_qbinom)

    p = sub.add_parser("dist", help="residue-class distribution of a statistic")
    p.add_argument("kind", choices=["area", "sum", "product", "maj", "inv"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--mod", type=int, default=None)
    p.add_argument("--mode", choices=["oracle", "poly"], default="poly", help="area only")
    p.add_argument("--expect-uniform", action="store_true", help="exit 2 unless all classes are equal")
    p.add_argument("--diagnostic", action="store_true", help="product: allow gcd(l, p-1) > 1")
    output_opts(p, ["table", "json", "csv"])
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("orbit", help="trace the orbit of a cyclic map")
    p.add_argument("map", choices=sorted(MAPS))
    p.add_argument("start", help="E/N path, 0/1 word, or comma-separated sequence")
    p.add_argument("--n", type=int, default=None, help="phi-seq: sequence length")
    output_opts(p, ["table", "json", "csv", "svg"])
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("path", help="statistics of a single path")
    p.add_argument("path", help="E/N path or 0/1 word")
    output_opts(p, ["table", "json", "csv", "svg"])
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("verify", help="sweep the partition theorems and q-identities")
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--mode", choices=["auto", "oracle", "poly"], default="auto")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"qpaths: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, InvalidArgumentError, PreconditionError) as exc:
        print(f"qpaths: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
