"""Command-line front end: ``asprank <subcommand> [flags]``.

Exit codes are 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import covers, deform, refgraph, strata, suites
from .errors import (
    DeformationHypothesisError,
    FieldSizeError,
    InvalidParameters,
    NoSuitableSpecializationError,
    OracleError,
)
from .fieldarith import DEFAULT_MAX_FIELD_SIZE, GF, is_prime

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "dot", "text")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    max_field_size: int = DEFAULT_MAX_FIELD_SIZE
    max_genus_for_oracle: int = covers.DEFAULT_MAX_GENUS
    output_format: str = "text"

    def __post_init__(self):
        if self.max_field_size < 2 or self.max_genus_for_oracle < 0:
            raise UsageError("max_field_size must be >= 2 and max_genus_for_oracle >= 0")
        if self.output_format not in FORMATS:
            raise UsageError(f"output_format must be one of {', '.join(FORMATS)}")


def load_config(args: argparse.Namespace) -> Config:
    values = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        unknown = set(data) - set(Config.__dataclass_fields__)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(data)
    if args.max_field_size is not None:
        values["max_field_size"] = args.max_field_size
    if args.max_genus is not None:
        values["max_genus_for_oracle"] = args.max_genus
    if args.format is not None:
        values["output_format"] = args.format
    return Config(**values)


def table(headers: list[str], rows: list[list]) -> str:
    """Left-aligned ASCII table with a dashed rule under the header."""
    cells = [list(map(str, headers))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _no_dot(cmd: str, fmt: str) -> None:
    if fmt == "dot":
        raise UsageError(f"{cmd} has no DOT output; use --format json or text")


def cmd_enumerate(args, cfg: Config) -> tuple[str, int]:
    _no_dot("enumerate", cfg.output_format)
    parts = strata.enumerate_partitions(args.p, args.d, args.r)
    if cfg.output_format == "json":
        return dumps([list(E.parts) for E in parts]), EXIT_OK
    return "".join(f"{E}\n" for E in parts), EXIT_OK


def cmd_dims(args, cfg: Config) -> tuple[str, int]:
    _no_dot("dims", cfg.output_format)
    records = strata.stratum_records(args.p, args.d)
    if cfg.output_format == "json":
        return dumps([asdict(rec) for rec in records]), EXIT_OK
    rows = [[rec.s, suites.set_str(rec.partition), rec.dim_AS, rec.dim_cov, rec.N_E,
             suites.set_str(rec.closure_step) if rec.closure_step else "-"]
            for rec in records]
    head = f"p={args.p} d={args.d} g={records[0].g}\n" if records else ""
    return head + table(["s", "partition", "dim", "dim_cov", "N_E", "closure step"], rows), EXIT_OK


def cmd_graph(args, cfg: Config) -> tuple[str, int]:
    g = refgraph.build_graph(args.p, args.d)
    fmt = cfg.output_format
    if fmt == "dot":
        return g.to_dot(), EXIT_OK
    if fmt == "json":
        return dumps(g.to_dict()), EXIT_OK
    rows = [[suites.set_str(g.vertices[a].parts), suites.set_str(g.vertices[b].parts),
             f"{info.split[0]} -> {suites.set_str(info.split[1])}", info.edge_type,
             info.dim_delta, info.closure.value]
            for a, b, info in g.edges]
    head = f"p={args.p} d={args.d}: {len(g.vertices)} vertices, {len(g.edges)} edges\n"
    return head + table(["from", "to", "split", "type", "dim +", "closure"], rows), EXIT_OK


def cmd_irred(args, cfg: Config) -> tuple[str, int]:
    _no_dot("irred", cfg.output_format)
    ok, witnesses = strata.is_irreducible_AS(args.p, args.g)
    if cfg.output_format == "json":
        return dumps({"p": args.p, "g": args.g, "irreducible": ok,
                      "witnesses": [list(E.parts) for E in witnesses]}), EXIT_OK
    label = "witness" if len(witnesses) == 1 else "witnesses"
    return (f"irreducible: {'true' if ok else 'false'}; {label} "
            f"{', '.join(str(E) for E in witnesses)}\n"), EXIT_OK


def cmd_hyper(args, cfg: Config) -> tuple[str, int]:
    _no_dot("hyper", cfg.output_format)
    ss = [args.s] if args.s is not None else list(range(args.g + 1))
    rows = [(s, *strata.hyperelliptic_components(args.g, s)) for s in ss]
    if cfg.output_format == "json":
        return dumps([{"g": args.g, "s": s, "components": n, "dimension": dim}
                      for s, n, dim in rows]), EXIT_OK
    return table(["g", "s", "components", "dimension"],
                 [[args.g, s, n, dim] for s, n, dim in rows]), EXIT_OK


def analyze_cover(cover: covers.ASCover, cfg: Config) -> dict:
    rd = covers.ramification_data(cover)
    inv = covers.invariants(cover)
    places = [{"point": None if pl.point is None else pl.point.value, "lower_jump": pl.lower_jump}
              for pl in rd.places]
    out = {
        "field": [cover.field.p, cover.field.n],
        "modulus": list(cover.field.modulus),
        "f": repr(cover.f),
        "standard_form": repr(covers.standard_form(cover).f),
        "splitting_field": [rd.field.p, rd.field.n],
        "places": places,
        "partition": list(rd.partition.parts),
        "genus": inv.genus,
        "p_rank": inv.p_rank,
        "oracle": None,
    }
    if inv.genus > cfg.max_genus_for_oracle:
        out["oracle_skipped"] = f"genus {inv.genus} exceeds the oracle bound {cfg.max_genus_for_oracle}"
        return out
    try:
        z = covers.zeta_data(cover, cfg.max_genus_for_oracle, cfg.max_field_size)
    except FieldSizeError as exc:
        out["oracle_skipped"] = str(exc)
        return out
    except OracleError as exc:
        # the point counts are inconsistent with the computed genus
        out["oracle"] = {"p_rank": None, "counts": [], "L": [], "agrees": False, "error": str(exc)}
        return out
    out["oracle"] = {"p_rank": z.p_rank, "counts": list(z.counts), "L": list(z.L),
                     "agrees": z.p_rank == inv.p_rank and len(z.L) - 1 == 2 * inv.genus}
    return out


def cmd_analyze(args, cfg: Config) -> tuple[str, int]:
    _no_dot("analyze", cfg.output_format)
    try:
        cover = covers.read_cover(args.cover_file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.cover_file}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"{args.cover_file}: {exc}") from None
    info = analyze_cover(cover, cfg)
    oracle = info["oracle"]
    code = EXIT_FAILED if oracle is not None and not oracle["agrees"] else EXIT_OK
    if cfg.output_format == "json":
        return dumps(info), code
    place_text = ", ".join(("inf" if pl["point"] is None else str(pl["point"])) + f":{pl['lower_jump']}"
                           for pl in info["places"])
    lines = [
        f"field          GF({info['field'][0]}^{info['field'][1]}) modulus {info['modulus']}",
        f"f              {info['f']}",
        f"standard form  {info['standard_form']}",
        f"branch points  {place_text} (over GF({info['splitting_field'][0]}^{info['splitting_field'][1]}))",
        f"partition      {suites.set_str(info['partition'])}",
        f"genus          {info['genus']}",
        f"p-rank         {info['p_rank']} (branch points)",
    ]
    if oracle is None:
        lines.append(f"p-rank         skipped (zeta): {info['oracle_skipped']}")
    else:
        lines.append(f"p-rank         {oracle['p_rank']} (zeta)")
        lines.append(f"L(T)           {oracle['L']}")
        lines.append(f"agree          {'yes' if oracle['agrees'] else 'NO'}")
    return "\n".join(lines) + "\n", code


def _field_of_size(p: int, q: int | None, max_field_size: int):
    if q is None:
        return GF(p, max_size=max_field_size)
    n, m = 0, 1
    while m < q:
        m, n = m * p, n + 1
    if m != q or n == 0:
        raise UsageError(f"q = {q} is not a power of p = {p}")
    return GF(p, n, max_field_size)


def cmd_deform(args, cfg: Config) -> tuple[str, int]:
    _no_dot("deform", cfg.output_format)
    if not is_prime(args.p):
        raise UsageError(f"p = {args.p} is not prime")
    field = _field_of_size(args.p, args.q, cfg.max_field_size)
    rep = deform.verify_deformation(args.p, args.e1, args.e2, field,
                                    cfg.max_field_size, cfg.max_genus_for_oracle)
    code = EXIT_OK if rep.passed else EXIT_FAILED
    if cfg.output_format == "json":
        out = asdict(rep)
        out["passed"] = rep.passed
        return dumps(out), code
    fam = deform.make_family(args.p, args.e1, args.e2)
    rows = []
    for name, fib, t in (("special", rep.special, 0), ("generic", rep.generic, rep.t0)):
        rows.append([name, t, suites.set_str(fib.partition), fib.genus, fib.p_rank,
                     "-" if fib.oracle_p_rank is None else fib.oracle_p_rank])
    lines = [f"family  {fam}", f"field   GF({rep.field[0]}^{rep.field[1]})", ""]
    text = "\n".join(lines) + "\n" + table(["fibre", "t", "partition", "genus", "p-rank", "zeta p-rank"], rows)
    text += "\n" + "".join(f"{'PASS' if ok else 'FAIL'}  {name}\n" for name, ok in rep.checks.items())
    text += f"result: {'pass' if rep.passed else 'fail'}\n"
    return text, code


def cmd_verify(args, cfg: Config) -> tuple[str, int]:
    _no_dot("verify", cfg.output_format)
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(suites.run_suite, names))
    else:
        results = [suites.run_suite(n) for n in names]
    rows = [row for res in results for row in res]
    ok = all(r.passed for r in rows)
    code = EXIT_OK if ok else EXIT_FAILED
    if cfg.output_format == "json":
        return dumps({"suite": args.suite, "passed": ok, "checks": [asdict(r) for r in rows]}), code
    text = "".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + (f"  [{r.detail}]" if r.detail else "") + "\n"
                   for r in rows)
    failed = sum(not r.passed for r in rows)
    text += f"{len(rows) - failed}/{len(rows)} checks passed\n"
    return text, code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="output format (default text)")
    common.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
    common.add_argument("--dot", dest="format", action="store_const", const="dot", help="same as --format dot")
    common.add_argument("--config", help="JSON file with max_field_size, max_genus_for_oracle, output_format")
    common.add_argument("--max-field-size", type=int, default=None, help=f"largest field built (default {DEFAULT_MAX_FIELD_SIZE})")
    common.add_argument("--max-genus", type=int, default=None,
                        help=f"largest genus sent to the zeta oracle (default {covers.DEFAULT_MAX_GENUS})")

    parser = argparse.ArgumentParser(prog="asprank", description="p-rank strata of Artin-Schreier curves")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("enumerate", parents=[common], help="list the partitions of Omega_d or Omega_{d,r}")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-r", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dims", parents=[common], help="dimension table for Omega_d")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("graph", parents=[common], help="refinement graph G_d")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("irred", parents=[common], help="irreducibility of the genus g moduli space")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.set_defaults(func=cmd_irred)

    p = sub.add_parser("hyper", parents=[common], help="components of hyperelliptic 2-rank strata")
    p.add_argument("-g", type=int, required=True)
    p.add_argument("-s", type=int, default=None, help="2-rank (default: all)")
    p.set_defaults(func=cmd_hyper)

    p = sub.add_parser("analyze", parents=[common], help="invariants of a cover read from a file")
    p.add_argument("cover_file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("deform", parents=[common], help="check one member of the splitting family")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--e1", type=int, required=True)
    p.add_argument("--e2", type=int, required=True)
    p.add_argument("-q", type=int, default=None, help="size of the starting field (default p)")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*suites.SUITES, "all"])
    p.add_argument("--jobs", type=int, default=1, help="run suites in this many processes")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        text, code = args.func(args, cfg)
    except (UsageError, InvalidParameters, DeformationHypothesisError, FieldSizeError) as exc:
        print(f"asprank {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoSuitableSpecializationError as exc:
        print(f"asprank {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
