"""Command-line front end: ``flagcoh <subcommand> --type A2 ...``.

Exit status is 0 on success, 2 on usage errors and 1 on domain errors
(for example a non-generic weight passed to ``generic-report``).
"""
from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys
from typing import Iterator

from . import charring, cohomology, jantzen, linkage, weyl
from .rootdata import CartanType, RootSystem, build_root_system

DEFAULT_CELL_CAP = 10**6
_WEIGHT_FLAGS = {"--wt", "--mu", "--lo", "--hi"}
_INT_LIST = re.compile(r"-?\d+(,-?\d+)*")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _weight(rs: RootSystem, text: str | None, flag: str = "--wt") -> tuple[int, ...]:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        coords = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None
    if len(coords) != rs.rank:
        raise UsageError(
            f"{flag} has {len(coords)} coordinates but type {rs.cartan_type} expects {rs.rank}"
        )
    return coords


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


# -- per-subcommand evaluation; each returns a JSON-ready object ------------------------


def _bott(rs, lam, args):
    ans = cohomology.bott(rs, lam)
    if ans.singular:
        return {"verdict": "singular"}
    out = {"verdict": "regular", "degree": ans.degree, "dominant": list(ans.dominant)}
    if args.witness:
        out["witness"] = str(ans.witness)
    return out


def _chi(rs, lam, args):
    return charring.chi(rs, lam).to_json(str(rs.cartan_type))


def _serre(rs, lam, args):
    _require(args, "i")
    wt, deg = cohomology.serre_dual(rs, lam, args.i)
    return {"wt": list(wt), "degree": deg}


def _h1(rs, lam, args):
    _require(args, "p")
    if args.top:
        return {"nonvanishing": cohomology.hN1_nonvanishing(rs, lam, args.p)}
    return {"nonvanishing": cohomology.h1_nonvanishing(rs, lam, args.p)}


def _dpi(rs, lam, args):
    _require(args, "p", "i")
    verdict = cohomology.dpi_lower_bound(rs, lam, args.i, args.p)
    if verdict.status == cohomology.UNKNOWN:
        status = cohomology.trivial_vanishing(rs, lam, args.i, args.p)
        verdict = cohomology.Verdict(status)
    return verdict.to_json()


def _linked(rs, lam, args):
    _require(args, "p", "mu")
    mu = _weight(rs, args.mu, "--mu")
    return {
        "linked": linkage.linked(rs, mu, lam, args.p),
        "normal_form": list(weyl.wp_normal_form(rs, lam, args.p)),
    }


def _slink(rs, lam, args):
    _require(args, "p")
    if args.down_set:
        return {
            "lambda": list(lam),
            "down_set": [
                {"wt": list(mu), "chain": chain.to_json(rs)}
                for mu, chain in linkage.sl_down_set(rs, lam, args.p)
            ],
        }
    _require(args, "mu")
    mu = _weight(rs, args.mu, "--mu")
    chain = linkage.strongly_linked(rs, mu, lam, args.p)
    out = {"mu": list(mu), "lambda": list(lam), "strongly_linked": chain is not None}
    if chain is not None:
        out["chain"] = chain.to_json(rs)
    return out


def _sumformula(rs, lam, args):
    _require(args, "p")
    if args.w is not None:
        _require(args, "n")
        w = weyl.weyl_element(rs, weyl.parse_word(args.w))
        res = jantzen.generic_sum(rs, lam, w, args.p, args.n, args.r_convention)
    else:
        res = jantzen.jantzen_sum_weyl(rs, lam, args.p)
    return res.to_json(rs, lam, args.p)


def _generic_report(rs, lam, args):
    _require(args, "p", "n", "w")
    w = weyl.weyl_element(rs, weyl.parse_word(args.w))
    return cohomology.generic_report(rs, lam, w, args.p, args.n).to_json()


def _steinberg(rs, args):
    _require(args, "p", "n")
    cohomology.PrimeContext(args.p, args.n)
    return charring.steinberg_character(rs, args.p, args.n).to_json(str(rs.cartan_type))


WEIGHT_OPS = {
    "chi": _chi,
    "bott": _bott,
    "serre": _serre,
    "h1": _h1,
    "dpi": _dpi,
    "linked": _linked,
    "slink": _slink,
    "sumformula": _sumformula,
    "generic-report": _generic_report,
}


def cell_cap() -> int:
    raw = os.environ.get("FLAGCOH_CELL_CAP")
    return int(raw) if raw else DEFAULT_CELL_CAP


def sweep(rs: RootSystem, args) -> Iterator[dict]:
    """One row per weight of the box lo..hi, in lexicographic order."""
    lo, hi = _weight(rs, args.lo, "--lo"), _weight(rs, args.hi, "--hi")
    sizes = [max(0, b - a + 1) for a, b in zip(lo, hi)]
    cells = 1
    for s in sizes:
        cells *= s
    if cells > cell_cap():
        raise UsageError(f"box has {cells} cells, above the cap of {cell_cap()} (FLAGCOH_CELL_CAP)")
    op = WEIGHT_OPS[args.op]
    for lam in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        try:
            row = op(rs, lam, args)
        except ValueError as exc:
            row = {"error": str(exc)}
        yield {"wt": list(lam), **row}


# -- rendering ---------------------------------------------------------------------------


def _render_text(obj) -> str:
    if isinstance(obj, dict) and "sum" in obj:
        obj = obj["sum"]
    if isinstance(obj, dict) and "terms" in obj:
        return "\n".join(
            f"{','.join(map(str, t['wt']))}:{t['mult']}" for t in obj["terms"]
        )
    if isinstance(obj, dict):
        return "\n".join(
            f"{k}: {v if isinstance(v, (str, int)) and not isinstance(v, bool) else _dumps(v)}"
            for k, v in obj.items()
        )
    return _dumps(obj)


def _render(obj, fmt: str) -> str:
    return _dumps(obj) if fmt == "json" else _render_text(obj)


# -- argument parsing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagcoh",
        description="Cohomology of line bundles on G/B: Bott, vanishing criteria, linkage, sum formulas.",
        epilog="Weights are comma-separated fundamental-weight coordinates, e.g. --wt 1,-2 "
        "(or --wt=-1,2). Weyl words are comma-separated 1-based simple reflections, e.g. --w 1,2,1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight=True):
        p.add_argument("--type", required=True, help="Cartan type such as A2, B2, G2, E8")
        if weight:
            p.add_argument("--wt", help="weight, e.g. --wt=-3 or --wt 1,-2")
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    def op_options(p):
        p.add_argument("--p", type=int, help="the characteristic (a prime)")
        p.add_argument("--n", type=int, help="Frobenius level n")
        p.add_argument("--i", type=int, help="cohomological degree")
        p.add_argument("--mu", help="second weight (the lower one for slink)")
        p.add_argument("--w", help="Weyl group element as a reduced word, '' or 'e' for identity")
        p.add_argument("--top", action="store_true", help="h1: test H^{N-1} instead of H^1")
        p.add_argument("--witness", action="store_true", help="bott: include the Weyl witness")
        p.add_argument("--down-set", action="store_true", help="slink: list SL(<lambda)")
        p.add_argument("--r-convention", choices=("max", "min"), default="max")

    helps = {
        "chi": "Euler characteristic chi(lambda)",
        "bott": "characteristic-zero answer (Bott)",
        "serre": "Serre dual weight and degree",
        "h1": "exact non-vanishing test for H^1 (or H^{N-1} with --top)",
        "dpi": "D_p(i) verdict: nonvanishing / vanishes / unknown",
        "linked": "same W_p dot-orbit",
        "slink": "strong linkage chain mu up-arrow lambda, or the down-set",
        "sumformula": "Jantzen sum formula (generic sum formula with --w and --n)",
        "generic-report": "degree, socle and head weights for a generic weight",
    }
    for name, text in helps.items():
        op_options(common(sub.add_parser(name, help=text)))

    st = common(sub.add_parser("steinberg", help="character of St_n"), weight=False)
    st.add_argument("--p", type=int, required=True)
    st.add_argument("--n", type=int, required=True)

    sw = common(sub.add_parser("sweep", help="run a subcommand over a box of weights"), weight=False)
    sw.add_argument("--op", choices=sorted(WEIGHT_OPS), required=True)
    sw.add_argument("--lo", required=True, help="lower corner of the box")
    sw.add_argument("--hi", required=True, help="upper corner of the box")
    op_options(sw)
    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    # let "--wt -3,2" through: argparse would read "-3,2" as an option
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _WEIGHT_FLAGS and i + 1 < len(argv) and _INT_LIST.fullmatch(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv: list[str]) -> tuple[int, str, str]:
    """Execute a command line; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize_argv(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        try:
            rs = build_root_system(CartanType.parse(args.type))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.command == "sweep":
            lines = [_dumps(row) if args.format == "json" else _sweep_text(row) for row in sweep(rs, args)]
            return 0, "".join(line + "\n" for line in lines), ""
        if args.command == "steinberg":
            obj = _steinberg(rs, args)
        else:
            obj = WEIGHT_OPS[args.command](rs, _weight(rs, args.wt), args)
    except UsageError as exc:
        return 2, "", f"flagcoh {args.command}: error: {exc}\n"
    except (ValueError, IndexError) as exc:
        return 1, "", f"flagcoh {args.command}: {exc}\n"
    return 0, _render(obj, args.format) + "\n", ""


def _sweep_text(row: dict) -> str:
    wt = ",".join(map(str, row["wt"]))
    rest = {k: v for k, v in row.items() if k != "wt"}
    return f"{wt}\t{_dumps(rest)}"


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
