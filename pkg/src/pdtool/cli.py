"""``pdtool`` command line.

    pdtool <command> [--family NAME | --group-json FILE] [--dim D] [--degree N]
                     [--degree-bound B] [--components dG:dE[,dG:dE...]]
                     [--one-connected] [--format text|json] [--strict]

Exit status: 0 success, 2 usage error, 3 size budget exceeded, 4 theorem not
applicable (only with ``--strict``; otherwise an "inapplicable" result is
printed with status 0).  Results go to stdout, progress to stderr.
"""

import argparse
import json
import logging
import sys

from pdtool.config import get_config
from pdtool.connectivity import (
    DimensionProfile,
    component_bounds,
    explain_isov_connectivity,
    isov_space_connectivity,
)
from pdtool.errors import BudgetExceeded, InvalidInput, PdtoolError
from pdtool.families import from_family, group_from_json
from pdtool.homology import cohomology, homology
from pdtool.periodicity import is_periodic_via_abelian, period, periodicity_report
from pdtool.swan import classify_hreps, count_free_invertible_spectra

log = logging.getLogger("pdtool")

COMMANDS = (
    "periodicity",
    "period",
    "cohomology",
    "homology",
    "swan",
    "invertible-spectra",
    "isov",
    "bounds",
    "explain",
)
NEEDS_GROUP = {"periodicity", "period", "cohomology", "homology", "swan", "invertible-spectra"}

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INAPPLICABLE = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="pdtool", description="Periodic groups, Swan counts and isovariant connectivity bounds.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--family", help="group shorthand such as Q8, C6, D8, SL23, C2xC4")
    src.add_argument("--group-json", metavar="FILE", help="group description as JSON")
    p.add_argument("--dim", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--components", help="dG:dE pairs separated by commas; '-' marks an empty fixed set")
    p.add_argument("--one-connected", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--strict", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    return p


def _group(args):
    if args.family:
        G = from_family(args.family)
        label = args.family
    elif args.group_json:
        try:
            with open(args.group_json) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read group JSON: {exc}") from None
        G = group_from_json(obj)
        label = args.group_json
    else:
        return None, None
    log.info("group %s of order %d", label, G.order)
    return G, label


def _need(args, name):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return v


def _profile(args):
    return DimensionProfile.parse(_need(args, "components"), args.one_connected)


def _inapplicable(reason, **extra):
    return {"inapplicable": True, "reason": reason, **extra}, True


def cmd_periodicity(args, G, label):
    rep = periodicity_report(G, args.degree_bound)
    out = rep.to_json()
    out["group"] = label
    return out, False


def cmd_period(args, G, label):
    bound = args.degree_bound or get_config().degree_cap
    out = {"group": label, "order": G.order, "search_bound": bound}
    if not is_periodic_via_abelian(G):
        out.update(period=None, note="not periodic (criteria 1,2 fail)")
        return out, False
    p = period(G, bound)
    out["period"] = p
    out["note"] = "period found" if p is not None else f"no witness degree up to {bound}"
    return out, False


def _invariants(args, G, label, fn):
    n = _need(args, "degree")
    h = fn(G, n)
    out = {"group": label, "order": G.order, "degree": n, "group_structure": str(h)}
    out.update(h.to_json())
    return out, False


def cmd_cohomology(args, G, label):
    return _invariants(args, G, label, cohomology)


def cmd_homology(args, G, label):
    return _invariants(args, G, label, homology)


def cmd_swan(args, G, label):
    c = classify_hreps(G, _need(args, "dim"))
    out = c.to_json()
    out["group"] = label
    return out, False


def cmd_invertible_spectra(args, G, label):
    d = _need(args, "dim")
    return {"group": label, "order": G.order, "dimension": d, "count": count_free_invertible_spectra(G, d)}, False


def cmd_isov(args, G, label):
    profile = _profile(args)
    if G is not None and not is_periodic_via_abelian(G):
        return _inapplicable(f"{label} is not periodic", k=None)
    k = isov_space_connectivity(profile)
    if k is None:
        bad = [c for c in profile.components if not c.codimension_ok()]
        if bad:
            return _inapplicable(f"codimension condition d_G + 3 <= d_e fails for {bad[0].d_G}:{bad[0].d_e}", k=None)
        return _inapplicable("the bound d_e - 2 d_G - 3 is below -1", k=None)
    return {"k": k.value, "meaning": k.meaning()}, False


def cmd_bounds(args, G, label):
    profile = _profile(args)
    comps = [component_bounds(c.d_G, c.d_e) for c in profile.components]
    return {"components": comps, "one_connected": profile.one_connected}, False


def cmd_explain(args, G, label):
    profile = _profile(args)
    bad = [c for c in profile.components if not c.codimension_ok()]
    if bad:
        return _inapplicable(f"codimension condition d_G + 3 <= d_e fails for {bad[0].d_G}:{bad[0].d_e}")
    return explain_isov_connectivity(profile).to_json(), False


HANDLERS = {name: globals()["cmd_" + name.replace("-", "_")] for name in COMMANDS}


def render(result, fmt):
    if fmt == "json":
        return json.dumps(result, sort_keys=True) + "\n"
    return "".join(f"{k}: {_text(v)}\n" for k, v in sorted(result.items()))


def _text(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return "none"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def run(argv, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"pdtool: usage error: {exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err, format="%(message)s")
    try:
        if args.degree_bound is not None:
            cap = get_config().degree_cap
            if args.degree_bound < 1:
                raise UsageError("--degree-bound must be >= 1")
            if args.degree_bound > cap:
                raise BudgetExceeded("degree bound", args.degree_bound, cap)
        G, label = _group(args)
        if args.command in NEEDS_GROUP and G is None:
            raise UsageError(f"{args.command} needs --family or --group-json")
        result, inapplicable = HANDLERS[args.command](args, G, label)
    except UsageError as exc:
        err.write(f"pdtool: usage error: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        err.write(f"pdtool: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (InvalidInput, PdtoolError) as exc:
        err.write(f"pdtool: {exc}\n")
        return EXIT_USAGE
    if inapplicable and args.strict:
        err.write(f"pdtool: not applicable: {result['reason']}\n")
        return EXIT_INAPPLICABLE
    out.write(render(result, args.format))
    return EXIT_OK


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
