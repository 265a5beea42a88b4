"""Print the periodicity and Swan data of every fixture group as a table.

    python scripts/survey_fixtures.py [--dims 3,7] [--json]
"""

import argparse
import json
import sys

from pdtool.families import from_family
from pdtool.periodicity import periodicity_report
from pdtool.swan import classify_hreps

FIXTURES = [f"C{n}" for n in range(1, 13)] + [
    "C2xC2", "C2xC4", "C3xC3", "D6", "D8", "D12", "Q8", "Q16", "S3", "S4", "A4", "SL23",
]


def survey(dims):
    rows = []
    for name in FIXTURES:
        G = from_family(name)
        rep = periodicity_report(G)
        row = {
            "group": name,
            "order": G.order,
            "periodic": rep.via_abelian,
            "period": rep.period,
        }
        for d in dims:
            c = classify_hreps(G, d)
            row[f"swan_d{d}"] = [c.oriented_count, c.unoriented_count]
        rows.append(row)
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--dims", default="3,7", help="comma separated dimensions for the Swan counts")
    p.add_argument("--json", action="store_true")
    args = p.parse_args(argv)
    dims = [int(d) for d in args.dims.split(",")]
    rows = survey(dims)
    if args.json:
        json.dump(rows, sys.stdout, indent=1, sort_keys=True)
        print()
        return
    header = ["group", "order", "periodic", "period"] + [f"swan d={d}" for d in dims]
    print("  ".join(f"{h:>9}" for h in header))
    for r in rows:
        cells = [r["group"], r["order"], r["periodic"], r["period"] or "-"]
        cells += ["%d/%d" % tuple(r[f"swan_d{d}"]) for d in dims]
        print("  ".join(f"{str(c):>9}" for c in cells))


if __name__ == "__main__":
    main()
