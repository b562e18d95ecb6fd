#!/usr/bin/env python3
"""Regenerate the bundled knot census from the KnotInfo database.

Writes two files under data/census/:
  knots_le10.pd    one "name: X(a,b,c,d) ..." line per knot
  knots_le10.tsv   name, crossing number, alternating flag, three-genus

Requires the ``database_knotinfo`` package.
"""
import ast
import pathlib

from database_knotinfo import link_list

MAX_CROSSINGS = 10


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "census"
    out.mkdir(parents=True, exist_ok=True)
    pd_lines, tsv_lines = [], ["name\tcrossings\talternating\tgenus"]
    for rec in link_list()[1:]:
        cn = rec.get("crossing_number", "")
        if not cn.isdigit() or int(cn) > MAX_CROSSINGS:
            continue
        name = rec["name"]
        tuples = ast.literal_eval(rec["pd_notation"]) if rec["pd_notation"] else []
        pd = " ".join("X(%s)" % ",".join(str(v) for v in t) for t in tuples)
        pd_lines.append(f"{name}: {pd}".rstrip())
        tsv_lines.append(f"{name}\t{cn}\t{rec['alternating']}\t{rec['three_genus']}")
    (out / "knots_le10.pd").write_text("\n".join(pd_lines) + "\n")
    (out / "knots_le10.tsv").write_text("\n".join(tsv_lines) + "\n")


if __name__ == "__main__":
    main()
