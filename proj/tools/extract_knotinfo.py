#!/usr/bin/env python3
"""Extract knot tables from the KnotInfo database dump.

The KnotInfo data ships as the PyPI package ``database_knotinfo``
(pip install database_knotinfo). This script reads its pipe-separated
dump and writes the comma-separated tables consumed by ``knotsig``.

    extract_knotinfo.py fixtures  OUT.csv   # the 23-knot fixture table
    extract_knotinfo.py slice     OUT.csv   # every slice knot up to 12 crossings
"""
import csv
import os
import re
import sys

import database_knotinfo

FIXTURE_NAMES = [
    "8_20", "10_87", "10_140", "11a_28", "11a_58", "11a_165", "12a_189",
    "12a_377", "12a_979", "12n_56", "12n_57", "12n_62", "12n_66", "12n_87",
    "12n_106", "12n_288", "12n_501", "12n_504", "12n_582", "12n_670",
    "12n_721", "5_2", "9_46",
]

COLUMNS = ["name", "crossing_number", "three_genus", "four_genus",
           "double_slice_genus", "seifert_matrix"]


def short_name(name):
    # KnotInfo writes 11a_28; the literature writes 11a28.
    return re.sub(r"^(\d+[an])_(\d+)$", r"\1\2", name)


def exact_int(text):
    text = text.strip()
    return text if re.fullmatch(r"\d+", text) else ""


def load():
    csv.field_size_limit(1 << 30)
    base = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data")
    with open(os.path.join(base, "knotinfo_data_complete.csv"), newline="") as f:
        reader = csv.reader(f, delimiter="|")
        header = next(reader)
        idx = {h: i for i, h in enumerate(header)}
        for row in reader:
            if len(row) != len(header):
                continue
            yield {h: row[i] for h, i in idx.items()}


def to_row(rec):
    return [
        short_name(rec["name"]),
        exact_int(rec["crossing_number"]),
        exact_int(rec["three_genus"]),
        exact_int(rec["smooth_four_genus"]),
        exact_int(rec["double_slice_genus"]),
        " ".join(rec["seifert_matrix"].split()),
    ]


def main(argv):
    if len(argv) != 3 or argv[1] not in ("fixtures", "slice"):
        sys.exit(__doc__)
    records = {r["name"]: r for r in load() if r["name"] != "0_1"}
    if argv[1] == "fixtures":
        chosen = [records[n] for n in FIXTURE_NAMES]
    else:
        chosen = [r for r in records.values()
                  if exact_int(r["crossing_number"])
                  and int(r["crossing_number"]) <= 12
                  and exact_int(r["smooth_four_genus"]) == "0"]
    with open(argv[2], "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(COLUMNS)
        for rec in chosen:
            w.writerow(to_row(rec))


if __name__ == "__main__":
    main(sys.argv)
