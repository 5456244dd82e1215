"""Recompute the Chern pairing table and the odd pairings at several windows.

    python3 scripts/reproduce_table.py --windows 16 32 64 --out table.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from ncgroups.fredholm import EXPECTED_TABLE, chern_pair_odd, pairing_table
from ncgroups.ring import DIHEDRAL, SEMIDIRECT, RingElement


@dataclass
class TableConfig:
    windows: list = field(default_factory=lambda: [16, 32, 64])
    k_list: list = field(default_factory=lambda: [1, 2])


def run(cfg: TableConfig) -> dict:
    rows = []
    for N in cfg.windows:
        start = time.perf_counter()
        table = pairing_table(N, tuple(cfg.k_list))
        odd = {
            "z1,V": chern_pair_odd("z1", RingElement.word(DIHEDRAL, "S"), N).value,
            "w1B,V": chern_pair_odd("w1B", RingElement.word(SEMIDIRECT, "V"), N).value,
            "z1,1": chern_pair_odd("z1", RingElement.one(DIHEDRAL), N).value,
        }
        rows.append({
            "window": N,
            "table": table,
            "matches": table == EXPECTED_TABLE,
            "odd": odd,
            "seconds": round(time.perf_counter() - start, 3),
        })
    return {"config": asdict(cfg), "runs": rows}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--windows", type=int, nargs="+", default=[16, 32, 64])
    ap.add_argument("--k", type=int, nargs="+", default=[1, 2], dest="k_list")
    ap.add_argument("--out")
    args = ap.parse_args()
    result = run(TableConfig(args.windows, args.k_list))
    for row in result["runs"]:
        flag = "ok" if row["matches"] else "MISMATCH"
        print(f"N={row['window']:4d}  {row['table']}  odd={row['odd']}  {flag}  {row['seconds']}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
