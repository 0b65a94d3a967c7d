#!/usr/bin/env python3
"""Print the full move/inequality story of one quiver: reflection ordering,
map-to-simple posets, antichain counts, and the inequality table.

Usage: python scripts/quiver_report.py [--quiver SPEC] [--box B]
"""

import argparse
import sys

from stringcone.arquiver import build_ar
from stringcone.lusztig import all_moves, antichains
from stringcone.quiver import adapted_word, condition_L, parse_quiver, quiver_spec
from stringcone.strings import pretty_inequality
from stringcone.verify import check_conjecture


def pretty_root(root) -> str:
    return "+".join(
        (f"a{i}" if c == 1 else f"{c}a{i}")
        for i, c in enumerate(root, start=1)
        if c
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quiver", default="4>3,3>1,3>2")
    parser.add_argument("--box", type=int, default=2)
    args = parser.parse_args()

    q = parse_quiver(args.quiver)
    word = adapted_word(q)
    ar = build_ar(q, word)
    n = q.diagram.n

    print(f"quiver   {quiver_spec(q)}")
    print(f"word     {','.join(map(str, word))}")
    print(f"ordering")
    for k in range(1, ar.N + 1):
        print(f"  b{k} = {pretty_root(ar.root(k))}")
    has_l = condition_L(q, ar)
    print(f"multiplicity-one property: {'yes' if has_l else 'NO'}")
    for i in range(1, n + 1):
        pset = ar.p_set(i)
        print(f"type {i}: poset positions {list(pset)}, "
              f"{len(antichains(ar, i))} antichains")
    print("inequalities")
    for a, vec in all_moves(ar, check_condition=False):
        print(f"  {a.type_index}: {pretty_inequality(vec)}")
    if has_l:
        report = check_conjecture(q, word, box=args.box)
        verdict = "PASS" if report.passed else f"FAIL witness={report.witness}"
        print(f"{report.check}: {verdict}")
        return 0 if report.passed else 1
    print("skipping the cone check: the move description needs the "
          "multiplicity-one property")
    return 0


if __name__ == "__main__":
    sys.exit(main())
