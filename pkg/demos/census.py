"""A small exhaustive census and the conjecture scan.

Run with ``python3 demos/census.py``; it takes well under a minute.
"""

from __future__ import annotations

from fractions import Fraction

from berge_lab.enumeration import CampaignSpec, max_good_edges, run_campaign


def main():
    for mult in (1, 2):
        spec = CampaignSpec("multi", 6, 5, 4, ("eg-full",), max_mult=mult, shards=4)
        res = run_campaign(spec)
        print(f"5-uniform on 6 vertices, multiplicity <= {mult}: {res.scanned} instances, "
              f"{res.applicable} without a Berge 4-cycle, {len(res.violations)} violations, "
              f"{res.tight_count} tight {dict(res.histogram)} ({res.seconds:.2f}s)")

    print("\nLargest 4-uniform hypergraphs with no Berge cycle of length >= 4:")
    r = 4
    for n in range(4, 9):
        s = max_good_edges(n, r)
        bound = max(Fraction((r - 1) * (n - 1), r), Fraction(n - r + 1))
        print(f"  n={n}: {s.best} edges ({s.method}, {s.seconds:.1f}s); conjectured bound {bound}")


if __name__ == "__main__":
    main()
