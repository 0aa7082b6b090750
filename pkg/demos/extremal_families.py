"""Walk through the extremal constructions and compare them to their bounds.

Run with ``python3 demos/extremal_families.py``.
"""

from __future__ import annotations

from berge_lab.bounds import check_theorem
from berge_lab.circumference import berge_circumference, longest_berge_path
from berge_lab.constructions import make_block, make_block_tree, make_ht, make_star, make_t1_family


def show(label, rep):
    print(f"  {label:<24} e={rep.measured!s:<3} bound={rep.bound!s:<6} "
          f"{rep.verdict:<6} tight={rep.tight!s:<5} class={rep.extremal_class}")


def main():
    r, k = 5, 4
    print(f"Block-trees of ({r + 1},{k - 1})-blocks hit the bound (k-1)(n-1)/r exactly:")
    show("single block", check_theorem(make_block(r, k), "eg-full", k, r))
    for b in (2, 3, 4):
        H = make_block_tree(r, k, b)
        show(f"path of {b} blocks (n={H.n})", check_theorem(H, "eg-full", k, r))
    H = make_block_tree(r, k, 3, shape="star")
    show("star of 3 blocks", check_theorem(H, "eg-full", k, r))

    print("\nStars {i} u C with |C| = r-1: circumference r-1, n-r+1 edges.")
    for n in range(6, 11):
        S = make_star(n, 4)
        print(f"  n={n:<2} edges={S.num_edges} berge_circumference={berge_circumference(S)} "
              f"longest_berge_path={longest_berge_path(S)}")

    print("\nThe two-hub family H_t (k=5, r=6): circumference stays below k.")
    for t in (1, 2, 3):
        H = make_ht(5, 6, t)
        print(f"  t={t} n={H.n:<2} e={H.num_edges} berge_circumference={berge_circumference(H)}")

    print("\nFrames with special blocks (r=5, k=4): equality in the deficiency bound.")
    for s, t in ((1, 0), (0, 1), (2, 1), (3, 3)):
        rep = check_theorem(make_t1_family(r, k, s, t), "t1", k)
        show(f"s={s} t={t}", rep)
        print(f"{'':28}Q={rep.details['Q']} D={rep.details['D']}")


if __name__ == "__main__":
    main()
