#!/usr/bin/env python3
"""Re-derive the Klein bottle ordering facts from scratch and print them."""

import argparse

from grouporders.klein import k_out_table, survey_ball_orderings


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--inner-radius", type=int, default=3)
    parser.add_argument("--outer-radius", type=int, default=5)
    args = parser.parse_args()
    local, extendable = survey_ball_orderings(args.inner_radius, args.outer_radius)
    print(f"sign assignments consistent on the |a|,|b| <= {args.inner_radius} ball: "
          f"{local}")
    print(f"of those, extendable to |a|,|b| <= {args.outer_radius}: {extendable}")
    table = k_out_table()
    print(f"\nOut(K) classes {table.class_names}, Klein four-group: "
          f"{table.is_klein_four_group}")
    for name in table.class_names:
        print(f"  {name:5s} acts on the orderings as {table.actions[name]}")
    print(f"kernel of the action: {table.action_kernel}")
    print(f"conjugation orbits of the cones: {table.conjugacy_orbits}")


if __name__ == "__main__":
    main()
