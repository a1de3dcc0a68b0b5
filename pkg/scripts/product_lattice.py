"""Run the product-orbit check for every small pair of degrees and time it.

    python scripts/product_lattice.py            # (3,3), (3,4), (4,3), (4,4)
    python scripts/product_lattice.py 3 3
"""

import sys
import time

from chisini.lattice import verify_product_orbits


def main(argv):
    pairs = [tuple(map(int, argv[:2]))] if len(argv) >= 2 else [(3, 3), (3, 4), (4, 3), (4, 4)]
    for n1, n2 in pairs:
        t0 = time.perf_counter()
        rep = verify_product_orbits(n1, n2)
        dt = time.perf_counter() - t0
        print(f"S{n1} x S{n2}: {rep.subgroups_containing_t} subgroups contain t, "
              f"{len(rep.qualifying)} project onto both factors, {rep.diagonal_count} diagonal, "
              f"{len(rep.violations)} violations  [{dt:.2f}s]")
        for q in rep.qualifying:
            tag = " diagonal" if q.diagonal_conjugate else ""
            print(f"    |G|={q.order:4d} kernels={'/'.join(q.kernel_types):5s} "
                  f"orbit(1,1)={q.origin_orbit:3d} orbits={list(q.orbit_sizes)}{tag}")


if __name__ == "__main__":
    main(sys.argv[1:])
