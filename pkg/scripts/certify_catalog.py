"""Build every catalog entry and print its certification summary."""
import sys
import time

from tightsurf.complex import boundary_cycles, check_embeddedness, validate_surface
from tightsurf.constructions import CORE_NAMES, build_catalog
from tightsurf.tightness import is_tight_surface, theorem1_audit, tpp_oracle


def main(names):
    ok_all = True
    for name in names:
        t0 = time.time()
        e, entry = build_catalog(name)
        st = validate_surface(e.surface)
        embedded = check_embeddedness(e)
        v = is_tight_surface(e)
        on_b = {x for c in boundary_cycles(e.surface) for x in c} == set(range(e.surface.num_vertices))
        audit = theorem1_audit(e, entry.closed, entry.p, v)
        oracle = tpp_oracle(e, max_vertices=99)[0] if e.surface.num_vertices <= 12 else None
        ok = (st == entry.expected and embedded and v.tight and v.substantial and on_b
              and e.dimension == entry.dimension and audit.passed and audit.sharp
              and oracle in (None, v.zero_tight))
        ok_all &= ok
        print(f"{name:11s} V={e.surface.num_vertices:2d} n={e.dimension} c0={entry.c0} {st} "
              f"embedded={embedded} tight={v.tight} oracle={oracle} audit={audit.passed} "
              f"{'OK' if ok else 'FAIL'} {time.time() - t0:.1f}s")
    return 0 if ok_all else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:] or CORE_NAMES))
