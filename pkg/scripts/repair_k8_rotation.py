"""Show that the faulty K8 rotation rows are rejected and find the repair.

Row 6 lists neighbour 2 twice and never lists 1.  We try replacing either
copy of 2 by 1, trace faces for each candidate, and keep the candidates
whose faces are proper polygons forming a surface.
"""
from tightsurf.complex import (
    PolySurface,
    RotationError,
    RotationSystem,
    SurfaceError,
    euler_characteristic,
    trace_faces,
    validate_surface,
)
from tightsurf.constructions import K8_ROTATION_FAULTY, K8_ROTATION


def as_system(rows):
    return RotationSystem(tuple(rows[v] for v in range(len(rows))))


def main():
    try:
        as_system(K8_ROTATION_FAULTY).validate()
        print("faulty rows validate (unexpected)")
        return 1
    except RotationError as exc:
        print(f"faulty rows rejected: {exc}")
    row = K8_ROTATION_FAULTY[6]
    good = []
    for pos in (i for i, u in enumerate(row) if u == 2):
        cand = {**K8_ROTATION_FAULTY, 6: row[:pos] + (1,) + row[pos + 1:]}
        r = as_system(cand)
        r.validate()
        s = trace_faces(r)
        try:
            st = validate_surface(PolySurface(s.num_vertices, s.faces))
        except SurfaceError as exc:
            print(f"row 6 = {cand[6]}: rejected ({exc})")
            continue
        sizes = sorted(len(f) for f in s.faces)
        quads = [f for f in s.faces if len(f) == 4]
        print(f"row 6 = {cand[6]}: {st}, chi = {euler_characteristic(s)}, "
              f"{sizes.count(3)} triangles, quadrilaterals {quads}")
        good.append(cand)
    ok = good == [K8_ROTATION]
    print("unique repair matches the frozen constant" if ok else "repair does NOT match")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
