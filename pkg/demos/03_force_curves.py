"""Force per unit area across separations, vacuum and dispersive media.

Media always weaken the attraction: the vacuum_ratio column is the force
relative to the ideal-mirror vacuum result at the same separation, and it
stays inside (0, 1).  For a frequency-independent susceptibility the ratio
is exactly 1/sqrt(1 + chi0) at every separation; dispersive media approach 1
at short separations (high frequencies dominate, where the coupling dies
off) and approach their static ratio at large ones.
"""

import math

from casimir_medium import (
    Constant,
    Drude,
    FieldKind,
    ForceQuery,
    Lorentz,
    Medium,
    force_field_bc,
    vacuum_force_analytic,
)

lorentz = Medium(electric=Lorentz(omega_p=1.0, omega_0=1.0, gamma=0.1))
drude = Medium(electric=Drude(omega_p=1.0, gamma=0.5))

print("scalar field, force per unit area (negative = attractive)")
print(f"{'H':>6} {'vacuum':>14} {'lorentz':>14} {'ratio':>8} {'drude':>14} {'ratio':>8}")
for h in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0):
    vac = vacuum_force_analytic(FieldKind.SCALAR, h)
    rows = []
    for medium in (lorentz, drude):
        res = force_field_bc(ForceQuery(medium=medium, separation=h))
        rows.append((res.force_per_area, res.vacuum_ratio))
    print(f"{h:6.2f} {vac:14.6e} "
          f"{rows[0][0]:14.6e} {rows[0][1]:8.5f} "
          f"{rows[1][0]:14.6e} {rows[1][1]:8.5f}")

print()
print("constant susceptibility: ratio pinned at 1/sqrt(1 + chi0)")
print(f"{'chi0':>6} {'computed ratio':>16} {'1/sqrt(1+chi0)':>16}")
for chi0 in (0.25, 1.25, 3.0, 15.0):
    res = force_field_bc(
        ForceQuery(medium=Medium(electric=Constant(chi0)), separation=1.0)
    )
    print(f"{chi0:6.2f} {res.vacuum_ratio:16.12f} {(1.0 + chi0) ** -0.5:16.12f}")

print()
em = force_field_bc(ForceQuery(kind=FieldKind.EM, separation=1.0))
scalar = force_field_bc(ForceQuery(separation=1.0))
print(f"EM vacuum force at H=1: {em.force_per_area:.12e}")
print(f"  exactly twice the scalar result "
      f"({em.force_per_area / scalar.force_per_area:.1f}x), "
      f"and -pi^2/240 = {-math.pi**2 / 240.0:.12e}")
