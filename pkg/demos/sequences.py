"""q-Fibonacci and q-Pell triangles."""

from qrational import triangle_rows
from qrational.sequences import rows_to_csv

for kind in ("fib", "pell"):
    print(kind)
    for row in triangle_rows(kind, 7):
        print("  " + " ".join(f"{c:3d}" for c in row).center(60))

print(rows_to_csv(triangle_rows("pell", 3)), end="")
