"""Count closures of the path graph attached to a rational."""

from qrational import Rational, build_graph, build_graph_prime, enumerate_closures, expand_regular, qdeform

x = Rational(25, 11)
a = expand_regular(x)
g, gp = build_graph(a), build_graph_prime(a)
print(f"G  for {x}: {g}")
print(f"G' for {x}: {gp}")
print("closures of G by size: ", enumerate_closures(g).counts())
print("closures of G' by size:", enumerate_closures(gp).counts())
print("q-deformation:         ", qdeform(x))

small = enumerate_closures(build_graph(expand_regular(Rational(5, 2))))
print("\nevery closure of G for 5/2 (vertices from 1):")
for subset in small.subsets():
    print("  {" + ",".join(str(v + 1) for v in subset) + "}")
