"""
Building tableaux-sum eigenvalues
=================================

A transfer-matrix eigenvalue candidate is indexed by an algebra, here
B(2|1) = osp(5|2), and a (skew) Young diagram.  Each admissible filling of
the diagram by box labels contributes one product of Q-ratios; the Q's are
the polynomials whose zeros are the Bethe roots, and the phi factors carry
the inhomogeneities of the quantum space.
"""

from bethe_dvf import (BoxContext, SkewDiagram, build_dvf, count_tableaux,
                       enumerate_tableaux, parse_spec, sum_to_latex,
                       sum_to_text)

spec = parse_spec("B(2|1)")
ctx = BoxContext(spec)

# the fundamental: a single box, one term per label in the index set
t1 = build_dvf(ctx, SkewDiagram.straight((1,)))
print(f"fundamental sum for {spec}: {len(t1)} terms")
print(sum_to_text(t1))

# a two-box column; 24 admissible fillings
t2 = build_dvf(ctx, SkewDiagram.straight((1, 1)))
print(f"\nheight-2 column: {len(t2)} terms; first term in LaTeX:")
print(sum_to_latex(t2).splitlines()[0])

# admissible fillings can be inspected directly
print("\nfirst three fillings of the (2,1) shape:")
for i, tab in enumerate(enumerate_tableaux(spec, SkewDiagram.straight((2, 1)))):
    print(" ", tab.to_json()["cells"])
    if i == 2:
        break

# counting never materializes the fillings
for name, mu in [("B(0|2)", (2, 2, 2)), ("D(3|1)", (1, 1)), ("D(2|2)", (1, 1))]:
    n = count_tableaux(parse_spec(name), SkewDiagram.straight(mu))
    print(f"\n{name} shape {mu}: {n} admissible fillings")

# rectangles that are too tall and too wide at the same time are empty
print("\nB(1|1) 3x4 rectangle:",
      count_tableaux(parse_spec("B(1|1)"), SkewDiagram.straight((4, 4, 4))),
      "fillings (forced by the vanishing constraint)")
