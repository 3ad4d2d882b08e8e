"""A character match that fails: two supercurrents at central charge 1.

The registry model family ``n2_c1:*`` presents a ring on two odd
generators gp, gm of weight 3/2 and one even generator h of weight 1,
with the two quadratic relations

    a = gp * gm  - (1/2) h^2      (doubled degree 8, after T-normalising)
    b = gp * gm' - gp' * gm - ... (doubled degree 8)

plus optional extra null generators.  The candidate character is the
weight-graded series theta_over_eta(3).  Three variants are registered:

    n2_c1:bare   relations only
    n2_c1:ab     relations + first two null generators a, b
    n2_c1:abc    relations + a, b and a third, cubic null vector c

The exact jet computation shows, degree by degree:

  * bare:  too big -- the quotient exceeds the character from q^4 on;
  * ab:    exactly the character through q^10 (adjoining a and b is
           enough, coefficient for coefficient, this far);
  * abc:   too small at q^(9/2) -- the cubic vector c is NOT null for
           this presentation: it does not lie in the differential ideal
           generated by the relations together with a and b, and
           adjoining it kills a dimension the character still counts.

So the membership test and the dimension count together refute the
claim that c is a null vector here, and pin the exact degree where the
discrepancy appears.

Run:  python3 demos/02_two_supercurrent_counterexample.py
"""
from jetchar import (contains, get_model, hilbert_series, qseries_formula,
                     verify)

MAX2 = 10

char = qseries_formula("theta:3", MAX2)
rows = {}
for key in ("n2_c1:bare", "n2_c1:ab", "n2_c1:abc"):
    rows[key] = hilbert_series(get_model(key).ring(), MAX2)

print("doubled degree:      ", list(range(MAX2 + 1)))
print("character theta/eta: ", char.c)
for key, hs in rows.items():
    marks = "".join("=" if hs[d] == char[d] else
                    ">" if hs[d] > char[d] else "<"
                    for d in range(MAX2 + 1))
    print("%-21s %s   (%s)" % (key + ":", hs, marks))
print()

assert rows["n2_c1:ab"] == char.c, "ab variant should match through q^5"
assert rows["n2_c1:bare"][8] > char[8], "bare variant should exceed at q^4"
assert rows["n2_c1:abc"][9] < char[9], "abc variant should drop at q^(9/2)"

# ----------------------------------------------------------------------
# Membership: is the cubic vector c already in the ideal of <rels, a, b>?
# ----------------------------------------------------------------------
ab = get_model("n2_c1:ab").ring()
abc = get_model("n2_c1:abc").ring()
c = abc.extras[2]
print("the cubic candidate null vector:")
print("    c =", abc.poly_str(c))
in_ab = contains(ab, c)
in_abc = contains(abc, c)
print("    c in differential ideal of <relations, a, b> :", in_ab)
print("    c in differential ideal of <relations, a, b, c>:", in_abc)
assert not in_ab and in_abc
print()

# ----------------------------------------------------------------------
# The registry's own verdicts, as structured reports.
# ----------------------------------------------------------------------
for key in ("n2_c1:bare", "n2_c1:ab"):
    report = verify(key, maxdeg2=MAX2)
    tail = ("" if report.mismatch_degree2 is None
            else " at doubled degree %d" % report.mismatch_degree2)
    print("verify(%-11s) -> %s%s" % (key, report.verdict, tail))
assert verify("n2_c1:bare", maxdeg2=MAX2).mismatch_degree2 == 8
assert verify("n2_c1:ab", maxdeg2=MAX2).verdict == "ISO_CONSISTENT"
print()
print("Conclusion: adjoining a and b reproduces the character through")
print("q^5, but the cubic c is genuinely outside the ideal, and forcing")
print("it in undershoots the character at q^(9/2).")
