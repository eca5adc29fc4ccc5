"""
Closed-form values
==================

Where a formula is known the package answers without searching, and
says which range the answer is valid for.
"""

from mixedramsey.formulas import NotCovered, f_value, known_min_colors, lambda_value, lookup

print([lambda_value(k) for k in range(1, 7)])
print(f_value(5, "C4", "K3"))
print(known_min_colors(20, "K3", "K3+e"))

for q in ["r3(C4)", "r4(3K2)", "S(12,P4,K3)", "S(13,K1,3,K3)", "min(9,C4,K3)"]:
    try:
        print(q, "->", lookup(q).format_value())
    except NotCovered as exc:
        print(q, "-> not covered:", exc)
