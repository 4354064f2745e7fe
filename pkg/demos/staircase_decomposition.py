"""A five-corner staircase: I_X as a sum of products of row and column ideals.

Run with:  python3 demos/staircase_decomposition.py
"""

from multiacm import has_star, staircase
from multiacm.lab.generate import FIVE_CORNERS, GenSpec, generate
from multiacm.oracle import acm_decide
from multiacm.points import config_ideal, config_ring, staircase_ideal

X = generate(GenSpec((1, 2), "star", budget=30, seed="demo", corners=FIVE_CORNERS))
st = staircase(X)
print(f"{len(X)} points, star property: {has_star(X)}")
print("corners:", st.corners)

I = config_ideal(X)
J = staircase_ideal(st, config_ring(X))
print("staircase ideal equals I_X:", I == J)
print("reduced Groebner basis size:", len(I.gb()))
print("ACM:", acm_decide(X).decision)
