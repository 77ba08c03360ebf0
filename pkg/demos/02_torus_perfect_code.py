"""
A cover that reaches ratio 3/5
==============================

C15 x C15 covers C3 x C3 with fold 25.  A diagonal perfect code dominates the
big torus with n/5 vertices, and no dominating set can be smaller.
"""

from fractions import Fraction

from coverdom import diagonal_perfect_code, domination_number, fixture, is_efficient_dominating

N, G, p = fixture("torus-15-cover")
code = diagonal_perfect_code(15)
print("code size", len(code), "efficient:", is_efficient_dominating(G, code))

# every vertex dominates at most 5 vertices, so 225/5 is also a lower bound
print("order bound", Fraction(G.n, 1 + G.max_degree))

gamma_N = domination_number(N).value
ratio = Fraction(len(code), p.k * gamma_N)
print(f"gamma(N) = {gamma_N}, ratio = {ratio} = {float(ratio):.3f}")

# the pattern: (i, j) is chosen when 2i + j is 0 mod 5
for i in range(10):
    print("".join("#" if (2 * i + j) % 5 == 0 else "." for j in range(15)))
