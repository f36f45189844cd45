"""Direct-evaluation oracle for the frozen expected values in the unit tests.

Everything here is computed from the defining formulas with mpmath at 50
digits, independent of the C++ code paths (no stable expm1 forms, no
pairwise summation).
"""
from itertools import product as cart

import mpmath as mp

mp.mp.dps = 50


def tsallis(q, c=1):
    return lambda t: c * (t - t**q) / (q - 1) if t != 0 else mp.mpf(0)


def bg(c=1):
    return lambda t: -c * t * mp.log(t) if t != 0 else mp.mpf(0)


def S(f, p):
    return mp.fsum(f(mp.mpf(x)) for x in p)


half = mp.mpf(1) / 2
print("product (0.5,0.5)x(0.6,0.4):", [float(a * b) for a, b in cart([0.5, 0.5], [mp.mpf('0.6'), mp.mpf('0.4')])])
third = mp.mpf(1) / 3
print("variation uniform(3), P=(0.5,0), s=0.1:", [float(third + 0.05), float(third), float(third - 0.05)])
print("tsallis q=2 on uniform(2), uniform(4):", float(S(tsallis(2), [half] * 2)), float(S(tsallis(2), [mp.mpf(1) / 4] * 4)))
print("tsallis q=2 f(0.5):", float(tsallis(2)(half)))
print("bg on uniform(2):", float(S(bg(), [half] * 2)), " ln4:", float(mp.log(4)))
print("twopower(0.5,1.5) f(0.25):", float((mp.mpf(0.25)**0.5 - mp.mpf(0.25)**1.5) / 1))
print("power_h(0.5,0.5,2) sum over uniform(2):", float(2 * (0.5 * half + 0.5 * half**2)))
print("renyi(2) on uniform(3):", float(mp.log(mp.fsum([third**2] * 3)) / (1 - 2)), "ln3", float(mp.log(3)))
print("logpow(0.5,0.5,2) uniform(2):", float(mp.log(mp.mpf('0.75'))), "uniform(4):", float(mp.log(mp.mpf('0.625'))))
# Conjugated law for logpow(0.5,0.5,2), alpha = 2 at x = y = ln 0.75.
X = mp.mpf('0.75')
print("renyitype compose:", float(mp.log(X + X - 1 + 2 * (X - 1) * (X - 1))))

# First-variation example, f(t) = t - t^2, alpha = -1.
fp = lambda t: 1 - 2 * t
pa = [mp.mpf('0.5'), mp.mpf('0.3'), mp.mpf('0.2')]
pb = [mp.mpf('0.6'), mp.mpf('0.4')]
lhs = mp.fsum(b * (fp(pa[0] * b) - fp(pa[-1] * b)) for b in pb)
rhs = (1 - S(tsallis(2), pb)) * (fp(pa[0]) - fp(pa[-1]))
print("first variation lhs, rhs:", float(lhs), float(rhs))


# Brute-force alpha for tsallis: solve z = x + y + alpha x y on one random pair.
def alpha_oracle(q, c):
    f = tsallis(q, c)
    a = [mp.mpf(x) for x in ('0.1', '0.2', '0.3', '0.4')]
    b = [mp.mpf(x) for x in ('0.25', '0.75')]
    x, y = S(f, a), S(f, b)
    z = mp.fsum(f(ai * bj) for ai in a for bj in b)
    return (z - x - y) / (x * y)


for q, c in [(2, 1), (0.5, 1), (3, 2)]:
    print(f"alpha oracle q={q} c={c}:", mp.nstr(alpha_oracle(mp.mpf(q), c), 20))


# Brute-force alpha for power h: same for the h-trace, a=0.5, b=0.5 and b=1.
def h_alpha_oracle(a, b, q):
    h = lambda t: a * t + b * t**q
    pa = [mp.mpf(x) for x in ('0.1', '0.2', '0.3', '0.4')]
    pb = [mp.mpf(x) for x in ('0.25', '0.75')]
    x, y = S(h, pa), S(h, pb)
    z = mp.fsum(h(ai * bj) for ai in pa for bj in pb)
    beta = a + b
    return (z - x - y + beta) / ((x - beta) * (y - beta))


for a, b in [(0, 1), (0.5, 0.5), (1, -1)]:
    print(f"h alpha oracle a={a} b={b}:", mp.nstr(h_alpha_oracle(mp.mpf(a), mp.mpf(b), 2), 20))
