"""Reference values for the special-function and secular-equation tests.

Everything here is computed with mpmath at 40 significant digits and is
independent of the Rust implementation. Re-run with
`python3 generate.py > reference_values.txt` and paste the tables into the
corresponding test files.
"""
import mpmath as mp

mp.mp.dps = 40
OMEGA = mp.exp(2j * mp.pi / 3)


def c(x):
    x = mp.mpc(x)
    return "c(%.17e, %.17e)" % (float(x.real), float(x.imag))


def airy_table():
    pts = [0, 1, -1, 2.5 + 1j, 3 + 2j, -7.3, 6.2 * mp.exp(0.4j), 5.5 * mp.exp(1.2j),
           12 - 5j, -15 + 1j, 25j, -30, 40 * mp.exp(2.5j), 8.9, 9.05, -9.0, 60 * mp.exp(-0.3j)]
    print("// (z, Ai, Ai', A_-, A_-')")
    for z in pts:
        z = mp.mpc(z)
        ai = mp.airyai(z)
        aip = mp.airyai(z, derivative=1)
        am = mp.airyai(OMEGA * z)
        amp = OMEGA * mp.airyai(OMEGA * z, derivative=1)
        print("(%s, %s, %s, %s, %s)," % (c(z), c(ai), c(aip), c(am), c(amp)))


def airy_zeros():
    print("// (zeta_k, Ai'(-zeta_k))")
    for k in range(1, 11):
        a = mp.airyaizero(k)
        print("(%.17e, %.17e)," % (float(-a), float(mp.airyai(a, derivative=1))))


def bessel_table():
    pts = [(0, 1), (1, 0.5), (5, 10 + 0.5j), (0, 100 - 3j), (3, 25 - 2j), (10, 3 - 1j),
           (50, 60 - 0.5j), (100, 95 - 0.2j), (7, 1.5 + 0.02j), (2, 500 - 5j),
           (20, 45 - 1j), (0, 0.01), (4, 18 - 9j), (40, 41 - 0.05j), (150, 200 - 4j),
           (1000, 1010 - 0.1j), (0, 39.5 - 1j), (1, 40.5 - 1j), (12, 2.1 - 0.3j),
           (3, -4 + 0.03j)]
    print("// (n, z, J, J', H1, H1')")
    for n, z in pts:
        z = mp.mpc(z)
        j = mp.besselj(n, z)
        jp = mp.besselj(n, z, derivative=1)
        h = mp.hankel1(n, z)
        hp = (mp.hankel1(n - 1, z) - mp.hankel1(n + 1, z)) / 2
        print("(%d, %s, %s, %s, %s, %s)," % (n, c(z), c(j), c(jp), c(h), c(hp)))


def scaled_bessel():
    print("// deep elliptic: (n, z, log|J|, log|H|, J*H)")
    for n, z in [(300, 0.5), (300, 5 - 0.1j), (100, 1 + 0.5j)]:
        z = mp.mpc(z)
        j = mp.besselj(n, z)
        h = mp.hankel1(n, z)
        print("(%d, %s, %.17e, %.17e, %s)," % (n, c(z), float(mp.log(abs(j))), float(mp.log(abs(h))), c(j * h)))


def langer():
    def zeta(x):
        x = mp.mpc(x)
        if mp.re(x) < 1:
            r = mp.sqrt(1 - x * x)
            a = mp.log((1 + r) / x) - r
            return (mp.mpf(3) / 2 * a) ** (mp.mpf(2) / 3)
        r = mp.sqrt(x * x - 1)
        b = r - mp.acos(1 / x)
        return -((mp.mpf(3) / 2 * b) ** (mp.mpf(2) / 3))

    print("// (z, zeta)")
    for x in [2, 0.5, 1.3 - 0.02j, 0.7 + 0.01j, 1.8 - 0.3j, 0.2]:
        print("(%s, %s)," % (c(x), c(zeta(x))))


def secular_roots():
    print("// (n, v, seed, root)")

    def F(n, v):
        return lambda lam: 1 - mp.pi * v / 2j * mp.besselj(n, lam) * mp.hankel1(n, lam)

    def lattice(n, k, v):
        base = mp.pi * (4 * k + 2 * n + 1) / 4
        return base - 0.5j * mp.log(1j * mp.pi * (4 * k + 2 * n + 1) / (2 * v) - 1)

    cases = [(0, 10, 1), (0, 3, 1), (3, 5, 2), (10, 5, 0.5), (0, 55, 175.0)]
    for n, k, v in cases:
        seed = lattice(n, k, v)
        r = mp.findroot(F(n, v), mp.mpc(seed), solver="muller")
        print("(%d, %.17e, %s, %s)," % (n, v, c(seed), c(r)))


def band_constant():
    a1 = mp.airyaizero(1)
    aip = mp.airyai(a1, derivative=1)
    am = mp.airyai(OMEGA * a1)
    cst = mp.cbrt(2) / (8 * mp.pi ** 2 * abs(am ** 3 * aip))
    print("// C_{1,1} = %.17e" % float(cst))


if __name__ == "__main__":
    airy_table()
    airy_zeros()
    bessel_table()
    scaled_bessel()
    langer()
    secular_roots()
    band_constant()
