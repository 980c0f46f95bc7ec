"""Independent high-precision oracle for the frozen constants used in the C++ tests.

Run with `python3 tests/oracles/frozen_values.py`. Nothing here imports the
library; values are computed from vertex geometry and mpmath root finding.
"""
import mpmath as mp

mp.mp.dps = 40


def rect_vertices(cx, cy, theta, L, l):
    u = (mp.cos(theta), mp.sin(theta))
    v = (-mp.sin(theta), mp.cos(theta))
    out = []
    for a, b in ((-1, -1), (1, -1), (1, 1), (-1, 1)):
        out.append((cx + a * L / 2 * u[0] + b * l / 2 * v[0],
                    cy + a * L / 2 * u[1] + b * l / 2 * v[1]))
    return out


def hat_and_check(t, theta, L, l):
    vs = rect_vertices(0, 0, theta, L, l)
    xs = [p[0] for p in vs]
    ys = [p[1] for p in vs]
    hat = (max(xs) - min(xs), max(ys) - min(ys))
    p0, p1, p2, p3 = vs
    u = ((p1[0] - p0[0]) / L, (p1[1] - p0[1]) / L)
    # lower long side: distance tL from the right corner; upper: from the left corner
    a = (p1[0] - t * L * u[0], p1[1] - t * L * u[1])
    b = (p3[0] + t * L * u[0], p3[1] + t * L * u[1])
    check = (a[0] - b[0], b[1] - a[1])
    return hat, check, vs, a, b


def multipliers(t, theta, sigma):
    L = mp.sqrt(sigma)
    l = 1 / mp.sqrt(sigma)
    hat, check, *_ = hat_and_check(t, theta, L, l)
    return hat[0] * hat[1], check[0] * check[1]


def rho(t, theta, sigma):
    h, c = multipliers(t, theta, sigma)
    return h / c


def solve_sigma(t, rho0, theta):
    lo = 1 / (1 - 2 * t)
    hi = mp.cot(theta) / (1 - 2 * t)
    for _ in range(400):
        mid = (lo + hi) / 2
        _, c = multipliers(t, theta, mid)
        if c <= 0 or rho(t, theta, mid) > rho0:
            hi = mid
        else:
            lo = mid
    return lo


def main():
    t, theta, L, l = mp.mpf('0.25'), mp.mpf('0.1'), mp.mpf(9), mp.mpf(1)
    hat, check, vs, a, b = hat_and_check(t, theta, L, l)
    o = vs[0]
    print("figure1 vertices:", [(float(p[0] - o[0]), float(p[1] - o[1])) for p in vs])
    print("figure1 check corners:", [(float(q[0] - o[0]), float(q[1] - o[1])) for q in (a, b)])
    print("Lhat lhat Lcheck lcheck:", [float(x) for x in (*hat, *check)])
    h, c = multipliers(t, theta, 9)
    print("aHat aCheck(0.25,0.1,9):", float(h), float(c), "rho:", float(h / c))
    print("sigma_star(0.25,0.1):", float(mp.cot(theta) / (1 - 2 * t)),
          float((mp.cot(2 * theta) + mp.sqrt(1 + mp.cot(2 * theta) ** 2)) / (1 - 2 * t)))
    rho0 = mp.mpf(9)
    lb = ((1 - 2 * t) * rho0 - 1 / mp.cos(2 * theta)) / ((1 - 2 * t) ** 2 * rho0 + 1) * mp.cot(2 * theta)
    print("sigma_lower_bound(0.25,9,0.1):", float(lb))
    s = solve_sigma(t, rho0, theta)
    print("solve_sigma(0.25,9,0.1):", mp.nstr(s, 20))
    s2 = solve_sigma(t, rho0, mp.mpf('0.05'))
    print("solve_sigma(0.25,9,0.05):", mp.nstr(s2, 20))
    prods = []
    for k in range(3, 21):
        th = mp.mpf(2) ** -k
        prods.append(th * solve_sigma(t, rho0, th))
    print("theta*sigma k=3..20 min max ratio:", float(min(prods)), float(max(prods)),
          float(max(prods) / min(prods)))
    print("sigma_3 (N=9):", mp.nstr(4 / mp.sin(mp.mpf(2) ** -4 / 9), 20))
    for k in (20, 40):
        N = k * k
        sig = 4 / mp.sin(mp.mpf(2) ** (-k - 1) / N)
        print(f"necessity ratio k={k}:", mp.nstr(N * sig / (sig * (1 + mp.log(sig))), 20))


if __name__ == "__main__":
    main()
