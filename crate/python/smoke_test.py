"""Smoke test for the frac_bernoulli_py extension module.

Build and run from the repository root:

    python3 python/build.py
    python3 python/smoke_test.py
"""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import frac_bernoulli_py as fb


def main():
    spec = fb.ProblemSpec.logistic(1.0, 1, 0.5)
    table = fb.compute_coefficients(spec, 200)
    assert table.d(1, 0) == 0.5
    assert table.d(1, 1) == 0.25
    assert table.overflow_at is None

    sol = fb.SeriesSolution(table)
    u = sol.evaluate(1.0)
    exact = math.e / (1.0 + math.e)
    assert abs(u - exact) < 1e-12, (u, exact)
    assert abs(fb.exact_beta1(spec, 1.0) - exact) < 1e-15
    assert abs(sol.residual(0.5)) < 1e-12

    frac = fb.solve(fb.ProblemSpec.logistic(0.5, 1, 0.5))
    t_max = frac.safe_t_max()
    assert 0.0 < t_max < 10.0
    path = fb.abm_solve(frac.spec, 0.5, 2048)
    worst = max(abs(frac.evaluate(t) - v) for t, v in path)
    assert worst < 1e-3, worst

    radius = fb.radius_sequence(fb.compute_coefficients(fb.ProblemSpec.logistic(1.0, 1, 1 / 3), 300))
    assert abs(radius.tail_summary - math.hypot(math.log(2.0), math.pi)) < 0.05 * 3.217

    assert abs(fb.ln_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-15
    assert abs(fb.gen_binom(5, 2, 1.0) - 10.0) < 1e-12
    roots = fb.solve_c3_zero(1.0, -1.0, -1.0, 1)
    assert [round(r, 10) for r in roots] == [round((3 - math.sqrt(3)) / 6, 10), round((3 + math.sqrt(3)) / 6, 10)]

    hp = fb.highprec_coefficients(spec, 40)
    assert all(abs(a - b) <= 1e-9 * abs(b) for a, b in zip(table.d1()[:41], hp) if b != 0.0)

    try:
        fb.ProblemSpec(1.5, -1.0, -1.0, 1, 0.5)
    except ValueError:
        pass
    else:
        raise AssertionError("beta > 1 accepted")
    try:
        table.d(1, 500)
    except IndexError:
        pass
    else:
        raise AssertionError("out-of-range order accepted")

    print("smoke test passed:", repr(spec), f"u(1) = {u:.15f}")


if __name__ == "__main__":
    main()
