"""Smoke test for the `mmsecrecy` extension module.

Build and run from the repository root:

    cargo build --release -p mmwave-secrecy-py --features extension-module
    cp target/release/libmmsecrecy.so python/mmsecrecy.so
    python3 python/smoke.py
"""

import math
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import mmsecrecy as ms  # noqa: E402


def main() -> None:
    sc = ms.Scenario.preset(1)
    assert math.isclose(sc.carrier_frequency, 28e9)
    assert ms.Scenario.from_toml(sc.to_toml()).to_toml() == sc.to_toml()

    exact = ms.evaluate(sc, "exact")
    lower = ms.evaluate(sc, "lower")
    assert exact.rate_secrecy > 0.0
    assert lower.rate_typical <= exact.rate_typical
    print(exact)

    sim = ms.simulate(sc, trials=4000, seed=7)
    lo, hi = sim.typical_ci
    assert sim.n_trials == 4000
    assert lo - 0.05 < exact.rate_typical < hi + 0.05, (exact, sim)
    assert ms.simulate(sc, trials=4000, seed=7).rate_secrecy == sim.rate_secrecy
    print(sim, sim.secrecy_ci)

    rows = ms.sweep(sc, "tx_power_dbm", 0.0, 40.0, 3, ["exact", "lower"])
    assert [(v, m) for v, m, _ in rows][:2] == [(0.0, "exact"), (0.0, "lower")]
    assert all(isinstance(r, ms.RateReport) for _, _, r in rows)

    report = ms.validate(sc, trials=4000)
    for row in report.rows:
        print(row.method, row.quantity, row.check, row.analytic, row.mc_mean, row.passed)
    assert report.passed

    ula = ms.Scenario.preset(4)
    assert ula.applicable_methods() == ["ula"]
    assert ms.evaluate(ula, "ula").rate_secrecy > 0.0

    try:
        ms.evaluate(sc, "ula")
    except ValueError as e:
        print("expected error:", e)
    else:
        raise AssertionError("ula on a sectored scenario must fail")

    print("smoke ok")


if __name__ == "__main__":
    main()
