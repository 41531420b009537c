#!/usr/bin/env python3
"""Print the benchmark tables: criterion norms, condition norms, regimes.

Sections:
  1. lambda * Frobenius norm for the five weight matrices of the web map
     corpus, over the standard steepness grid.
  2. Greyness condition norms at the final simulated state, both the
     gated matrix and the ungated variant, with the applicability flag.
  3. Verdict table for the three engines, at the standard 100-step
     horizon and again at a longer horizon (the slow transients near the
     bifurcation need roughly 110-160 steps to settle).

Usage: python3 scripts/reproduce_tables.py [--steps N] [--long N]
"""

import argparse

import greycog as gc

LAMS = (0.5, 1.0, 2.0, 4.0)


def kernels(model):
    return tuple(tuple(c.kernel for c in row) for row in model.weights)


def norm_grid():
    rows = (
        ("||W||", gc.frobenius_norm(gc.corpus.WEB_WEIGHTS)),
        ("||W*||", gc.frobenius_norm(
            gc.w_star(gc.inject_greyness(gc.corpus.WEB_WEIGHTS, 0.01)))),
        ("||K||", gc.frobenius_norm(kernels(gc.build("web_fggcm", 1.0)))),
        ("||K case1||", gc.frobenius_norm(kernels(gc.build("web_case1_fggcm", 1.0)))),
        ("||K case2||", gc.frobenius_norm(kernels(gc.build("web_case2_fggcm", 1.0)))),
    )
    print("criterion grid lambda*||.||_F (threshold 4)")
    print(f"{'matrix':<14}" + "".join(f"{lam:>10g}" for lam in LAMS))
    for label, norm in rows:
        print(f"{label:<14}" + "".join(f"{lam * norm:>10.4f}" for lam in LAMS))
    print()


def condition_norms(steps):
    print(f"greyness condition norms at the state after {steps} steps (threshold 1)")
    print(f"{'lambda':>8}{'gated':>12}{'ungated':>12}{'ungated applies':>18}")
    for lam in LAMS:
        m = gc.build("web_fggcm", lam)
        state = gc.simulate(m, steps).states[-1]
        ks = tuple(c.kernel for c in state)
        gs = tuple(c.greyness for c in state)
        gated = gc.frobenius_norm(gc.grey_condition_matrix(m.weights, ks, gs, lam))
        nxt = gc.fcm_step(kernels(m), ks, lam)
        full = gc.corollary3_check(m.weights, ks, nxt, gs)
        print(f"{lam:>8g}{gated:>12.6f}{full.norm:>12.6f}{str(full.applicable):>18}")
    print()


def regimes(steps):
    print(f"verdicts over {steps} steps (eps 1e-8, period cap 50)")
    print(f"{'variant':<14}" + "".join(f"{lam:>22g}" for lam in LAMS))
    for vid in ("web_fcm", "web_fgcm", "web_fggcm"):
        cells = []
        for lam in LAMS:
            cls = gc.classify(gc.simulate(gc.build(vid, lam), steps))
            if cls.verdict == "FixedPoint":
                cells.append(f"FixedPoint(t={cls.t_alpha})")
            elif cls.verdict == "LimitCycle":
                cells.append(f"LimitCycle(P={cls.period},t={cls.t_alpha})")
            else:
                cells.append("Chaotic")
        print(f"{vid:<14}" + "".join(f"{c:>22}" for c in cells))
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=100,
                    help="standard horizon (default 100)")
    ap.add_argument("--long", type=int, default=200,
                    help="extended horizon for the slow transients (default 200)")
    args = ap.parse_args()

    norm_grid()
    condition_norms(args.steps)
    regimes(args.steps)
    if args.long > args.steps:
        regimes(args.long)


if __name__ == "__main__":
    main()
