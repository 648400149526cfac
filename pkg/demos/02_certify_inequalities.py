"""Certifying the sign inequalities A(t) < 0 and B(t) > 0 on (0, oo).

The Laplace densities A and B determine the functions a and b; their signs
on the whole half-line are what make g admissible for the linear programming
bound.  This demo builds the order-6 exponential-polynomial models, runs the
interval-arithmetic bisection plus the analytic tail argument, prints the
resulting certificates, and shows that the order-1 control model fails --
the certification is not vacuous.
"""

import json

from e8magic import build_model, certify_sign
from e8magic.certify import NEAR_INFINITY


def describe(cert) -> None:
    print(f"target {cert.target}: {cert.status}")
    print(f"  parameters: n=m={cert.n}, T*={cert.t_star}, max_depth={cert.max_depth}")
    print(f"  leaves: {len(cert.segments)}, minimal margin {cert.min_margin:.6g}")
    for chart in ("t", "u"):
        segs = [s for s in cert.segments if s.chart == chart]
        if not segs:
            continue
        worst = min(segs, key=lambda s: s.margin)
        print(
            f"  chart {chart}: {len(segs)} segments on [1, {cert.t_star}], "
            f"tightest at [{worst.lo:.4g}, {worst.hi:.4g}] margin {worst.margin:.4g}"
        )
    for tail in cert.tails:
        print(
            f"  tail ({tail.chart}-chart, x >= {tail.x_star}): dominant {tail.dominant}, "
            f"competitor ratio sum {tail.epsilon_hi:.3g} < 1"
        )


def main() -> None:
    print("== the order-6 truncation models ==")
    for target in ("A", "B"):
        model = build_model(target, 6, NEAR_INFINITY)
        print(f"{target} near infinity: {len(model.terms)} terms, e.g.")
        for term in sorted(model.terms, key=lambda t: (t.decay, -t.p))[:3]:
            rate = -term.decay
            sign = "+" if rate >= 0 else "-"
            print(
                f"   ({term.coeff}) / pi^{term.pi_pow} * t^{term.p}"
                f" * e^({sign}{abs(rate)} pi t)"
            )

    print("\n== certification ==")
    for target in ("A", "B"):
        describe(certify_sign(target))
        print()

    print("== control run: the order-1 model is too coarse near t = 1 ==")
    control = certify_sign("A", n=1, m=1)
    print(f"status: {control.status}")
    print(f"failure location (chart, lo, hi): {control.failure_location}")

    print("\n== machine-checkable certificate (excerpt) ==")
    doc = certify_sign("A").to_doc()
    excerpt = {k: doc[k] for k in ("target", "parameters", "status", "tail")}
    excerpt["segments"] = doc["segments"][:2] + ["..."]
    print(json.dumps(excerpt, indent=2, default=str))


if __name__ == "__main__":
    main()
